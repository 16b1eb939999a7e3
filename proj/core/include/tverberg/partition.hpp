#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tverberg {

/// Unordered partition of {0,...,n-1} into nonempty blocks, held in canonical
/// form: each block sorted ascending, blocks ordered by their minimum element.
/// Canonical form makes set-of-partitions comparisons plain equality.
class Partition {
public:
  Partition() = default;

  /// Validates disjointness, nonemptiness, completeness, and index range,
  /// then canonicalizes. Throws std::invalid_argument on violation.
  static Partition from_blocks(std::vector<std::vector<int>> blocks, int element_count);

  int element_count() const { return element_count_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

  /// Block sizes sorted descending.
  std::vector<int> induced_integer_partition() const;

  bool operator==(const Partition& other) const {
    return element_count_ == other.element_count_ && blocks_ == other.blocks_;
  }
  bool operator!=(const Partition& other) const { return !(*this == other); }
  /// Lexicographic on the canonical block lists; total order for sorting.
  bool operator<(const Partition& other) const { return blocks_ < other.blocks_; }

private:
  std::vector<std::vector<int>> blocks_;
  int element_count_ = 0;
};

inline std::vector<int> induced_integer_partition(const Partition& partition) {
  return partition.induced_integer_partition();
}

std::ostream& operator<<(std::ostream& os, const Partition& partition);

/// Guard against combinatorial explosion: S(n, r) grows too fast past this.
inline constexpr int kDefaultEnumerationCap = 14;

class EnumerationCapExceeded : public std::runtime_error {
public:
  explicit EnumerationCapExceeded(const std::string& message) : std::runtime_error(message) {}
};

/// Streams every partition of {0,...,n-1} into exactly r nonempty blocks, in
/// restricted-growth-string order. The stream order is deterministic so golden
/// outputs stay stable. Total count is the Stirling number S(n, r).
class SetPartitionEnumerator {
public:
  /// Throws std::invalid_argument unless 1 <= r <= n, EnumerationCapExceeded
  /// if n exceeds the cap.
  SetPartitionEnumerator(int element_count, int block_count, int cap = kDefaultEnumerationCap);

  /// Next partition in stream order, or nullopt once exhausted.
  std::optional<Partition> next();

private:
  bool advance();
  Partition current() const;
  void fill_minimal_suffix(int from, int prefix_max);

  int n_ = 0;
  int r_ = 0;
  std::vector<int> code_;
  bool exhausted_ = false;
  bool fresh_ = true;
};

/// Collects the full stream. Same preconditions as the enumerator.
std::vector<Partition> enumerate_set_partitions(int n, int r, int cap = kDefaultEnumerationCap);

}  // namespace tverberg
