#include "tverberg/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tverberg {

Partition Partition::from_blocks(std::vector<std::vector<int>> blocks, int element_count) {
  if (element_count < 0) throw std::invalid_argument("partition: negative element count");
  std::vector<char> seen(static_cast<std::size_t>(element_count), 0);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition: empty block");
    std::sort(block.begin(), block.end());
    for (int index : block) {
      if (index < 0 || index >= element_count)
        throw std::invalid_argument("partition: index out of range");
      if (seen[static_cast<std::size_t>(index)])
        throw std::invalid_argument("partition: duplicate index");
      seen[static_cast<std::size_t>(index)] = 1;
      ++covered;
    }
  }
  if (covered != element_count)
    throw std::invalid_argument("partition: blocks do not cover the index set");
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  Partition p;
  p.blocks_ = std::move(blocks);
  p.element_count_ = element_count;
  return p;
}

std::vector<int> Partition::induced_integer_partition() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& block : blocks_) sizes.push_back(static_cast<int>(block.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

std::ostream& operator<<(std::ostream& os, const Partition& partition) {
  bool first_block = true;
  for (const auto& block : partition.blocks()) {
    if (!first_block) os << '|';
    first_block = false;
    bool first_index = true;
    for (int index : block) {
      if (!first_index) os << ',';
      first_index = false;
      os << index;
    }
  }
  return os;
}

SetPartitionEnumerator::SetPartitionEnumerator(int element_count, int block_count, int cap)
    : n_(element_count), r_(block_count) {
  if (r_ < 1 || r_ > n_)
    throw std::invalid_argument("enumerate_set_partitions: need 1 <= r <= n");
  if (n_ > cap) {
    std::ostringstream message;
    message << "enumerate_set_partitions: n = " << n_ << " exceeds the cap " << cap
            << "; the partition count S(n, r) grows too fast to sweep (raise the cap to override)";
    throw EnumerationCapExceeded(message.str());
  }
  code_.assign(static_cast<std::size_t>(n_), 0);
  fill_minimal_suffix(0, -1);
}

// Smallest valid continuation of code_[from..]: zeros until the tail must
// climb to reach block value r-1 by the end.
void SetPartitionEnumerator::fill_minimal_suffix(int from, int prefix_max) {
  int current_max = prefix_max;
  for (int t = from; t < n_; ++t) {
    if (n_ - t > r_ - 1 - current_max) {
      code_[static_cast<std::size_t>(t)] = 0;
    } else {
      code_[static_cast<std::size_t>(t)] = current_max + 1;
      ++current_max;
    }
  }
}

bool SetPartitionEnumerator::advance() {
  // Rightmost position that can still be incremented within the growth rule
  // a[i] <= min(max(a[0..i-1]) + 1, r - 1) while leaving the tail reachable.
  std::vector<int> prefix_max(static_cast<std::size_t>(n_), 0);
  int running = -1;
  for (int i = 0; i < n_; ++i) {
    prefix_max[static_cast<std::size_t>(i)] = running;
    running = std::max(running, code_[static_cast<std::size_t>(i)]);
  }
  for (int i = n_ - 1; i >= 1; --i) {
    int limit = std::min(prefix_max[static_cast<std::size_t>(i)] + 1, r_ - 1);
    if (code_[static_cast<std::size_t>(i)] < limit) {
      ++code_[static_cast<std::size_t>(i)];
      int new_max = std::max(prefix_max[static_cast<std::size_t>(i)], code_[static_cast<std::size_t>(i)]);
      fill_minimal_suffix(i + 1, new_max);
      return true;
    }
  }
  return false;
}

Partition SetPartitionEnumerator::current() const {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(r_));
  for (int i = 0; i < n_; ++i)
    blocks[static_cast<std::size_t>(code_[static_cast<std::size_t>(i)])].push_back(i);
  // Growth strings index blocks by first occurrence, so the blocks land in
  // canonical order already; from_blocks re-checks and is cheap at this size.
  return Partition::from_blocks(std::move(blocks), n_);
}

std::optional<Partition> SetPartitionEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    return current();
  }
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return current();
}

std::vector<Partition> enumerate_set_partitions(int n, int r, int cap) {
  SetPartitionEnumerator stream(n, r, cap);
  std::vector<Partition> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace tverberg
