#pragma once

#include "tverberg/point.hpp"
#include "tverberg/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tverberg {

/// Tverberg number T(d,r) = (d+1)(r-1)+1, the forced total point count.
constexpr int tverberg_number(int d, int r) { return (d + 1) * (r - 1) + 1; }

/// Checks d >= 1, r >= 2, |parts| = r, Σ a_i = T(d,r) and 1 <= a_i <= d+1.
/// Returns the first violated condition as a message, or nullopt when the
/// parts are admissible.
std::optional<std::string> validate_parts(int d, int r, const std::vector<int>& parts);

/// Canonical coordinate coloring: scanning blocks in order, block i receives
/// the next d+1-a_i coordinates. The result satisfies
/// #{j : color(j) = i} = d+1-a_i for every block. Blocks and coordinates are
/// 0-based here; files and reports print them 1-based.
std::vector<int> assign_color_map(int d, int r, const std::vector<int>& parts);

/// Everything that determines one constructed point set.
struct ConstructionSpec {
  int dimension = 0;           // d
  int block_count = 0;         // r
  std::vector<int> parts;      // a_1..a_r
  std::vector<int> color_map;  // color per coordinate, 0-based block ids
  bool multiset = false;       // axis groups collapse to r-1 copies of e^j

  /// parts-validated spec with the canonical color map. Throws
  /// std::invalid_argument carrying the violation message.
  static ConstructionSpec make(int d, int r, std::vector<int> parts, bool multiset = false);

  /// Same, but with an explicit color map (validated against the parts).
  static ConstructionSpec make_with_color_map(int d, int r, std::vector<int> parts,
                                              std::vector<int> color_map, bool multiset = false);

  int total_points() const { return tverberg_number(dimension, block_count); }

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

/// Identifies a point's role inside a constructed set: either the anchor
/// point of one block ("A i=…" in files) or a positive multiple of a basis
/// vector ("A_j j=… k=…").
struct PointLabel {
  enum class Kind { anchor, axis };
  Kind kind = Kind::anchor;
  int block = -1;      // anchor: 0-based block id
  int axis = -1;       // axis: 0-based coordinate j
  int multiplier = 0;  // axis: k in 1..r-1

  static PointLabel anchor_of(int block) { return {Kind::anchor, block, -1, 0}; }
  static PointLabel axis_of(int axis, int multiplier) {
    return {Kind::axis, -1, axis, multiplier};
  }

  friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

/// An indexed list of rational points, possibly a multiset. When built by
/// the construction it also carries per-point labels and the originating
/// spec; hand-written files may leave both out.
class PointSet {
 public:
  PointSet() = default;

  static PointSet unlabeled(int dimension, std::vector<Point> points, bool perturbed = false);
  static PointSet labeled(int dimension, std::vector<Point> points,
                          std::vector<PointLabel> labels,
                          std::optional<ConstructionSpec> spec, bool perturbed);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }

  bool labeled_set() const { return !labels_.empty(); }
  const std::vector<PointLabel>& labels() const { return labels_; }
  const std::optional<ConstructionSpec>& spec() const { return spec_; }
  bool perturbed() const { return perturbed_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dimension_ = 0;
  std::vector<Point> points_;
  std::vector<PointLabel> labels_;
  std::optional<ConstructionSpec> spec_;
  bool perturbed_ = false;
};

/// Builds the constructed set X: the r block anchors first (block i's anchor
/// has coordinate j equal to 0 when color(j) = i and -(i+1) otherwise,
/// printing blocks 1-based), then for each coordinate j the r-1 axis points
/// k·e^j, k = 1..r-1 (or r-1 copies of e^j in multiset mode). Deterministic:
/// the same spec always yields the identical set.
PointSet build_point_set(const ConstructionSpec& spec);

inline constexpr std::int64_t kDefaultPerturbDenominator = 1000000;

/// Shifts every coordinate by an independent uniform rational offset in
/// [-epsilon, epsilon] with denominator bounded by denominator_bound times
/// epsilon's own. Deterministic in (X, epsilon, seed); labels and spec are
/// preserved and the result is marked perturbed. epsilon must be positive.
PointSet perturb(const PointSet& X, const Rational& epsilon, std::uint64_t seed,
                 std::int64_t denominator_bound = kDefaultPerturbDenominator);

}  // namespace tverberg
