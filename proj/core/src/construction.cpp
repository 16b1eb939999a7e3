#include "tverberg/construction.hpp"

#include <random>
#include <stdexcept>

namespace tverberg {

std::optional<std::string> validate_parts(int d, int r, const std::vector<int>& parts) {
  if (d < 1) return "d < 1";
  if (r < 2) return "r < 2";
  if (static_cast<int>(parts.size()) != r)
    return "expected " + std::to_string(r) + " parts, got " + std::to_string(parts.size());
  long long sum = 0;
  for (int a : parts) sum += a;
  const int n = tverberg_number(d, r);
  if (sum != n)
    return "sum of parts is " + std::to_string(sum) + ", expected T(d,r) = " + std::to_string(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return "a_" + std::to_string(i + 1) + " < 1";
    if (parts[i] > d + 1) return "a_" + std::to_string(i + 1) + " > d+1";
  }
  return std::nullopt;
}

std::vector<int> assign_color_map(int d, int r, const std::vector<int>& parts) {
  if (auto violation = validate_parts(d, r, parts))
    throw std::invalid_argument("assign_color_map: " + *violation);
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < r; ++i) {
    const int deficit = d + 1 - parts[static_cast<std::size_t>(i)];
    for (int c = 0; c < deficit; ++c) colors.push_back(i);
  }
  // Σ (d+1-a_i) = r(d+1) - n = d, so exactly every coordinate got a color.
  if (static_cast<int>(colors.size()) != d)
    throw std::logic_error("assign_color_map: deficits do not sum to d");
  return colors;
}

ConstructionSpec ConstructionSpec::make(int d, int r, std::vector<int> parts, bool multiset) {
  if (auto violation = validate_parts(d, r, parts))
    throw std::invalid_argument(*violation);
  ConstructionSpec spec;
  spec.dimension = d;
  spec.block_count = r;
  spec.color_map = assign_color_map(d, r, parts);
  spec.parts = std::move(parts);
  spec.multiset = multiset;
  return spec;
}

ConstructionSpec ConstructionSpec::make_with_color_map(int d, int r, std::vector<int> parts,
                                                       std::vector<int> color_map,
                                                       bool multiset) {
  if (auto violation = validate_parts(d, r, parts))
    throw std::invalid_argument(*violation);
  if (static_cast<int>(color_map.size()) != d)
    throw std::invalid_argument("color map must assign every coordinate");
  std::vector<int> received(static_cast<std::size_t>(r), 0);
  for (int c : color_map) {
    if (c < 0 || c >= r) throw std::invalid_argument("color map value out of range");
    ++received[static_cast<std::size_t>(c)];
  }
  for (int i = 0; i < r; ++i) {
    if (received[static_cast<std::size_t>(i)] != d + 1 - parts[static_cast<std::size_t>(i)])
      throw std::invalid_argument("color map violates the per-block coordinate counts");
  }
  ConstructionSpec spec;
  spec.dimension = d;
  spec.block_count = r;
  spec.parts = std::move(parts);
  spec.color_map = std::move(color_map);
  spec.multiset = multiset;
  return spec;
}

PointSet PointSet::unlabeled(int dimension, std::vector<Point> points, bool perturbed) {
  for (const auto& p : points) {
    if (p.dimension() != dimension)
      throw std::invalid_argument("PointSet: point dimension mismatch");
  }
  PointSet X;
  X.dimension_ = dimension;
  X.points_ = std::move(points);
  X.perturbed_ = perturbed;
  return X;
}

PointSet PointSet::labeled(int dimension, std::vector<Point> points,
                           std::vector<PointLabel> labels,
                           std::optional<ConstructionSpec> spec, bool perturbed) {
  if (labels.size() != points.size())
    throw std::invalid_argument("PointSet: label count must match point count");
  PointSet X = unlabeled(dimension, std::move(points));
  X.labels_ = std::move(labels);
  X.spec_ = std::move(spec);
  X.perturbed_ = perturbed;
  return X;
}

PointSet build_point_set(const ConstructionSpec& spec) {
  const int d = spec.dimension;
  const int r = spec.block_count;

  std::vector<Point> points;
  std::vector<PointLabel> labels;
  points.reserve(static_cast<std::size_t>(spec.total_points()));
  labels.reserve(static_cast<std::size_t>(spec.total_points()));

  // Anchors first: coordinate j of block i's anchor is 0 when the
  // coordinate is colored with i, and -(i+1) otherwise (1-based block
  // numbering in the values themselves).
  for (int i = 0; i < r; ++i) {
    Point p = Point::zero(d);
    for (int j = 0; j < d; ++j) {
      if (spec.color_map[static_cast<std::size_t>(j)] != i) p[j] = Rational(-(i + 1));
    }
    points.push_back(std::move(p));
    labels.push_back(PointLabel::anchor_of(i));
  }

  // Axis groups: k e^j for k = 1..r-1, or r-1 copies of e^j in multiset mode.
  for (int j = 0; j < d; ++j) {
    for (int k = 1; k <= r - 1; ++k) {
      Point p = Point::zero(d);
      p[j] = Rational(spec.multiset ? 1 : k);
      points.push_back(std::move(p));
      labels.push_back(PointLabel::axis_of(j, k));
    }
  }

  return PointSet::labeled(d, std::move(points), std::move(labels), spec, false);
}

PointSet perturb(const PointSet& X, const Rational& epsilon, std::uint64_t seed,
                 std::int64_t denominator_bound) {
  if (epsilon.sign() <= 0) throw std::invalid_argument("perturb: epsilon must be positive");
  if (denominator_bound < 1)
    throw std::invalid_argument("perturb: denominator bound must be positive");

  // mt19937_64 output is pinned by the standard, so the offsets are
  // reproducible across platforms. The modulo bias over 2*bound+1 buckets
  // is irrelevant here; determinism is the contract.
  std::mt19937_64 rng(seed);
  const std::uint64_t buckets = 2 * static_cast<std::uint64_t>(denominator_bound) + 1;

  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(X.size()));
  for (int i = 0; i < X.size(); ++i) {
    Point p = X[i];
    for (int j = 0; j < X.dimension(); ++j) {
      const std::int64_t k =
          static_cast<std::int64_t>(rng() % buckets) - denominator_bound;
      p[j] += Rational(k, denominator_bound) * epsilon;
    }
    points.push_back(std::move(p));
  }

  if (X.labeled_set())
    return PointSet::labeled(X.dimension(), std::move(points), X.labels(), X.spec(), true);
  PointSet Y = PointSet::unlabeled(X.dimension(), std::move(points));
  return Y;
}

}  // namespace tverberg
