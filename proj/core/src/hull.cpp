#include "tverberg/hull.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tverberg {

namespace {

void check_blocks(const std::vector<std::vector<Point>>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("hulls_common_point: no blocks");
  const int d = blocks.front().empty() ? -1 : blocks.front().front().dimension();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty())
      throw std::invalid_argument("hulls_common_point: block " + std::to_string(i + 1) +
                                  " is empty; conv(∅) = ∅");
    for (const auto& p : blocks[i]) {
      if (p.dimension() != d)
        throw std::invalid_argument("hulls_common_point: dimension mismatch");
    }
  }
}

}  // namespace

HullMembership hull_membership(const Point& p, const std::vector<Point>& points) {
  if (points.empty())
    throw std::invalid_argument("hull_membership: empty point list; conv(∅) = ∅");
  const int d = p.dimension();
  for (const auto& q : points) {
    if (q.dimension() != d)
      throw std::invalid_argument("hull_membership: dimension mismatch");
  }

  // Σ λ_k q_k = p (d rows) and Σ λ_k = 1, λ >= 0.
  FeasibilitySystem sys;
  const std::size_t n = points.size();
  sys.matrix.assign(static_cast<std::size_t>(d) + 1, std::vector<Rational>(n));
  sys.rhs.assign(static_cast<std::size_t>(d) + 1, Rational(0));
  for (int j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < n; ++k) sys.matrix[static_cast<std::size_t>(j)][k] = points[k][j];
    sys.rhs[static_cast<std::size_t>(j)] = p[j];
  }
  for (std::size_t k = 0; k < n; ++k) sys.matrix[static_cast<std::size_t>(d)][k] = Rational(1);
  sys.rhs[static_cast<std::size_t>(d)] = Rational(1);

  auto solved = solve_feasibility(sys);
  HullMembership result;
  result.member = solved.feasible;
  if (solved.feasible) result.coefficients = std::move(solved.assignment);
  return result;
}

FeasibilitySystem common_point_system(const std::vector<std::vector<Point>>& blocks) {
  check_blocks(blocks);
  const int r = static_cast<int>(blocks.size());
  const int d = blocks.front().front().dimension();

  std::size_t vars = 0;
  std::vector<std::size_t> offset(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    offset[i] = vars;
    vars += blocks[i].size();
  }

  const std::size_t rows = static_cast<std::size_t>(r) +
                           static_cast<std::size_t>(d) * static_cast<std::size_t>(r - 1);
  FeasibilitySystem sys;
  sys.matrix.assign(rows, std::vector<Rational>(vars));
  sys.rhs.assign(rows, Rational(0));

  // One convexity row per block.
  for (int i = 0; i < r; ++i) {
    auto& row = sys.matrix[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < blocks[static_cast<std::size_t>(i)].size(); ++k)
      row[offset[static_cast<std::size_t>(i)] + k] = Rational(1);
    sys.rhs[static_cast<std::size_t>(i)] = Rational(1);
  }

  // Block 1's combination minus block i's, coordinate by coordinate.
  std::size_t row_index = static_cast<std::size_t>(r);
  for (int i = 1; i < r; ++i) {
    for (int j = 0; j < d; ++j, ++row_index) {
      auto& row = sys.matrix[row_index];
      for (std::size_t k = 0; k < blocks[0].size(); ++k)
        row[offset[0] + k] = blocks[0][k][j];
      for (std::size_t k = 0; k < blocks[static_cast<std::size_t>(i)].size(); ++k)
        row[offset[static_cast<std::size_t>(i)] + k] = -blocks[static_cast<std::size_t>(i)][k][j];
    }
  }
  return sys;
}

std::vector<Rational> common_point_coordinate_objective(
    const std::vector<std::vector<Point>>& blocks, int coordinate) {
  check_blocks(blocks);
  std::size_t vars = 0;
  for (const auto& block : blocks) vars += block.size();
  std::vector<Rational> objective(vars);
  for (std::size_t k = 0; k < blocks.front().size(); ++k)
    objective[k] = blocks.front()[k][coordinate];
  return objective;
}

CommonPointWitness hulls_common_point(const std::vector<std::vector<Point>>& blocks) {
  auto sys = common_point_system(blocks);
  auto solved = solve_feasibility(sys);

  CommonPointWitness result;
  result.found = solved.feasible;
  if (!solved.feasible) return result;

  const int d = blocks.front().front().dimension();
  result.coefficients.reserve(blocks.size());
  std::size_t v = 0;
  for (const auto& block : blocks) {
    result.coefficients.emplace_back(solved.assignment.begin() + static_cast<std::ptrdiff_t>(v),
                                     solved.assignment.begin() +
                                         static_cast<std::ptrdiff_t>(v + block.size()));
    v += block.size();
  }
  result.point = Point::zero(d);
  for (std::size_t k = 0; k < blocks.front().size(); ++k)
    result.point += result.coefficients.front()[k] * blocks.front()[k];
  return result;
}

}  // namespace tverberg
