#pragma once

#include "tverberg/feasibility.hpp"
#include "tverberg/point.hpp"

#include <vector>

namespace tverberg {

struct HullMembership {
  bool member = false;
  /// Convex coefficients over the input points: >= 0, sum exactly 1,
  /// reproduce the query point exactly. Set iff member.
  std::vector<Rational> coefficients;
};

/// Is p a convex combination of the given points? conv(∅) is empty by
/// convention, so an empty point list is rejected (std::invalid_argument),
/// as is any dimension mismatch.
HullMembership hull_membership(const Point& p, const std::vector<Point>& points);

struct CommonPointWitness {
  bool found = false;
  Point point;
  /// Per-block convex coefficients expressing the witness in each hull.
  std::vector<std::vector<Rational>> coefficients;
};

/// A point in the intersection of the blocks' convex hulls, if one exists.
/// Encoded as one feasibility solve: variables λ_{i,k} >= 0 per point k of
/// block i, one convexity row per block, and d rows per block i >= 2 tying
/// block i's combination to block 1's. Empty blocks are rejected.
CommonPointWitness hulls_common_point(const std::vector<std::vector<Point>>& blocks);

/// The feasibility system behind hulls_common_point, exposed so callers can
/// optimize linear functionals (e.g. witness coordinates) over the same
/// intersection polytope.
FeasibilitySystem common_point_system(const std::vector<std::vector<Point>>& blocks);

/// Objective vector picking coordinate j of the witness point (expressed
/// through block 1's variables) in a common_point_system.
std::vector<Rational> common_point_coordinate_objective(
    const std::vector<std::vector<Point>>& blocks, int coordinate);

}  // namespace tverberg
