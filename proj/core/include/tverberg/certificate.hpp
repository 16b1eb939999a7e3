#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tverberg/construction.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/point.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// Proof object for "the hulls of the partition's blocks share the witness":
/// per block, convex coefficients writing the witness as a combination of the
/// block's points. Checkable by substitution alone, independent of any solver.
struct TverbergCertificate {
  Partition partition;
  Point witness;
  /// coefficients[b][k] weights partition.block(b)[k]; each list is nonnegative
  /// and sums to one.
  std::vector<std::vector<Rational>> coefficients;
};

/// First violated condition as text, or nullopt when the certificate checks
/// out. Pure exact arithmetic; no feasibility solve involved.
std::optional<std::string> certificate_error(const PointSet& points, const TverbergCertificate& certificate);

inline bool certificate_valid(const PointSet& points, const TverbergCertificate& certificate) {
  return !certificate_error(points, certificate).has_value();
}

}  // namespace tverberg
