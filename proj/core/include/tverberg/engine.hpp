#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tverberg/certificate.hpp"
#include "tverberg/construction.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/point.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// Certificate iff the blocks' convex hulls share a point. Every returned
/// certificate has already been re-validated by exact substitution.
std::optional<TverbergCertificate> is_tverberg(const PointSet& points, const Partition& partition);

struct EnumerationOptions {
  int cap = kDefaultEnumerationCap;
  /// Workers splitting the partition stream; results are merged and sorted, so
  /// the output is identical for every job count.
  int jobs = 1;
};

/// All partitions of the index set into r nonempty blocks whose hulls share a
/// point, as certificates, sorted canonically.
std::vector<TverbergCertificate> brute_force_tverberg_partitions(const PointSet& points, int r,
                                                                 const EnumerationOptions& options = {});

/// One bijection per coordinate axis from that axis's multiplier values onto
/// the blocks that do not own the axis.
struct BijectionTuple {
  /// target_block[j][k-1] = block receiving the axis point with multiplier k on
  /// axis j. Each row is a bijection onto {0..r-1} minus the axis owner.
  std::vector<std::vector<int>> target_block;
};

std::vector<BijectionTuple> enumerate_bijection_tuples(const ConstructionSpec& spec);

/// Partition induced by a bijection tuple: block i holds its anchor plus the
/// axis points mapped to i. Requires construction labels.
Partition closed_form_partition(const PointSet& points, const BijectionTuple& tuple);

/// All partitions induced by bijection tuples, in tuple order. For a valid
/// constructed set this emits exactly prod_j (r-1)! distinct partitions.
std::vector<Partition> closed_form_partitions(const PointSet& points);

/// Exact coordinate-wise [min, max] of the intersection of the blocks' hulls;
/// nullopt when the intersection is empty.
std::optional<std::vector<std::pair<Rational, Rational>>> tverberg_point_set_bounds(
    const PointSet& points, const Partition& partition);

struct IncidenceProfile {
  /// renumbered_block[i] = canonical block containing anchor i; empty when the
  /// anchors do not hit pairwise distinct blocks.
  std::vector<int> renumbered_block;
  /// Counts per renumbered block: anchors, then axis points per axis.
  std::vector<int> anchor_counts;
  std::vector<std::vector<int>> axis_counts;
  /// True when every block holds exactly one anchor and block i holds exactly
  /// one point of axis j unless i owns axis j (then none).
  bool matches_construction = false;
  std::optional<std::string> violation;
};

/// Incidence counts of a partition against the construction labels, after
/// renumbering blocks so that block i is the one holding anchor i.
IncidenceProfile incidence_profile(const PointSet& points, const Partition& partition);

/// Moves one removable point out of the largest oversized block into the
/// smallest other block, keeping the witness fixed. Tie-breaks are pinned for
/// reproducibility: earliest oversized block, lowest removable point index,
/// earliest smallest target block. nullopt when every block already has at
/// most dimension + 1 points.
std::optional<TverbergCertificate> caratheodory_shift(const PointSet& points,
                                                      const TverbergCertificate& certificate);

struct ClauseReport {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int cap = kDefaultEnumerationCap;
  int jobs = 1;
};

struct VerifyReport {
  std::vector<ClauseReport> clauses;
  bool all_pass = false;
  long long partition_count = 0;
  Integer expected_count;
};

/// Four-clause check of a constructed point set against the partition laws:
/// induced-parts (every certified partition induces the spec's part sizes),
/// unique-point (the intersection polytope is one point; the origin for
/// unperturbed sets), oracle-equivalence (brute force and closed form agree),
/// count (exactly [(r-1)!]^d certified partitions).
VerifyReport verify_point_set(const PointSet& points, const VerifyOptions& options = {});
VerifyReport verify_construction(const ConstructionSpec& spec, const VerifyOptions& options = {});

/// [(r-1)!]^d, the conjectured lower bound on the Tverberg partition count.
Integer sierksma_bound(int dimension, int r);

struct SierksmaReport {
  long long count = 0;
  Integer bound;
  Rational ratio;
  bool below_bound = false;
};

/// Observed partition count against the conjectured bound. Reports only; a
/// ratio below 1 is flagged, never asserted away.
SierksmaReport sierksma_report(const PointSet& points, int r, const EnumerationOptions& options = {});

/// Uniformly random integer coordinates in [-coordinate_bound, coordinate_bound],
/// resampled until every d+1 points are affinely independent. Deterministic in
/// the seed across platforms.
PointSet random_point_set(int dimension, int count, std::uint64_t seed, int coordinate_bound = 1000);

}  // namespace tverberg
