#include "tverberg/engine.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tverberg/feasibility.hpp"
#include "tverberg/hull.hpp"

namespace tverberg {
namespace {

std::vector<std::vector<Point>> partition_blocks(const PointSet& points, const Partition& partition) {
  if (partition.element_count() != points.size())
    throw std::invalid_argument("partition element count differs from the point set size");
  std::vector<std::vector<Point>> blocks;
  blocks.reserve(static_cast<std::size_t>(partition.block_count()));
  for (const auto& block : partition.blocks()) {
    std::vector<Point> members;
    members.reserve(block.size());
    for (int index : block) members.push_back(points[index]);
    blocks.push_back(std::move(members));
  }
  return blocks;
}

struct LabelIndex {
  std::vector<int> anchor;             // anchor[i] = point index of block i's anchor
  std::vector<std::vector<int>> axis;  // axis[j][k-1] = point index of k·e^j
};

LabelIndex index_labels(const PointSet& points) {
  const auto& spec = points.spec();
  if (!spec.has_value() || !points.labeled_set())
    throw std::invalid_argument("operation needs construction labels and metadata");
  const int r = spec->block_count;
  const int d = spec->dimension;
  LabelIndex map;
  map.anchor.assign(static_cast<std::size_t>(r), -1);
  map.axis.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(r - 1), -1));
  for (int index = 0; index < points.size(); ++index) {
    const PointLabel& label = points.labels()[static_cast<std::size_t>(index)];
    if (label.kind == PointLabel::Kind::anchor) {
      if (label.block < 0 || label.block >= r)
        throw std::invalid_argument("labels: anchor block out of range");
      int& slot = map.anchor[static_cast<std::size_t>(label.block)];
      if (slot != -1) throw std::invalid_argument("labels: duplicate anchor block");
      slot = index;
    } else {
      if (label.axis < 0 || label.axis >= d || label.multiplier < 1 || label.multiplier > r - 1)
        throw std::invalid_argument("labels: axis point out of range");
      int& slot = map.axis[static_cast<std::size_t>(label.axis)][static_cast<std::size_t>(label.multiplier - 1)];
      if (slot != -1) throw std::invalid_argument("labels: duplicate axis point");
      slot = index;
    }
  }
  for (int i : map.anchor)
    if (i == -1) throw std::invalid_argument("labels: missing anchor");
  for (const auto& row : map.axis)
    for (int i : row)
      if (i == -1) throw std::invalid_argument("labels: missing axis point");
  return map;
}

std::string partition_text(const Partition& partition) {
  std::ostringstream out;
  out << partition;
  return out.str();
}

std::string sizes_text(const std::vector<int>& sizes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out << ',';
    out << sizes[i];
  }
  return out.str();
}

/// Affine independence of points[subset] via exact rank of the difference
/// vectors. subset.size() <= dimension + 1.
bool affinely_independent(const std::vector<Point>& points, const std::vector<int>& subset) {
  if (subset.size() <= 1) return true;
  const int d = points.front().dimension();
  const std::size_t m = subset.size() - 1;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(m);
  for (std::size_t t = 1; t <= m; ++t) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(d));
    for (int q = 0; q < d; ++q)
      row.push_back(points[static_cast<std::size_t>(subset[t])][q] -
                    points[static_cast<std::size_t>(subset[0])][q]);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (int col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t other = rank + 1; other < rows.size(); ++other) {
      if (rows[other][static_cast<std::size_t>(col)].is_zero()) continue;
      Rational factor = rows[other][static_cast<std::size_t>(col)] / rows[rank][static_cast<std::size_t>(col)];
      for (int q = col; q < d; ++q)
        rows[other][static_cast<std::size_t>(q)] -= factor * rows[rank][static_cast<std::size_t>(q)];
    }
    ++rank;
  }
  return rank == m;
}

bool in_general_position(const std::vector<Point>& points, int dimension) {
  const int n = static_cast<int>(points.size());
  const int m = std::min(n, dimension + 1);
  if (m <= 1) return true;
  std::vector<int> subset(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) subset[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!affinely_independent(points, subset)) return false;
    int pos = m - 1;
    while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - m + pos) --pos;
    if (pos < 0) return true;
    ++subset[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < m; ++t)
      subset[static_cast<std::size_t>(t)] = subset[static_cast<std::size_t>(t - 1)] + 1;
  }
}

}  // namespace

std::optional<TverbergCertificate> is_tverberg(const PointSet& points, const Partition& partition) {
  auto blocks = partition_blocks(points, partition);
  CommonPointWitness witness = hulls_common_point(blocks);
  if (!witness.found) return std::nullopt;
  TverbergCertificate certificate{partition, witness.point, std::move(witness.coefficients)};
  if (auto error = certificate_error(points, certificate))
    throw std::logic_error("is_tverberg produced an invalid certificate: " + *error);
  return certificate;
}

std::vector<TverbergCertificate> brute_force_tverberg_partitions(const PointSet& points, int r,
                                                                 const EnumerationOptions& options) {
  const int n = points.size();
  const int jobs = std::max(1, options.jobs);
  std::vector<std::vector<TverbergCertificate>> found(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    SetPartitionEnumerator stream(n, r, options.cap);
    while (auto partition = stream.next()) {
      if (auto certificate = is_tverberg(points, *partition))
        found[0].push_back(std::move(*certificate));
    }
  } else {
    // Validate once up front so precondition failures surface on the calling
    // thread, then let each worker walk its own residue class of the stream.
    SetPartitionEnumerator{n, r, options.cap};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          SetPartitionEnumerator stream(n, r, options.cap);
          long long index = 0;
          while (auto partition = stream.next()) {
            if (index++ % jobs != w) continue;
            if (auto certificate = is_tverberg(points, *partition))
              found[static_cast<std::size_t>(w)].push_back(std::move(*certificate));
          }
        } catch (...) {
          failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (auto& failure : failures)
      if (failure) std::rethrow_exception(failure);
  }
  std::vector<TverbergCertificate> merged;
  for (auto& part : found)
    for (auto& certificate : part) merged.push_back(std::move(certificate));
  std::sort(merged.begin(), merged.end(),
            [](const TverbergCertificate& a, const TverbergCertificate& b) {
              return a.partition < b.partition;
            });
  return merged;
}

std::vector<BijectionTuple> enumerate_bijection_tuples(const ConstructionSpec& spec) {
  const int d = spec.dimension;
  const int r = spec.block_count;
  // Per axis, all orderings of the non-owner blocks; position k-1 receives
  // multiplier k.
  std::vector<std::vector<std::vector<int>>> axis_orderings(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    std::vector<int> targets;
    for (int i = 0; i < r; ++i)
      if (i != spec.color_map[static_cast<std::size_t>(j)]) targets.push_back(i);
    std::vector<std::vector<int>> orderings;
    do {
      orderings.push_back(targets);
    } while (std::next_permutation(targets.begin(), targets.end()));
    axis_orderings[static_cast<std::size_t>(j)] = std::move(orderings);
  }
  std::vector<BijectionTuple> tuples;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
  while (true) {
    BijectionTuple tuple;
    tuple.target_block.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      tuple.target_block.push_back(axis_orderings[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]]);
    tuples.push_back(std::move(tuple));
    // Odometer over the per-axis orderings, last axis fastest.
    int j = d - 1;
    while (j >= 0) {
      if (++pick[static_cast<std::size_t>(j)] < axis_orderings[static_cast<std::size_t>(j)].size()) break;
      pick[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return tuples;
}

Partition closed_form_partition(const PointSet& points, const BijectionTuple& tuple) {
  const auto& spec = points.spec();
  LabelIndex map = index_labels(points);
  const int r = spec->block_count;
  const int d = spec->dimension;
  if (tuple.target_block.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("bijection tuple: one row per axis required");
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    blocks[static_cast<std::size_t>(i)].push_back(map.anchor[static_cast<std::size_t>(i)]);
  for (int j = 0; j < d; ++j) {
    const auto& row = tuple.target_block[static_cast<std::size_t>(j)];
    if (row.size() != static_cast<std::size_t>(r - 1))
      throw std::invalid_argument("bijection tuple: one target per multiplier required");
    for (int k = 1; k <= r - 1; ++k) {
      int target = row[static_cast<std::size_t>(k - 1)];
      if (target < 0 || target >= r || target == spec->color_map[static_cast<std::size_t>(j)])
        throw std::invalid_argument("bijection tuple: target outside the non-owner blocks");
      blocks[static_cast<std::size_t>(target)].push_back(
          map.axis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]);
    }
  }
  return Partition::from_blocks(std::move(blocks), points.size());
}

std::vector<Partition> closed_form_partitions(const PointSet& points) {
  const auto& spec = points.spec();
  if (!spec.has_value()) throw std::invalid_argument("closed form needs construction metadata");
  std::vector<Partition> partitions;
  for (const auto& tuple : enumerate_bijection_tuples(*spec))
    partitions.push_back(closed_form_partition(points, tuple));
  return partitions;
}

std::optional<std::vector<std::pair<Rational, Rational>>> tverberg_point_set_bounds(
    const PointSet& points, const Partition& partition) {
  if (points.dimension() < 1)
    throw std::invalid_argument("point set bounds need dimension >= 1");
  auto blocks = partition_blocks(points, partition);
  FeasibilitySystem system = common_point_system(blocks);
  std::vector<std::pair<Rational, Rational>> intervals;
  intervals.reserve(static_cast<std::size_t>(points.dimension()));
  for (int q = 0; q < points.dimension(); ++q) {
    auto objective = common_point_coordinate_objective(blocks, q);
    OptimizeResult low = optimize_linear(system, objective, OptDirection::minimize);
    if (low.status == OptStatus::infeasible) return std::nullopt;
    OptimizeResult high = optimize_linear(system, objective, OptDirection::maximize);
    if (low.status != OptStatus::optimal || high.status != OptStatus::optimal)
      throw std::logic_error("hull intersection polytope must be bounded");
    intervals.emplace_back(low.value, high.value);
  }
  return intervals;
}

IncidenceProfile incidence_profile(const PointSet& points, const Partition& partition) {
  const auto& spec = points.spec();
  LabelIndex map = index_labels(points);
  const int r = spec->block_count;
  const int d = spec->dimension;
  if (partition.element_count() != points.size())
    throw std::invalid_argument("partition element count differs from the point set size");
  if (partition.block_count() != r)
    throw std::invalid_argument("partition block count differs from the construction");

  std::vector<int> block_of_index(static_cast<std::size_t>(points.size()), -1);
  for (int b = 0; b < partition.block_count(); ++b)
    for (int index : partition.block(b)) block_of_index[static_cast<std::size_t>(index)] = b;

  IncidenceProfile profile;
  std::vector<int> anchors_in_block(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i)
    ++anchors_in_block[static_cast<std::size_t>(block_of_index[static_cast<std::size_t>(map.anchor[static_cast<std::size_t>(i)])])];
  for (int b = 0; b < r; ++b) {
    if (anchors_in_block[static_cast<std::size_t>(b)] == 0) {
      std::ostringstream message;
      message << "block " << partition_text(partition) << " #" << b
              << " holds no anchor point; every certified block must hold exactly one";
      profile.violation = message.str();
      profile.anchor_counts = anchors_in_block;
      profile.axis_counts.assign(static_cast<std::size_t>(r),
                                 std::vector<int>(static_cast<std::size_t>(d), 0));
      for (int j = 0; j < d; ++j)
        for (int k = 1; k <= r - 1; ++k)
          ++profile.axis_counts[static_cast<std::size_t>(block_of_index[static_cast<std::size_t>(
              map.axis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)])])][static_cast<std::size_t>(j)];
      return profile;
    }
  }

  // Anchors hit r distinct blocks, so "block i" below means the block that
  // holds anchor i.
  profile.renumbered_block.assign(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i)
    profile.renumbered_block[static_cast<std::size_t>(i)] =
        block_of_index[static_cast<std::size_t>(map.anchor[static_cast<std::size_t>(i)])];
  std::vector<int> renumber_of_block(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i)
    renumber_of_block[static_cast<std::size_t>(profile.renumbered_block[static_cast<std::size_t>(i)])] = i;

  profile.anchor_counts.assign(static_cast<std::size_t>(r), 1);
  profile.axis_counts.assign(static_cast<std::size_t>(r),
                             std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int j = 0; j < d; ++j) {
    for (int k = 1; k <= r - 1; ++k) {
      int holder = block_of_index[static_cast<std::size_t>(
          map.axis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)])];
      ++profile.axis_counts[static_cast<std::size_t>(renumber_of_block[static_cast<std::size_t>(holder)])]
                           [static_cast<std::size_t>(j)];
    }
  }

  profile.matches_construction = true;
  for (int i = 0; i < r && profile.matches_construction; ++i) {
    for (int j = 0; j < d; ++j) {
      int expected = (spec->color_map[static_cast<std::size_t>(j)] == i) ? 0 : 1;
      if (profile.axis_counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != expected) {
        std::ostringstream message;
        message << "partition " << partition_text(partition) << ": block holding anchor " << i + 1
                << " meets axis " << j + 1 << " in "
                << profile.axis_counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                << " points, expected " << expected;
        profile.violation = message.str();
        profile.matches_construction = false;
        break;
      }
    }
  }
  return profile;
}

std::optional<TverbergCertificate> caratheodory_shift(const PointSet& points,
                                                      const TverbergCertificate& certificate) {
  if (auto error = certificate_error(points, certificate))
    throw std::invalid_argument("caratheodory_shift: " + *error);
  const int d = points.dimension();
  const Partition& partition = certificate.partition;
  if (partition.block_count() < 2) return std::nullopt;

  int source = -1;
  int max_size = 0;
  for (int b = 0; b < partition.block_count(); ++b) {
    int size = static_cast<int>(partition.block(b).size());
    if (size > max_size) {
      max_size = size;
      source = b;
    }
  }
  if (max_size <= d + 1) return std::nullopt;

  // Carathéodory guarantees a removable point in a block of more than d+1
  // points; take the lowest index whose removal keeps the witness covered.
  const auto& source_block = partition.block(source);
  int moved = -1;
  for (int candidate : source_block) {
    std::vector<Point> rest;
    rest.reserve(source_block.size() - 1);
    for (int index : source_block)
      if (index != candidate) rest.push_back(points[index]);
    if (hull_membership(certificate.witness, rest).member) {
      moved = candidate;
      break;
    }
  }
  if (moved < 0)
    throw std::logic_error("caratheodory_shift: oversized block with no removable point");

  int destination = -1;
  int min_size = points.size() + 1;
  for (int b = 0; b < partition.block_count(); ++b) {
    if (b == source) continue;
    int size = static_cast<int>(partition.block(b).size());
    if (size < min_size) {
      min_size = size;
      destination = b;
    }
  }

  std::vector<std::vector<int>> new_blocks = partition.blocks();
  auto& from = new_blocks[static_cast<std::size_t>(source)];
  from.erase(std::find(from.begin(), from.end(), moved));
  new_blocks[static_cast<std::size_t>(destination)].push_back(moved);
  Partition shifted = Partition::from_blocks(std::move(new_blocks), points.size());

  // Re-certify at the unchanged witness: the shrunk block was checked above
  // and every other hull only kept or gained points.
  TverbergCertificate result;
  result.partition = shifted;
  result.witness = certificate.witness;
  result.coefficients.reserve(static_cast<std::size_t>(shifted.block_count()));
  for (int b = 0; b < shifted.block_count(); ++b) {
    std::vector<Point> members;
    members.reserve(shifted.block(b).size());
    for (int index : shifted.block(b)) members.push_back(points[index]);
    HullMembership membership = hull_membership(certificate.witness, members);
    if (!membership.member)
      throw std::logic_error("caratheodory_shift: witness left a hull that contained it");
    result.coefficients.push_back(std::move(membership.coefficients));
  }
  if (auto error = certificate_error(points, result))
    throw std::logic_error("caratheodory_shift produced an invalid certificate: " + *error);
  return result;
}

VerifyReport verify_point_set(const PointSet& points, const VerifyOptions& options) {
  const auto& spec = points.spec();
  if (!spec.has_value())
    throw std::invalid_argument("verification needs construction metadata");
  const int d = spec->dimension;
  const int r = spec->block_count;

  VerifyReport report;
  report.expected_count = sierksma_bound(d, r);

  auto certificates =
      brute_force_tverberg_partitions(points, r, {options.cap, options.jobs});
  report.partition_count = static_cast<long long>(certificates.size());

  std::vector<int> expected_sizes(spec->parts);
  std::sort(expected_sizes.begin(), expected_sizes.end(), std::greater<int>());

  ClauseReport induced{"induced-parts", true, {}};
  for (const auto& certificate : certificates) {
    auto sizes = certificate.partition.induced_integer_partition();
    if (sizes != expected_sizes) {
      induced.pass = false;
      std::ostringstream detail;
      detail << "partition " << partition_text(certificate.partition) << " induces "
             << sizes_text(sizes) << ", expected " << sizes_text(expected_sizes);
      induced.detail = detail.str();
      break;
    }
  }

  // Unperturbed sets must pin the witness to the origin; perturbed sets only
  // to a single point, read off as degenerate per-coordinate bounds.
  ClauseReport unique{"unique-point", true, {}};
  const bool require_origin = !points.perturbed();
  for (const auto& certificate : certificates) {
    auto bounds = tverberg_point_set_bounds(points, certificate.partition);
    if (!bounds.has_value()) {
      unique.pass = false;
      unique.detail = "certified partition reports an empty intersection polytope";
      break;
    }
    bool ok = true;
    for (const auto& [low, high] : *bounds) {
      if (low != high || (require_origin && !low.is_zero())) ok = false;
    }
    if (require_origin && !certificate.witness.is_origin()) ok = false;
    if (!ok) {
      unique.pass = false;
      std::ostringstream detail;
      detail << "partition " << partition_text(certificate.partition)
             << " has intersection bounds";
      for (const auto& [low, high] : *bounds) detail << " [" << low << "," << high << "]";
      detail << (require_origin ? ", expected the origin only" : ", expected a single point");
      unique.detail = detail.str();
      break;
    }
  }

  ClauseReport oracle{"oracle-equivalence", true, {}};
  std::vector<Partition> brute;
  brute.reserve(certificates.size());
  for (const auto& certificate : certificates) brute.push_back(certificate.partition);
  std::vector<Partition> closed = closed_form_partitions(points);
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  if (brute != closed) {
    oracle.pass = false;
    std::ostringstream detail;
    detail << "brute force found " << brute.size() << " partitions, closed form " << closed.size();
    for (const auto& p : closed)
      if (!std::binary_search(brute.begin(), brute.end(), p))
        detail << "; closed-form-only " << partition_text(p);
    for (const auto& p : brute)
      if (!std::binary_search(closed.begin(), closed.end(), p))
        detail << "; brute-force-only " << partition_text(p);
    oracle.detail = detail.str();
  }

  ClauseReport count{"count", true, {}};
  if (Integer(report.partition_count) != report.expected_count) {
    count.pass = false;
    std::ostringstream detail;
    detail << "found " << report.partition_count << " partitions, expected "
           << report.expected_count;
    count.detail = detail.str();
  }

  report.clauses = {std::move(induced), std::move(unique), std::move(oracle), std::move(count)};
  report.all_pass = true;
  for (const auto& clause : report.clauses) report.all_pass = report.all_pass && clause.pass;
  return report;
}

VerifyReport verify_construction(const ConstructionSpec& spec, const VerifyOptions& options) {
  return verify_point_set(build_point_set(spec), options);
}

Integer sierksma_bound(int dimension, int r) {
  if (dimension < 1 || r < 2)
    throw std::invalid_argument("sierksma_bound needs d >= 1 and r >= 2");
  Integer factorial = 1;
  for (int k = 2; k <= r - 1; ++k) factorial *= k;
  Integer bound = 1;
  for (int j = 0; j < dimension; ++j) bound *= factorial;
  return bound;
}

SierksmaReport sierksma_report(const PointSet& points, int r, const EnumerationOptions& options) {
  const int d = points.dimension();
  if (points.size() != tverberg_number(d, r)) {
    std::ostringstream message;
    message << "sierksma_report: point set has " << points.size() << " points, expected "
            << tverberg_number(d, r) << " for d=" << d << ", r=" << r;
    throw std::invalid_argument(message.str());
  }
  SierksmaReport report;
  report.count =
      static_cast<long long>(brute_force_tverberg_partitions(points, r, options).size());
  report.bound = sierksma_bound(d, r);
  report.ratio = Rational(report.count) / Rational(report.bound);
  report.below_bound = report.ratio < Rational(1);
  return report;
}

PointSet random_point_set(int dimension, int count, std::uint64_t seed, int coordinate_bound) {
  if (dimension < 1) throw std::invalid_argument("random_point_set: dimension must be >= 1");
  if (count < 0) throw std::invalid_argument("random_point_set: negative count");
  if (coordinate_bound < 1) throw std::invalid_argument("random_point_set: bound must be >= 1");
  // mt19937_64 with modular reduction keeps the draw identical across
  // platforms; the tiny modulo bias is irrelevant here.
  std::mt19937_64 rng(seed);
  const std::uint64_t buckets = 2 * static_cast<std::uint64_t>(coordinate_bound) + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      std::vector<Rational> coords;
      coords.reserve(static_cast<std::size_t>(dimension));
      for (int q = 0; q < dimension; ++q) {
        auto k = static_cast<std::int64_t>(rng() % buckets) - coordinate_bound;
        coords.emplace_back(k);
      }
      points.emplace_back(std::move(coords));
    }
    if (in_general_position(points, dimension))
      return PointSet::unlabeled(dimension, std::move(points));
  }
  throw std::logic_error("random_point_set: no general-position sample found");
}

}  // namespace tverberg
