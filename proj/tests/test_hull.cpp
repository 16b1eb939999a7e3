#include "doctest.h"

#include "oracles.hpp"
#include "tverberg/feasibility.hpp"
#include "tverberg/hull.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using oracle::pt;
using tverberg::Point;
using tverberg::Rational;

namespace {

/// Coefficients must be a convex combination reproducing the query exactly.
void check_membership_witness(const Point& p, const std::vector<Point>& points,
                              const std::vector<Rational>& coefficients) {
  REQUIRE(coefficients.size() == points.size());
  Rational total(0);
  Point combination = Point::zero(p.dimension());
  for (std::size_t k = 0; k < points.size(); ++k) {
    CHECK(coefficients[k].sign() >= 0);
    total += coefficients[k];
    combination += coefficients[k] * points[k];
  }
  CHECK(total == Rational(1));
  CHECK(combination == p);
}

void check_common_point_witness(const std::vector<std::vector<Point>>& blocks,
                                const tverberg::CommonPointWitness& witness) {
  REQUIRE(witness.coefficients.size() == blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    check_membership_witness(witness.point, blocks[i], witness.coefficients[i]);
  }
}

Point random_point(std::mt19937_64& rng, int d, int spread) {
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    coords.emplace_back(static_cast<long long>(rng() % (2 * static_cast<unsigned>(spread) + 1)) -
                        spread);
  return Point(std::move(coords));
}

/// Random rational convex combination of the given points.
Point random_combination(std::mt19937_64& rng, const std::vector<Point>& points) {
  std::vector<long long> weights(points.size());
  long long total = 0;
  for (auto& w : weights) {
    w = static_cast<long long>(rng() % 5);
    total += w;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  Point combination = Point::zero(points.front().dimension());
  for (std::size_t k = 0; k < points.size(); ++k)
    combination += Rational(weights[k], total) * points[k];
  return combination;
}

}  // namespace

TEST_SUITE("hull") {

TEST_CASE("interval membership with forced coefficients") {
  const std::vector<Point> ends{pt({-1}), pt({1})};
  auto mid = tverberg::hull_membership(pt({0}), ends);
  REQUIRE(mid.member);
  CHECK(mid.coefficients == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  auto outside = tverberg::hull_membership(pt({2}), ends);
  CHECK_FALSE(outside.member);
  CHECK(outside.coefficients.empty());

  auto vertex = tverberg::hull_membership(pt({1}), ends);
  REQUIRE(vertex.member);
  CHECK(vertex.coefficients == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("singletons and duplicated points") {
  auto hit = tverberg::hull_membership(pt({5}), {pt({5})});
  REQUIRE(hit.member);
  CHECK(hit.coefficients == std::vector<Rational>{Rational(1)});
  CHECK_FALSE(tverberg::hull_membership(pt({4}), {pt({5})}).member);

  auto doubled = tverberg::hull_membership(pt({1}), {pt({1}), pt({1})});
  REQUIRE(doubled.member);
  check_membership_witness(pt({1}), {pt({1}), pt({1})}, doubled.coefficients);
}

TEST_CASE("empty input and dimension mismatches are rejected") {
  CHECK_THROWS_AS(tverberg::hull_membership(pt({0}), {}), std::invalid_argument);
  CHECK_THROWS_AS(tverberg::hull_membership(pt({0, 0}), {pt({1})}), std::invalid_argument);
  CHECK_THROWS_AS(tverberg::hulls_common_point({}), std::invalid_argument);
  CHECK_THROWS_AS(tverberg::hulls_common_point({{pt({1})}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(tverberg::hulls_common_point({{pt({1})}, {pt({1, 1})}}),
                  std::invalid_argument);
}

TEST_CASE("triangle membership, boundary included") {
  const std::vector<Point> triangle{pt({0, 0}), pt({2, 0}), pt({0, 2})};
  CHECK(tverberg::hull_membership(pt({1, 1}), triangle).member);  // on an edge
  CHECK(tverberg::hull_membership(pt({0, 0}), triangle).member);  // a vertex
  CHECK(tverberg::hull_membership(Point{Rational(1, 2), Rational(1, 2)}, triangle).member);
  CHECK_FALSE(tverberg::hull_membership(pt({2, 2}), triangle).member);
  // Exactness at the boundary: one millionth outside must not round in.
  CHECK_FALSE(
      tverberg::hull_membership(Point{Rational(-1, 1000000), Rational(0)}, triangle).member);
  CHECK_FALSE(
      tverberg::hull_membership(Point{Rational(1, 1), Rational(1000001, 1000000)}, triangle)
          .member);
}

TEST_CASE("membership agrees with the subset search") {
  std::mt19937_64 rng(77);
  int members_seen = 0;
  int outsiders_seen = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int count = 1 + static_cast<int>(rng() % 6);
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) points.push_back(random_point(rng, d, 4));
    const Point query =
        (trial % 2 == 0) ? random_combination(rng, points) : random_point(rng, d, 4);

    auto result = tverberg::hull_membership(query, points);
    CAPTURE(trial);
    CHECK(result.member == oracle::hull_member_reference(query, points));
    if (result.member) {
      ++members_seen;
      check_membership_witness(query, points, result.coefficients);
    } else {
      ++outsiders_seen;
    }
  }
  CHECK(members_seen > 0);
  CHECK(outsiders_seen > 0);
}

TEST_CASE("membership is monotone under added points") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 2);
    const int count = 2 + static_cast<int>(rng() % 4);
    std::vector<Point> points;
    for (int k = 0; k < count; ++k) points.push_back(random_point(rng, d, 3));
    const Point query = random_combination(rng, points);
    REQUIRE(tverberg::hull_membership(query, points).member);
    points.push_back(random_point(rng, d, 3));
    CHECK(tverberg::hull_membership(query, points).member);
  }
}

TEST_CASE("two crossing segments meet exactly at the origin") {
  const std::vector<std::vector<Point>> blocks{{pt({0, -1}), pt({0, 1})},
                                               {pt({-2, 0}), pt({1, 0})}};
  auto witness = tverberg::hulls_common_point(blocks);
  REQUIRE(witness.found);
  CHECK(witness.point == pt({0, 0}));
  // The crossing point is unique, so the convex coefficients are forced.
  CHECK(witness.coefficients[0] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(witness.coefficients[1] == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("disjoint intervals share nothing") {
  auto witness = tverberg::hulls_common_point({{pt({1}), pt({2})}, {pt({3})}});
  CHECK_FALSE(witness.found);
  CHECK(witness.coefficients.empty());
}

TEST_CASE("touching intervals meet at the shared endpoint") {
  auto witness = tverberg::hulls_common_point({{pt({0}), pt({1})}, {pt({1}), pt({2})}});
  REQUIRE(witness.found);
  CHECK(witness.point == pt({1}));
}

TEST_CASE("a single block yields one of its own hull points") {
  auto witness = tverberg::hulls_common_point({{pt({5})}});
  REQUIRE(witness.found);
  CHECK(witness.point == pt({5}));
}

TEST_CASE("overlapping collinear segments intersect on the overlap") {
  const std::vector<std::vector<Point>> blocks{{pt({1, 0}), pt({3, 0})},
                                               {pt({2, 0}), pt({5, 0})}};
  auto witness = tverberg::hulls_common_point(blocks);
  REQUIRE(witness.found);
  CHECK(witness.point[1] == Rational(0));
  CHECK(witness.point[0] >= Rational(2));
  CHECK(witness.point[0] <= Rational(3));
  check_common_point_witness(blocks, witness);
}

TEST_CASE("common points agree with the planar scan") {
  std::mt19937_64 rng(79);
  int found_seen = 0;
  int empty_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 2);
    const int r = 2 + static_cast<int>(rng() % 2);
    std::vector<std::vector<Point>> blocks(static_cast<std::size_t>(r));
    for (auto& block : blocks) {
      const int count = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < count; ++k) block.push_back(random_point(rng, d, 4));
    }
    auto witness = tverberg::hulls_common_point(blocks);
    CAPTURE(trial);
    CHECK(witness.found == oracle::blocks_share_point_reference(blocks));
    if (witness.found) {
      ++found_seen;
      check_common_point_witness(blocks, witness);
    } else {
      ++empty_seen;
    }
  }
  CHECK(found_seen > 0);
  CHECK(empty_seen > 0);
}

TEST_CASE("the shared system exposes coordinate optimization") {
  const std::vector<std::vector<Point>> blocks{{pt({0}), pt({2})}, {pt({1}), pt({3})}};
  auto sys = tverberg::common_point_system(blocks);
  CHECK(sys.constraint_count() == 3);  // two convexity rows, one tie row
  CHECK(sys.variable_count() == 4);
  const auto objective = tverberg::common_point_coordinate_objective(blocks, 0);
  REQUIRE(objective.size() == 4);

  auto low = tverberg::optimize_linear(sys, objective, tverberg::OptDirection::minimize);
  REQUIRE(low.status == tverberg::OptStatus::optimal);
  CHECK(low.value == Rational(1));  // [0,2] meets [1,3] in [1,2]
  auto high = tverberg::optimize_linear(sys, objective, tverberg::OptDirection::maximize);
  REQUIRE(high.status == tverberg::OptStatus::optimal);
  CHECK(high.value == Rational(2));
}

}  // TEST_SUITE
