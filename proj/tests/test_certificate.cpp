#include "doctest.h"

#include "oracles.hpp"
#include "tverberg/certificate.hpp"

#include <string>
#include <vector>

using oracle::pt;
using tverberg::Partition;
using tverberg::PointSet;
using tverberg::Rational;
using tverberg::TverbergCertificate;

namespace {

PointSet line3() { return PointSet::unlabeled(1, {pt({-1}), pt({0}), pt({1})}); }

TverbergCertificate good() {
  TverbergCertificate certificate;
  certificate.partition = Partition::from_blocks({{0, 2}, {1}}, 3);
  certificate.witness = pt({0});
  certificate.coefficients = {{Rational(1, 2), Rational(1, 2)}, {Rational(1)}};
  return certificate;
}

bool error_mentions(const PointSet& points, const TverbergCertificate& certificate,
                    const std::string& needle) {
  auto error = tverberg::certificate_error(points, certificate);
  return error.has_value() && error->find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("certificates") {

TEST_CASE("a correct certificate validates") {
  CHECK_FALSE(tverberg::certificate_error(line3(), good()).has_value());
  CHECK(tverberg::certificate_valid(line3(), good()));
}

TEST_CASE("coefficients that sum away from one are caught") {
  auto bad = good();
  bad.coefficients[0] = {Rational(1, 2), Rational(1, 3)};
  CHECK(error_mentions(line3(), bad, "sum to 5/6"));
}

TEST_CASE("negative coefficients are caught even when the sum is right") {
  auto bad = good();
  bad.coefficients[0] = {Rational(3, 2), Rational(-1, 2)};
  CHECK(error_mentions(line3(), bad, "negative coefficient"));
}

TEST_CASE("a combination missing the witness is caught") {
  auto bad = good();
  bad.coefficients[0] = {Rational(1), Rational(0)};
  CHECK(error_mentions(line3(), bad, "differs from the witness"));
}

TEST_CASE("structural mismatches are caught before any arithmetic") {
  auto wrong_block_lists = good();
  wrong_block_lists.coefficients.pop_back();
  CHECK(error_mentions(line3(), wrong_block_lists, "one coefficient list required per block"));

  auto wrong_elements = good();
  wrong_elements.partition = Partition::from_blocks({{0, 2}, {1, 3}}, 4);
  wrong_elements.coefficients = {{Rational(1, 2), Rational(1, 2)},
                                 {Rational(1, 2), Rational(1, 2)}};
  CHECK(error_mentions(line3(), wrong_elements, "element count"));

  auto wrong_witness_dim = good();
  wrong_witness_dim.witness = pt({0, 0});
  CHECK(error_mentions(line3(), wrong_witness_dim, "witness dimension"));

  auto wrong_lengths = good();
  wrong_lengths.coefficients[1] = {Rational(1, 2), Rational(1, 2)};
  CHECK(error_mentions(line3(), wrong_lengths, "coefficients"));
}

TEST_CASE("an empty partition cannot certify anything") {
  TverbergCertificate empty;
  empty.witness = pt({0});
  CHECK(error_mentions(PointSet::unlabeled(1, {}), empty, "no blocks"));
}

}  // TEST_SUITE
