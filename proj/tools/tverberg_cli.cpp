// Command-line front end: construct extremal point sets, enumerate and verify
// their certified hull-intersection partitions, shift oversized blocks, and
// compare observed partition counts against the conjectured lower bound.
//
// Exit codes: 0 success/all-pass, 1 verification failure, 2 input validation,
// 3 I/O or parse, 4 oracle mismatch, 5 enumeration cap refusal.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tverberg/construction.hpp"
#include "tverberg/engine.hpp"
#include "tverberg/hull.hpp"
#include "tverberg/io.hpp"
#include "tverberg/partition.hpp"

namespace tv = tverberg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;
constexpr int kExitOracle = 4;
constexpr int kExitCap = 5;

struct ConstructArgs {
  int d = 0;
  int r = 0;
  std::vector<int> parts;
  bool multiset = false;
  std::string perturb;
  std::uint64_t seed = 0;
  std::string output;
};

struct EnumerateArgs {
  std::string input;
  int r = 0;
  std::string mode = "brute";
  int cap = tv::kDefaultEnumerationCap;
  int jobs = 1;
  std::string output;
};

struct VerifyArgs {
  std::string input;
  int d = 0;
  int r = 0;
  std::vector<int> parts;
  int cap = tv::kDefaultEnumerationCap;
  int jobs = 1;
};

struct ShiftArgs {
  std::string input;
  std::string partition;
  std::string witness;
};

struct SierksmaArgs {
  std::string input;
  int r = 0;
  bool random = false;
  int d = 0;
  int samples = -1;
  std::uint64_t seed = 0;
  int cap = tv::kDefaultEnumerationCap;
  int jobs = 1;
};

std::string coefficients_text(const std::vector<std::vector<tv::Rational>>& per_block) {
  std::ostringstream out;
  for (std::size_t b = 0; b < per_block.size(); ++b) {
    if (b) out << '|';
    for (std::size_t k = 0; k < per_block[b].size(); ++k) {
      if (k) out << ',';
      out << per_block[b][k];
    }
  }
  return out.str();
}

int run_construct(const ConstructArgs& args) {
  tv::ConstructionSpec spec = tv::ConstructionSpec::make(args.d, args.r, args.parts, args.multiset);
  tv::PointSet points = tv::build_point_set(spec);
  if (!args.perturb.empty()) {
    auto epsilon = tv::Rational::try_parse(args.perturb);
    if (!epsilon.has_value()) {
      std::cerr << "cannot read --perturb value \"" << args.perturb << "\" as a rational\n";
      return kExitInput;
    }
    points = tv::perturb(points, *epsilon, args.seed);
  }
  tv::write_point_set_file(args.output, points);
  return kExitOk;
}

int run_enumerate(const EnumerateArgs& args) {
  tv::PointSet points = tv::read_point_set_file(args.input);
  if (points.spec().has_value() && points.spec()->block_count != args.r) {
    std::cerr << "-r " << args.r << " contradicts the file's construction metadata (r="
              << points.spec()->block_count << ")\n";
    return kExitInput;
  }

  const bool want_brute = args.mode == "brute" || args.mode == "both";
  const bool want_closed = args.mode == "closed" || args.mode == "both";
  std::vector<tv::Partition> brute;
  std::vector<tv::Partition> closed;
  if (want_brute) {
    auto certificates =
        tv::brute_force_tverberg_partitions(points, args.r, {args.cap, args.jobs});
    brute.reserve(certificates.size());
    for (const auto& certificate : certificates) brute.push_back(certificate.partition);
  }
  if (want_closed) {
    closed = tv::closed_form_partitions(points);
    std::sort(closed.begin(), closed.end());
  }

  const std::vector<tv::Partition>& result = want_brute ? brute : closed;
  tv::write_partition_file(args.output, result);

  bool match = true;
  if (args.mode == "both" && brute != closed) match = false;

  std::ostringstream summary;
  summary << "count=" << result.size();
  if (points.spec().has_value()) {
    tv::Integer expected =
        tv::sierksma_bound(points.spec()->dimension, points.spec()->block_count);
    if (tv::Integer(static_cast<long long>(result.size())) != expected) match = false;
    summary << " expected=" << expected << " match=" << (match ? "yes" : "no");
  }
  std::cout << summary.str() << '\n';

  if (args.mode == "both" && brute != closed) {
    std::cerr << "brute force found " << brute.size() << " partitions but closed form "
              << closed.size() << "; the sets differ\n";
    for (const auto& partition : brute)
      if (!std::binary_search(closed.begin(), closed.end(), partition))
        std::cerr << "  brute-force-only: " << tv::format_partition(partition) << '\n';
    for (const auto& partition : closed)
      if (!std::binary_search(brute.begin(), brute.end(), partition))
        std::cerr << "  closed-form-only: " << tv::format_partition(partition) << '\n';
    return kExitOracle;
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  tv::PointSet points;
  if (!args.input.empty()) {
    points = tv::read_point_set_file(args.input);
  } else {
    tv::ConstructionSpec spec = tv::ConstructionSpec::make(args.d, args.r, args.parts);
    points = tv::build_point_set(spec);
  }
  tv::VerifyReport report = tv::verify_point_set(points, {args.cap, args.jobs});
  for (const auto& clause : report.clauses) {
    if (clause.pass) {
      std::cout << "PASS " << clause.name << '\n';
    } else {
      std::cout << "FAIL " << clause.name << ": " << clause.detail << '\n';
    }
  }
  std::cout << "count=" << report.partition_count << " expected=" << report.expected_count
            << '\n';
  return report.all_pass ? kExitOk : kExitVerifyFail;
}

int run_shift(const ShiftArgs& args) {
  tv::PointSet points = tv::read_point_set_file(args.input);
  tv::Partition partition = tv::parse_partition(args.partition, points.size());

  tv::TverbergCertificate certificate;
  if (!args.witness.empty()) {
    std::vector<tv::Rational> coords;
    std::istringstream stream(args.witness);
    std::string token;
    while (std::getline(stream, token, ',')) {
      auto value = tv::Rational::try_parse(token);
      if (!value.has_value()) {
        std::cerr << "cannot read --witness coordinate \"" << token << "\" as a rational\n";
        return kExitInput;
      }
      coords.push_back(std::move(*value));
    }
    if (static_cast<int>(coords.size()) != points.dimension()) {
      std::cerr << "--witness has " << coords.size() << " coordinates, expected "
                << points.dimension() << '\n';
      return kExitInput;
    }
    certificate.partition = partition;
    certificate.witness = tv::Point(std::move(coords));
    for (int b = 0; b < partition.block_count(); ++b) {
      std::vector<tv::Point> members;
      for (int index : partition.block(b)) members.push_back(points[index]);
      tv::HullMembership membership = tv::hull_membership(certificate.witness, members);
      if (!membership.member) {
        std::cerr << "the witness lies outside the hull of block "
                  << tv::format_partition(partition) << " #" << b << '\n';
        return kExitInput;
      }
      certificate.coefficients.push_back(std::move(membership.coefficients));
    }
  } else {
    auto found = tv::is_tverberg(points, partition);
    if (!found.has_value()) {
      std::cerr << "the blocks' hulls share no point; nothing to shift\n";
      return kExitInput;
    }
    certificate = std::move(*found);
  }

  auto shifted = tv::caratheodory_shift(points, certificate);
  if (!shifted.has_value()) {
    std::cout << "not applicable: all blocks <= d+1\n";
    return kExitOk;
  }
  std::cout << "partition=" << tv::format_partition(shifted->partition) << '\n';
  std::cout << "witness=" << shifted->witness << '\n';
  std::cout << "coefficients=" << coefficients_text(shifted->coefficients) << '\n';
  return kExitOk;
}

int run_sierksma(const SierksmaArgs& args) {
  if (args.random) {
    if (args.samples < 0) {
      std::cerr << "--random needs --samples\n";
      return kExitInput;
    }
    if (args.d < 1) {
      std::cerr << "--random needs -d\n";
      return kExitInput;
    }
    std::optional<tv::Rational> min_ratio;
    int below = 0;
    const int n = tv::tverberg_number(args.d, args.r);
    for (int s = 0; s < args.samples; ++s) {
      tv::PointSet points = tv::random_point_set(args.d, n, args.seed + static_cast<std::uint64_t>(s));
      tv::SierksmaReport report = tv::sierksma_report(points, args.r, {args.cap, args.jobs});
      std::cout << "sample=" << s << " count=" << report.count << " bound=" << report.bound
                << " ratio=" << report.ratio << '\n';
      if (report.below_bound) {
        ++below;
        std::cout << "BELOW BOUND: sample=" << s << " seed=" << args.seed + static_cast<std::uint64_t>(s)
                  << " count=" << report.count << " bound=" << report.bound << '\n';
      }
      if (!min_ratio.has_value() || report.ratio < *min_ratio) min_ratio = report.ratio;
    }
    if (min_ratio.has_value()) {
      std::cout << "samples=" << args.samples << " min_ratio=" << *min_ratio
                << " below_bound=" << below << '\n';
    } else {
      std::cout << "samples=0\n";
    }
    return kExitOk;
  }

  if (args.input.empty()) {
    std::cerr << "need --input FILE or --random\n";
    return kExitInput;
  }
  tv::PointSet points = tv::read_point_set_file(args.input);
  tv::SierksmaReport report = tv::sierksma_report(points, args.r, {args.cap, args.jobs});
  std::cout << "count=" << report.count << " bound=" << report.bound << " ratio=" << report.ratio
            << '\n';
  if (report.below_bound) {
    std::cout << "BELOW BOUND: count=" << report.count << " bound=" << report.bound << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal point sets with a unique certified hull-intersection point"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "Build a point set forcing the prescribed partition sizes");
  construct->add_option("-d", construct_args.d, "Dimension")->required();
  construct->add_option("-r", construct_args.r, "Number of blocks")->required();
  construct->add_option("--parts", construct_args.parts, "Block sizes a_1,...,a_r")
      ->required()
      ->delimiter(',');
  construct->add_flag("--multiset", construct_args.multiset,
                      "Collapse each axis group to repeated copies of the unit vector");
  construct->add_option("--perturb", construct_args.perturb,
                        "Shift every coordinate by a random offset in [-EPS, EPS]");
  construct->add_option("--seed", construct_args.seed, "Perturbation seed (default 0)");
  construct->add_option("-o,--output", construct_args.output, "Output point set file")->required();

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand(
      "enumerate", "List all partitions whose block hulls share a point");
  enumerate->add_option("--input", enumerate_args.input, "Point set file")->required();
  enumerate->add_option("-r", enumerate_args.r, "Number of blocks")->required();
  enumerate->add_option("--mode", enumerate_args.mode, "brute, closed, or both (default brute)")
      ->check(CLI::IsMember({"brute", "closed", "both"}));
  enumerate->add_option("--cap", enumerate_args.cap, "Point count limit for enumeration");
  enumerate->add_option("--jobs", enumerate_args.jobs, "Worker threads (default 1)");
  enumerate->add_option("-o,--output", enumerate_args.output, "Output partition file")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check a constructed set against the partition laws");
  auto* verify_input = verify->add_option("--input", verify_args.input, "Point set file");
  auto* verify_d = verify->add_option("-d", verify_args.d, "Dimension");
  verify->add_option("-r", verify_args.r, "Number of blocks");
  verify->add_option("--parts", verify_args.parts, "Block sizes a_1,...,a_r")->delimiter(',');
  verify->add_option("--cap", verify_args.cap, "Point count limit for enumeration");
  verify->add_option("--jobs", verify_args.jobs, "Worker threads (default 1)");
  verify_input->excludes(verify_d);

  ShiftArgs shift_args;
  auto* shift = app.add_subcommand(
      "shift", "Move a removable point out of an oversized block, keeping the witness");
  shift->add_option("--input", shift_args.input, "Point set file")->required();
  shift->add_option("--partition", shift_args.partition, "Partition, e.g. \"0,1,2|3\"")->required();
  shift->add_option("--witness", shift_args.witness,
                    "Witness point p1,...,pd (found by a feasibility solve when omitted)");

  SierksmaArgs sierksma_args;
  auto* sierksma = app.add_subcommand(
      "sierksma", "Report partition counts against the conjectured lower bound");
  sierksma->add_option("--input", sierksma_args.input, "Point set file");
  sierksma->add_option("-r", sierksma_args.r, "Number of blocks")->required();
  sierksma->add_flag("--random", sierksma_args.random, "Sample random general-position sets");
  sierksma->add_option("-d", sierksma_args.d, "Dimension (random mode)");
  sierksma->add_option("--samples", sierksma_args.samples, "Number of random samples");
  sierksma->add_option("--seed", sierksma_args.seed, "Base seed (default 0; sample s uses seed+s)");
  sierksma->add_option("--cap", sierksma_args.cap, "Point count limit for enumeration");
  sierksma->add_option("--jobs", sierksma_args.jobs, "Worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (enumerate->parsed()) return run_enumerate(enumerate_args);
    if (verify->parsed()) {
      if (verify_args.input.empty() && verify_args.parts.empty()) {
        std::cerr << "need --input FILE or -d, -r and --parts\n";
        return kExitInput;
      }
      return run_verify(verify_args);
    }
    if (shift->parsed()) return run_shift(shift_args);
    if (sierksma->parsed()) return run_sierksma(sierksma_args);
    std::cerr << "no subcommand selected\n";
    return kExitInput;
  } catch (const tv::EnumerationCapExceeded& error) {
    std::cerr << error.what() << '\n';
    return kExitCap;
  } catch (const tv::ParseError& error) {
    std::cerr << error.what() << '\n';
    return kExitIo;
  } catch (const tv::FileError& error) {
    std::cerr << error.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& error) {
    std::cerr << error.what() << '\n';
    return kExitInput;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << '\n';
    return kExitVerifyFail;
  }
}
