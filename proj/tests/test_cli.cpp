#include "doctest.h"

#include "cli_fixture.hpp"
#include "subprocess.hpp"

#include <string>
#include <vector>

using testutil::RunResult;
using testutil::TempDir;

namespace {

RunResult cli(const std::vector<std::string>& args) { return testutil::run_tool(cli_path(), args); }

const std::string kLineFile =
    "1 3\n"
    "# construction r=2 parts=2,1 colors=2 multiset=0 perturbed=0\n"
    "-1 # A i=1\n"
    "0 # A i=2\n"
    "1 # A_j j=1 k=1\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct writes the pinned file and stays silent") {
  TempDir dir;
  const std::string out = dir.file("line.txt");
  const RunResult run = cli({"construct", "-d", "1", "-r", "2", "--parts", "2,1", "-o", out});
  CHECK(run.exit_code == 0);
  CHECK(run.out.empty());
  CHECK(run.err.empty());
  CHECK(testutil::slurp(out) == kLineFile);

  const std::string plane = dir.file("plane.txt");
  CHECK(cli({"construct", "-d", "2", "-r", "2", "--parts", "2,2", "-o", plane}).exit_code == 0);
  CHECK(testutil::slurp(plane) ==
        "2 4\n"
        "# construction r=2 parts=2,2 colors=1,2 multiset=0 perturbed=0\n"
        "0 -1 # A i=1\n"
        "-2 0 # A i=2\n"
        "1 0 # A_j j=1 k=1\n"
        "0 1 # A_j j=2 k=1\n");
}

TEST_CASE("construct rejects invalid part sizes with the validation message") {
  TempDir dir;
  const RunResult run =
      cli({"construct", "-d", "2", "-r", "3", "--parts", "4,2,1", "-o", dir.file("x.txt")});
  CHECK(run.exit_code == 2);
  CHECK(run.err.find("a_1 > d+1") != std::string::npos);
}

TEST_CASE("construct --perturb is reproducible per seed") {
  TempDir dir;
  const std::vector<std::string> base{"construct", "-d",      "2",      "-r", "2",
                                      "--parts",   "2,2",     "--perturb", "1/1000"};
  auto with = [&](const std::string& seed, const std::string& name) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--seed", seed, "-o", dir.file(name)});
    REQUIRE(cli(args).exit_code == 0);
    return testutil::slurp(dir.file(name));
  };
  const std::string first = with("7", "a.txt");
  const std::string second = with("7", "b.txt");
  const std::string other = with("8", "c.txt");
  CHECK(first == second);
  CHECK(first != other);
  CHECK(first.find("perturbed=1") != std::string::npos);
}

TEST_CASE("construct reports unwritable output as an I/O failure") {
  const RunResult run = cli({"construct", "-d", "1", "-r", "2", "--parts", "2,1", "-o",
                             "/nonexistent/dir/points.txt"});
  CHECK(run.exit_code == 3);
  CHECK_FALSE(run.err.empty());
}

TEST_CASE("enumerate checks both engines against the expected count") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  REQUIRE(cli({"construct", "-d", "1", "-r", "3", "--parts", "2,2,1", "-o", points}).exit_code == 0);
  const std::string out = dir.file("partitions.txt");
  const RunResult run =
      cli({"enumerate", "--input", points, "-r", "3", "--mode", "both", "-o", out});
  CHECK(run.exit_code == 0);
  CHECK(run.out == "count=2 expected=2 match=yes\n");
  CHECK(testutil::slurp(out) == "0,3|1,4|2\n0,4|1,3|2\n");
}

TEST_CASE("enumerate handles unlabeled files with an explicit block count") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  testutil::spill(points, "1 3\n-1\n0\n1\n");
  const std::string out = dir.file("partitions.txt");
  const RunResult run = cli({"enumerate", "--input", points, "-r", "2", "-o", out});
  CHECK(run.exit_code == 0);
  CHECK(run.out == "count=1\n");
  CHECK(testutil::slurp(out) == "0,2|1\n");

  const RunResult closed =
      cli({"enumerate", "--input", points, "-r", "2", "--mode", "closed", "-o", out});
  CHECK(closed.exit_code == 2);
  CHECK(closed.err.find("closed form needs construction metadata") != std::string::npos);
}

TEST_CASE("enumerate rejects a block count contradicting the metadata") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  testutil::spill(points, kLineFile);
  const RunResult run =
      cli({"enumerate", "--input", points, "-r", "3", "-o", dir.file("out.txt")});
  CHECK(run.exit_code == 2);
  CHECK(run.err.find("contradicts") != std::string::npos);
}

TEST_CASE("enumerate refuses point counts beyond the cap") {
  TempDir dir;
  const std::string big = dir.file("big.txt");
  std::string text = "1 15\n";
  for (int i = 0; i < 15; ++i) text += std::to_string(i) + "\n";
  testutil::spill(big, text);
  const RunResult run = cli({"enumerate", "--input", big, "-r", "2", "-o", dir.file("o.txt")});
  CHECK(run.exit_code == 5);
  CHECK(run.err.find("exceeds the cap") != std::string::npos);

  const std::string small = dir.file("small.txt");
  testutil::spill(small, "1 6\n0\n1\n2\n3\n4\n5\n");
  const RunResult capped =
      cli({"enumerate", "--input", small, "-r", "2", "--cap", "5", "-o", dir.file("o2.txt")});
  CHECK(capped.exit_code == 5);
}

TEST_CASE("verify passes a constructed instance clause by clause") {
  const RunResult run = cli({"verify", "-d", "1", "-r", "3", "--parts", "2,2,1"});
  CHECK(run.exit_code == 0);
  CHECK(testutil::count_lines_starting_with(run.out, "PASS ") == 4);
  CHECK(testutil::count_lines_starting_with(run.out, "FAIL ") == 0);
  CHECK(run.out.find("PASS induced-parts\n") != std::string::npos);
  CHECK(run.out.find("PASS unique-point\n") != std::string::npos);
  CHECK(run.out.find("PASS oracle-equivalence\n") != std::string::npos);
  CHECK(run.out.find("PASS count\n") != std::string::npos);
  CHECK(run.out.find("count=2 expected=2\n") != std::string::npos);
}

TEST_CASE("verify flags a tampered point set") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  std::string tampered = kLineFile;
  tampered.replace(tampered.find("-1 # A i=1"), 10, "1 # A i=1");
  testutil::spill(points, tampered);
  const RunResult run = cli({"verify", "--input", points});
  CHECK(run.exit_code == 1);
  CHECK(testutil::count_lines_starting_with(run.out, "FAIL ") >= 1);
}

TEST_CASE("verify rejects mixing a file with construction flags") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  testutil::spill(points, kLineFile);
  CHECK(cli({"verify", "--input", points, "-d", "1"}).exit_code == 2);
  const RunResult bare = cli({"verify"});
  CHECK(bare.exit_code == 2);
  CHECK(bare.err.find("need --input FILE or -d, -r and --parts") != std::string::npos);
}

TEST_CASE("shift moves a removable point and keeps the witness") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  testutil::spill(points, "1 4\n-2\n-1\n2\n0\n");
  const RunResult run = cli({"shift", "--input", points, "--partition", "0,1,2|3"});
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("partition=0,3|1,2\n") != std::string::npos);
  CHECK(run.out.find("witness=0\n") != std::string::npos);
  CHECK(testutil::count_lines_starting_with(run.out, "coefficients=") == 1);

  const RunResult pinned =
      cli({"shift", "--input", points, "--partition", "0,1,2|3", "--witness", "0"});
  CHECK(pinned.exit_code == 0);
  CHECK(pinned.out.find("partition=0,3|1,2\n") != std::string::npos);
}

TEST_CASE("shift reports when no block is oversized") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  testutil::spill(points, kLineFile);
  const RunResult run = cli({"shift", "--input", points, "--partition", "0,2|1"});
  CHECK(run.exit_code == 0);
  CHECK(run.out == "not applicable: all blocks <= d+1\n");
}

TEST_CASE("shift rejects partitions and witnesses without a shared point") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  testutil::spill(points, "1 4\n-2\n-1\n2\n0\n");

  const RunResult disjoint = cli({"shift", "--input", points, "--partition", "0,1|2,3"});
  CHECK(disjoint.exit_code == 2);
  CHECK(disjoint.err.find("share no point") != std::string::npos);

  const RunResult outside =
      cli({"shift", "--input", points, "--partition", "0,1,2|3", "--witness", "5"});
  CHECK(outside.exit_code == 2);
  CHECK(outside.err.find("outside the hull") != std::string::npos);

  const RunResult arity =
      cli({"shift", "--input", points, "--partition", "0,1,2|3", "--witness", "0,0"});
  CHECK(arity.exit_code == 2);
  CHECK(arity.err.find("expected 1") != std::string::npos);
}

TEST_CASE("sierksma random mode reports one row per sample plus a summary") {
  const RunResult run =
      cli({"sierksma", "--random", "-d", "1", "-r", "3", "--samples", "3", "--seed", "5"});
  CHECK(run.exit_code == 0);
  CHECK(testutil::count_lines_starting_with(run.out, "sample=") == 3);
  CHECK(run.out.find("samples=3 min_ratio=") != std::string::npos);
  CHECK(run.out.find("below_bound=") != std::string::npos);

  const RunResult empty = cli({"sierksma", "--random", "-d", "1", "-r", "3", "--samples", "0"});
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "samples=0\n");
}

TEST_CASE("sierksma reads a file and compares against the bound") {
  TempDir dir;
  const std::string points = dir.file("points.txt");
  REQUIRE(cli({"construct", "-d", "1", "-r", "3", "--parts", "2,2,1", "-o", points}).exit_code == 0);
  const RunResult run = cli({"sierksma", "--input", points, "-r", "3"});
  CHECK(run.exit_code == 0);
  CHECK(run.out == "count=2 bound=2 ratio=1\n");

  const RunResult wrong = cli({"sierksma", "--input", points, "-r", "2"});
  CHECK(wrong.exit_code == 2);
  CHECK(wrong.err.find("expected") != std::string::npos);

  const RunResult neither = cli({"sierksma", "-r", "3"});
  CHECK(neither.exit_code == 2);
  CHECK(neither.err.find("need --input FILE or --random") != std::string::npos);

  const RunResult no_samples = cli({"sierksma", "--random", "-d", "1", "-r", "3"});
  CHECK(no_samples.exit_code == 2);
  CHECK(no_samples.err.find("--random needs --samples") != std::string::npos);
}

TEST_CASE("usage errors and help use the documented exit codes") {
  CHECK(cli({"frobnicate"}).exit_code == 2);
  CHECK(cli({}).exit_code == 2);
  const RunResult help = cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("construct") != std::string::npos);
  CHECK(help.out.find("sierksma") != std::string::npos);
}

}  // TEST_SUITE
