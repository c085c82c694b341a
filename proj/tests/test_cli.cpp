#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr is merged into the output when `with_err` is set.
Run cli(const std::string& args, bool with_err = false) {
  const std::string cmd = std::string(TIMW_CLI_PATH) + " " + args + (with_err ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("timw_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, Widths) {
  const auto f = temp_file("edge.tg", "tgraph 2 1\ne 0 1 1\n");
  const auto r = cli("widths " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "vim=2, cvim_le=2, cvim_ge=2, cvim_bi=2, tim=2\n");
}

TEST(Cli, SolveHamiltonianBothEngines) {
  const auto f = temp_file("path.tg", "tgraph 3 2\ne 0 1 1\ne 1 2 2\n");
  for (const std::string engine : {"vim", "tim"}) {
    const auto r = cli("solve temporal-hamiltonian-path " + f + " --engine " + engine + " --no-timing");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("yes\n", 0), 0u) << r.out;
    EXPECT_EQ(r.out.find("wall-us"), std::string::npos);
  }
  const auto back = temp_file("back.tg", "tgraph 3 1\ne 0 1 1\ne 0 2 1\n");
  EXPECT_EQ(cli("solve temporal-hamiltonian-path " + back + " --no-timing").out.rfind("no\n", 0), 0u);
}

TEST(Cli, SolveIsDeterministicWithoutTiming) {
  const auto g = cli("gen random --n 6 --lifetime 4 --seed 11");
  const auto f = temp_file("rand.tg", g.out);
  const std::string args = "solve temporal-reachability-edge-deletion " + f + " --h 1 --r 3 --no-timing";
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, FirefighterTimWarns) {
  const auto f = temp_file("star.tg", "tgraph 4 1\nroot 0\ne 0 1 1\ne 0 2 1\ne 0 3 1\n");
  const auto r = cli("solve temporal-firefighter " + f + " --h 1 --engine tim --no-timing", true);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
  EXPECT_NE(r.out.find("yes"), std::string::npos);
  EXPECT_NE(cli("solve temporal-firefighter " + f + " --h 2 --engine vim --no-timing").out.find("no"),
            std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_NE(cli("widths /nonexistent/graph.tg").code, 0);
  const auto f = temp_file("err.tg", "tgraph 2 1\ne 0 1 1\n");
  EXPECT_NE(cli("solve no-such-problem " + f).code, 0);
  EXPECT_NE(cli("solve delta-temporal-matching " + f + " --engine vim").code, 0);
  const auto dup = temp_file("dup.tg", "tgraph 2 1\ne 0 1 1\ne 0 1 1\n");
  const auto r = cli("widths " + dup, true);
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("line 3"), std::string::npos);
}

TEST(Cli, GenIsDeterministic) {
  for (const std::string kind : {"random", "ordered-tree", "width2-path", "2cnf", "ff-hardness"}) {
    const auto a = cli("gen " + kind + " --seed 7");
    EXPECT_EQ(a.code, 0) << kind;
    EXPECT_FALSE(a.out.empty()) << kind;
    EXPECT_EQ(a.out, cli("gen " + kind + " --seed 7").out) << kind;
  }
  EXPECT_NE(cli("gen ordered-tree --seed 3").out.find("# width formula:"), std::string::npos);
}

TEST(Cli, DecomposeFormats) {
  const auto f = temp_file("dec.tg", "tgraph 3 2\ne 0 1 1\ne 1 2 2\n");
  EXPECT_NE(cli("decompose " + f).out.find("node 0 time=1"), std::string::npos);
  EXPECT_EQ(cli("decompose " + f + " --dot").out.rfind("digraph tim {", 0), 0u);
  EXPECT_NE(cli("decompose " + f + " --two-step").out.find("parent=-1"), std::string::npos);
}

TEST(Cli, VerifyRandom) {
  const auto r = cli("verify --random 200");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("200/200 agree"), std::string::npos) << r.out;
}

TEST(Cli, BenchHeader) {
  const auto r = cli("bench width2-paths --count 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("instance-id,n,lambda,vim,tim,problem,engine,answer,micros,peak-table-entries\n", 0), 0u);
}
