#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace timw::cli {

struct WidthsArgs {
  std::string file;
};

struct DecomposeArgs {
  std::string file;
  bool two_step = false;
  bool dot = false;
  std::optional<int> root;
};

struct SolveArgs {
  std::string problem;
  std::string file;
  std::string engine = "tim";
  int h = 0;
  int r = 0;
  int delta = 1;
  std::optional<int> root;
  std::optional<int> source;
  bool literal = false;
  bool no_prune = false;
  bool no_timing = false;
};

struct GenArgs {
  std::string kind;
  int n = 6;
  int lifetime = 4;
  double p = 0.5;
  int max_times = 1;
  int children = 3;
  int spread = 3;
  int variables = 3;
  int clauses = 3;
  int k = 0;
  std::string cnf;
  unsigned long long seed = 1;
};

struct VerifyArgs {
  std::vector<std::string> files;
  int random = 0;
  unsigned long long seed = 1;
};

struct BenchArgs {
  std::string suite;
  int count = 20;
  unsigned long long seed = 1;
  std::string out;
};

int run_widths(const WidthsArgs& a, std::ostream& out);
int run_decompose(const DecomposeArgs& a, std::ostream& out);
int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err);
int run_gen(const GenArgs& a, std::ostream& out);
int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err);
int run_bench(const BenchArgs& a, std::ostream& out);

}  // namespace timw::cli
