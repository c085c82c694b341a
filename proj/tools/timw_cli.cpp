#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "timw/temporal_graph.hpp"

int main(int argc, char** argv) {
  using namespace timw::cli;
  CLI::App app{"Temporal graph width parameters and width-parameterised solvers"};
  app.require_subcommand(1);

  WidthsArgs widths;
  auto* w = app.add_subcommand("widths", "Print the VIM, connected-VIM and TIM widths of a graph");
  w->add_option("file", widths.file, "Temporal graph file")->required();

  DecomposeArgs decompose;
  auto* d = app.add_subcommand("decompose", "Print the TIM decomposition of a graph");
  d->add_option("file", decompose.file, "Temporal graph file")->required();
  d->add_flag("--two-step", decompose.two_step, "Print the rooted 2-step decomposition");
  d->add_flag("--dot", decompose.dot, "Print the decomposition tree in Graphviz format");
  d->add_option("--root", decompose.root, "Node id to root the tree at (with --two-step)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide a problem on a graph");
  s->set_help_flag("--help", "Print this help message and exit");
  s->add_option("problem", solve.problem,
                "temporal-hamiltonian-path | temporal-firefighter | delta-temporal-matching | "
                "temporal-reachability-edge-deletion")
      ->required();
  s->add_option("file", solve.file, "Temporal graph file")->required();
  s->add_option("--engine", solve.engine, "vim or tim")->check(CLI::IsMember({"vim", "tim"}));
  s->add_option("--h", solve.h, "Target: vertices saved, matching size or deletion budget");
  s->add_option("--r", solve.r, "Reachability bound");
  s->add_option("--delta", solve.delta, "Matching gap");
  s->add_option("--root", solve.root, "Fire source (defaults to the file's root directive, else 0)");
  s->add_option("--source", solve.source, "Reachability source (defaults to the file's source directive, else 0)");
  s->add_flag("--literal", solve.literal, "VIM engine: enumerate every state without shortcuts");
  s->add_flag("--no-prune", solve.no_prune, "TIM engine: keep dominated totals");
  s->add_flag("--no-timing", solve.no_timing, "Omit the wall time from the stats line");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance on stdout");
  g->add_option("kind", gen.kind, "random | ordered-tree | width2-path | 2cnf | ff-hardness")->required();
  g->add_option("--n", gen.n, "Vertices");
  g->add_option("--lifetime", gen.lifetime, "Lifetime (random)");
  g->add_option("--p", gen.p, "Edge probability (random)");
  g->add_option("--max-times", gen.max_times, "Largest number of times per edge");
  g->add_option("--children", gen.children, "Largest number of children (ordered-tree)");
  g->add_option("--spread", gen.spread, "Time window per vertex (ordered-tree)");
  g->add_option("--variables", gen.variables, "Variables (2cnf, ff-hardness)");
  g->add_option("--clauses", gen.clauses, "Clauses (2cnf, ff-hardness)");
  g->add_option("--k", gen.k, "Max-2-SAT target (2cnf, ff-hardness)");
  g->add_option("--cnf", gen.cnf, "DIMACS 2-CNF input (ff-hardness)");
  g->add_option("--seed", gen.seed, "Seed");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Cross-check every engine against the brute-force oracles");
  v->add_option("files", verify.files, "Graph files or directories of graph files");
  v->add_option("--random", verify.random, "Also check this many seeded random graphs");
  v->add_option("--seed", verify.seed, "Seed for --random");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time the engines on a suite and write CSV");
  b->add_option("suite", bench.suite, "width2-paths | random | ordered-trees")->required();
  b->add_option("--count", bench.count, "Instances (random, ordered-trees)");
  b->add_option("--seed", bench.seed, "Seed");
  b->add_option("--out", bench.out, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*w) return run_widths(widths, std::cout);
    if (*d) return run_decompose(decompose, std::cout);
    if (*s) return run_solve(solve, std::cout, std::cerr);
    if (*g) return run_gen(gen, std::cout);
    if (*v) return run_verify(verify, std::cout, std::cerr);
    if (*b) return run_bench(bench, std::cout);
  } catch (const timw::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
