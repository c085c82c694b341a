#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "timw/decomposition.hpp"
#include "timw/generators.hpp"
#include "timw/io.hpp"
#include "timw/oracles.hpp"
#include "timw/problems.hpp"
#include "timw/widths.hpp"

namespace timw::cli {

namespace {

const char* const kHam = "temporal-hamiltonian-path";
const char* const kFirefighter = "temporal-firefighter";
const char* const kMatching = "delta-temporal-matching";
const char* const kTred = "temporal-reachability-edge-deletion";

struct Outcome {
  bool answer = false;
  std::size_t bags = 0;
  std::size_t peak = 0;
  long long micros = 0;
};

Outcome solve_one(const std::string& problem, const std::string& engine, const TemporalGraph& g, Vertex root,
                  Vertex source, int h, int r, int delta, const VimOptions& vo, const TimOptions& to) {
  Outcome o;
  VimStats vs;
  TimStats ts;
  const bool vim = engine == "vim";
  if (!vim && engine != "tim") throw ValidationError("unknown engine '" + engine + "' (expected vim or tim)");
  const auto t0 = std::chrono::steady_clock::now();
  if (problem == kHam) {
    o.answer = vim ? ham_vim_solve(g, vo, &vs) : ham_tim_solve(g, to, &ts);
  } else if (problem == kFirefighter) {
    const FirefighterInstance inst{g, root, h};
    o.answer = vim ? ff_vim_solve(inst, vo, &vs) : ff_tim_solve(inst, to, &ts);
  } else if (problem == kMatching) {
    if (vim) throw ValidationError(problem + " has no VIM formulation; use --engine tim");
    o.answer = matching_tim_solve({g, delta, h}, to, &ts);
  } else if (problem == kTred) {
    if (vim) throw ValidationError(problem + " has no VIM formulation; use --engine tim");
    o.answer = tred_tim_solve({g, source, r, h}, to, &ts);
  } else {
    throw ValidationError("unknown problem '" + problem + "'");
  }
  o.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  o.bags = vim ? vs.table_sizes.size() : ts.nodes;
  o.peak = vim ? vs.peak : ts.peak_entries;
  return o;
}

Vertex checked_vertex(const TemporalGraph& g, int v, const char* what) {
  if (v < 0 || v >= g.n()) throw ValidationError(std::string(what) + " " + std::to_string(v) + " out of range");
  return v;
}

// Oracle agreement for every problem/engine pair on one graph.
bool cross_check(const GraphFile& f, std::ostream& err, const std::string& name) {
  const auto& g = f.g;
  if (g.n() == 0) return true;
  const Vertex root = f.root.value_or(0);
  const Vertex source = f.source.value_or(0);
  bool ok = true;
  auto report = [&](const std::string& what, bool got, bool want) {
    if (got == want) return;
    ok = false;
    err << name << ": " << what << " engine=" << got << " oracle=" << want << '\n';
  };
  const bool ham = oracle::ham(g);
  report("ham vim", ham_vim_solve(g), ham);
  report("ham tim", ham_tim_solve(g), ham);
  const int saved = oracle::firefighter_max_saved(g, root);
  for (int h = std::max(0, saved - 1); h <= saved + 1; ++h) {
    const FirefighterInstance inst{g, root, h};
    report("firefighter vim h=" + std::to_string(h), ff_vim_solve(inst), h <= saved);
    report("firefighter tim h=" + std::to_string(h), ff_tim_solve(inst), h <= saved);
  }
  for (int delta = 1; delta <= 3; ++delta) {
    const int m = oracle::max_matching(g, delta, static_cast<int>(g.size()));
    for (int h = std::max(0, m - 1); h <= m + 1; ++h)
      report("matching delta=" + std::to_string(delta) + " h=" + std::to_string(h),
             matching_tim_solve({g, delta, h}), h <= m);
  }
  for (int h = 0; h <= 2; ++h)
    for (int r = 1; r <= g.n(); ++r)
      report("tred r=" + std::to_string(r) + " h=" + std::to_string(h), tred_tim_solve({g, source, r, h}),
             oracle::tred(g, source, r, h));
  return ok;
}

}  // namespace

int run_widths(const WidthsArgs& a, std::ostream& out) {
  const auto g = read_graph_file(a.file).g;
  out << "vim=" << vim_sequence(g).width << ", cvim_le=" << connected_vim_width(g, Direction::le)
      << ", cvim_ge=" << connected_vim_width(g, Direction::ge) << ", cvim_bi=" << bidirectional_cvim_width(g)
      << ", tim=" << tim_width(g) << '\n';
  return 0;
}

int run_decompose(const DecomposeArgs& a, std::ostream& out) {
  const auto g = read_graph_file(a.file).g;
  const auto d = compute_tim_decomposition(g, effective_lifetime(g));
  if (a.dot) {
    out << decomposition_dot(d);
  } else if (a.two_step) {
    out << emit_two_step(build_two_step(g, root_and_augment(d, a.root)));
  } else {
    out << emit_decomposition(d);
  }
  return 0;
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto f = read_graph_file(a.file);
  const Vertex root = checked_vertex(f.g, a.root.value_or(f.root.value_or(0)), "root");
  const Vertex source = checked_vertex(f.g, a.source.value_or(f.source.value_or(0)), "source");
  if (a.problem == kFirefighter && a.engine == "tim")
    err << "warning: the TIM engine is exponential in the lifetime for temporal-firefighter "
           "(the vector arity grows with it); expect it to scale only while the lifetime stays small\n";
  VimOptions vo;
  vo.literal = a.literal;
  TimOptions to;
  to.prune_dominated = !a.no_prune;
  const auto o = solve_one(a.problem, a.engine, f.g, root, source, a.h, a.r, a.delta, vo, to);
  out << (o.answer ? "yes" : "no") << '\n';
  out << "bags=" << o.bags << " max-table=" << o.peak;
  if (!a.no_timing) out << " wall-us=" << o.micros;
  out << '\n';
  return 0;
}

int run_gen(const GenArgs& a, std::ostream& out) {
  if (a.kind == "random") {
    out << emit_temporal_graph(gen_random({a.n, a.lifetime, a.p, a.max_times, a.seed}));
  } else if (a.kind == "ordered-tree") {
    OrderedTreeParams p;
    p.n = a.n;
    p.max_children = a.children;
    p.spread = a.spread;
    p.max_times_per_edge = a.max_times;
    p.seed = a.seed;
    const auto g = gen_ordered_tree(p);
    out << "# width formula: " << ordered_tree_width(g) << '\n' << emit_temporal_graph(g, 0);
  } else if (a.kind == "width2-path") {
    out << emit_temporal_graph(gen_width2_path(a.n));
  } else if (a.kind == "2cnf") {
    auto f = gen_random_2cnf({a.variables, a.clauses, a.seed});
    f.k = a.k;
    out << emit_dimacs_2cnf(f);
  } else if (a.kind == "ff-hardness") {
    TwoCnf f;
    if (a.cnf.empty()) {
      f = gen_random_2cnf({a.variables, a.clauses, a.seed});
      f.k = a.k;
    } else {
      f = parse_dimacs_2cnf(read_file(a.cnf));
    }
    const auto inst = gen_firefighter_hardness(f);
    out << "# firefighter target h=" << inst.h << '\n' << emit_temporal_graph(inst.g, inst.root);
  } else {
    throw ValidationError("unknown generator '" + a.kind +
                          "' (expected random, ordered-tree, width2-path, 2cnf or ff-hardness)");
  }
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, GraphFile>> suite;
  for (const auto& path : a.files) {
    if (std::filesystem::is_directory(path)) {
      std::vector<std::string> entries;
      for (const auto& e : std::filesystem::directory_iterator(path))
        if (e.is_regular_file()) entries.push_back(e.path().string());
      std::sort(entries.begin(), entries.end());
      for (const auto& e : entries) suite.push_back({e, read_graph_file(e)});
    } else {
      suite.push_back({path, read_graph_file(path)});
    }
  }
  Rng rng(a.seed);
  for (int i = 0; i < a.random; ++i) {
    RandomGraphParams p;
    p.n = rng.between(2, 6);
    p.lifetime = rng.between(1, 4);
    p.edge_probability = 0.3 + 0.4 * rng.unit();
    p.max_times_per_edge = 2;
    p.seed = rng.next();
    GraphFile f;
    f.g = gen_random(p);
    f.root = rng.between(0, p.n - 1);
    f.source = rng.between(0, p.n - 1);
    suite.push_back({"random#" + std::to_string(i), std::move(f)});
  }
  if (suite.empty()) throw ValidationError("nothing to verify: pass graph files or --random N");
  std::size_t agree = 0;
  for (const auto& [name, f] : suite) agree += cross_check(f, err, name) ? 1 : 0;
  out << agree << '/' << suite.size() << " agree\n";
  return agree == suite.size() ? 0 : 1;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw Error("cannot write " + a.out);
  }
  std::ostream& csv = a.out.empty() ? out : file;
  csv << "instance-id,n,lambda,vim,tim,problem,engine,answer,micros,peak-table-entries\n";
  auto row = [&](const std::string& id, const TemporalGraph& g, const std::string& problem, const std::string& engine,
                 int h, int r, int delta) {
    const auto o = solve_one(problem, engine, g, 0, 0, h, r, delta, {}, {});
    csv << id << ',' << g.n() << ',' << g.lifetime() << ',' << vim_sequence(g).width << ',' << tim_width(g) << ','
        << problem << ',' << engine << ',' << (o.answer ? "yes" : "no") << ',' << o.micros << ',' << o.peak << '\n';
  };
  if (a.suite == "width2-paths") {
    for (int n : {20, 40, 80, 160}) {
      const auto g = gen_width2_path(n);
      const std::string id = "path-" + std::to_string(n);
      row(id, g, kHam, "tim", 0, 0, 1);
      row(id, g, kHam, "vim", 0, 0, 1);
    }
  } else if (a.suite == "random") {
    Rng rng(a.seed);
    for (int i = 0; i < a.count; ++i) {
      RandomGraphParams p;
      p.n = rng.between(3, 7);
      p.lifetime = rng.between(1, 5);
      p.edge_probability = 0.3 + 0.4 * rng.unit();
      p.max_times_per_edge = 2;
      p.seed = rng.next();
      const auto g = gen_random(p);
      const std::string id = "random-" + std::to_string(i);
      row(id, g, kHam, "vim", 0, 0, 1);
      row(id, g, kHam, "tim", 0, 0, 1);
      row(id, g, kFirefighter, "vim", 1, 0, 1);
      row(id, g, kFirefighter, "tim", 1, 0, 1);
      row(id, g, kMatching, "tim", 1, 0, 2);
      row(id, g, kTred, "tim", 1, std::max(1, g.n() / 2), 1);
    }
  } else if (a.suite == "ordered-trees") {
    for (int i = 0; i < a.count; ++i) {
      OrderedTreeParams p;
      p.n = 4 + i % 8;
      p.seed = a.seed + static_cast<unsigned long long>(i);
      const auto g = gen_ordered_tree(p);
      const std::string id = "tree-" + std::to_string(i);
      row(id, g, kHam, "tim", 0, 0, 1);
      row(id, g, kTred, "tim", 1, std::max(1, g.n() / 2), 1);
    }
  } else {
    throw ValidationError("unknown suite '" + a.suite + "' (expected width2-paths, random or ordered-trees)");
  }
  return 0;
}

}  // namespace timw::cli
