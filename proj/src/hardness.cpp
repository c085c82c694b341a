#include <cstdlib>

#include "timw/problems.hpp"

namespace timw {

FirefighterInstance gen_firefighter_hardness(const TwoCnf& f) {
  const int v = f.variables;
  const int w = static_cast<int>(f.clauses.size());
  if (v < 1) throw ValidationError("formula needs at least one variable");
  for (const auto& [a, b] : f.clauses) {
    if (a == 0 || b == 0 || std::abs(a) > v || std::abs(b) > v)
      throw ValidationError("clause literal out of range");
    if (std::abs(a) == std::abs(b)) throw ValidationError("clause must use two distinct variables");
  }
  if (f.k < 0 || f.k > w) throw ValidationError("k must lie in [0, w]");

  // Vertex layout: root, variable vertices, forcing leaves, clause leaves.
  const Vertex root = 0;
  auto var_vertex = [](int i, int x) { return 1 + 2 * (i - 1) + x; };
  auto forcing_leaf = [v, w](int i, int x, int j) { return 1 + 2 * v + ((i - 1) * 2 + x) * w + (j - 1); };
  const int clause_base = 1 + 2 * v + 2 * w * v;
  auto clause_leaf = [clause_base](int j, int pos, bool negative_copy) {
    return clause_base + 4 * (j - 1) + 2 * pos + (negative_copy ? 1 : 0);
  };
  const int n = 1 + 2 * v + 2 * w * v + 4 * w;

  std::vector<TimeEdge> edges;
  auto add = [&](Vertex a, Vertex b, Time t) { edges.push_back({std::min(a, b), std::max(a, b), t}); };
  for (int i = 1; i <= v; ++i)
    for (int x = 0; x <= 1; ++x) {
      add(root, var_vertex(i, x), i);
      for (int j = 1; j <= w; ++j) add(var_vertex(i, x), forcing_leaf(i, x, j), v + (i - 1) * w + j);
    }
  for (int j = 1; j <= w; ++j) {
    const auto& cl = f.clauses[j - 1];
    const int lits[2] = {cl.first, cl.second};
    for (int pos = 0; pos < 2; ++pos) {
      const int i = std::abs(lits[pos]);
      const int x = lits[pos] > 0 ? 1 : 0;
      add(clause_leaf(j, pos, false), var_vertex(i, x), v + w * v + j);
      add(clause_leaf(j, pos, true), var_vertex(i, 1 - x), v + w * v + w + j);
    }
  }
  FirefighterInstance out{TemporalGraph(n, std::move(edges)), root, v + 2 * w * v + 3 * w + f.k};
  return out;
}

}  // namespace timw
