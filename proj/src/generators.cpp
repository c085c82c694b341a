#include "timw/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>

namespace timw {

std::uint64_t Rng::below(std::uint64_t m) {
  if (m == 0) throw RangeError("below(0)");
  // Outputs under the threshold would bias x % m.
  const std::uint64_t threshold = (0 - m) % m;
  std::uint64_t x;
  do {
    x = next();
  } while (x < threshold);
  return x % m;
}

namespace {

// k distinct values from [lo, hi], ascending.
std::vector<Time> distinct_times(Rng& rng, Time lo, Time hi, int k) {
  std::vector<Time> pool;
  for (Time t = lo; t <= hi; ++t) pool.push_back(t);
  k = std::min<int>(k, static_cast<int>(pool.size()));
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

TemporalGraph gen_random(const RandomGraphParams& p) {
  if (p.n < 0 || p.lifetime < 0 || p.edge_probability < 0 || p.edge_probability > 1 || p.max_times_per_edge < 1)
    throw RangeError("random graph parameters out of range");
  Rng rng(p.seed);
  std::vector<TimeEdge> edges;
  if (p.lifetime == 0) return TemporalGraph(p.n, {});
  for (Vertex u = 0; u < p.n; ++u)
    for (Vertex v = u + 1; v < p.n; ++v) {
      if (!rng.bernoulli(p.edge_probability)) continue;
      const int k = rng.between(1, std::min(p.max_times_per_edge, p.lifetime));
      for (Time t : distinct_times(rng, 1, p.lifetime, k)) edges.push_back({u, v, t});
    }
  return TemporalGraph(p.n, std::move(edges));
}

TemporalGraph gen_ordered_tree(const OrderedTreeParams& p) {
  if (p.n < 1 || p.max_children < 1 || p.spread < 1 || p.max_times_per_edge < 1)
    throw RangeError("ordered tree parameters out of range");
  Rng rng(p.seed);
  std::vector<int> parent(p.n, -1), child_count(p.n, 0);
  std::vector<std::vector<Vertex>> children(p.n);
  for (Vertex v = 1; v < p.n; ++v) {
    std::vector<Vertex> open;
    for (Vertex u = 0; u < v; ++u)
      if (child_count[u] < p.max_children) open.push_back(u);
    const Vertex u = open[rng.below(open.size())];
    parent[v] = u;
    ++child_count[u];
    children[u].push_back(v);
  }
  std::vector<Time> latest(p.n, 0);  // last time of any edge at v
  std::vector<TimeEdge> edges;
  std::queue<Vertex> order;
  order.push(0);
  while (!order.empty()) {
    const Vertex v = order.front();
    order.pop();
    const Time base = parent[v] < 0 ? 0 : latest[parent[v]];
    for (Vertex c : children[v]) {
      const int k = rng.between(1, std::min(p.max_times_per_edge, p.spread));
      for (Time t : distinct_times(rng, base + 1, base + p.spread, k)) {
        if (t > p.max_lifetime) throw RangeError("ordered tree does not fit in the time budget");
        edges.push_back({std::min(v, c), std::max(v, c), t});
        latest[v] = std::max(latest[v], t);
        latest[c] = std::max(latest[c], t);
      }
      order.push(c);
    }
  }
  return TemporalGraph(p.n, std::move(edges));
}

int ordered_tree_width(const TemporalGraph& g) {
  const Time lam = g.lifetime();
  std::vector<std::vector<int>> degree(static_cast<std::size_t>(lam) + 1, std::vector<int>(g.n(), 0));
  for (const auto& [u, v] : g.underlying_edges()) {
    const auto times = g.times_of(u, v);
    for (Time t = times.front(); t <= times.back(); ++t) {
      ++degree[t][u];
      ++degree[t][v];
    }
  }
  int best = 0;
  for (const auto& row : degree)
    for (int d : row) best = std::max(best, d);
  return best + 1;
}

TemporalGraph gen_width2_path(int n) {
  if (n < 2) return TemporalGraph(std::max(n, 0), {});
  std::vector<TimeEdge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, i + 1});
  edges.push_back({n - 2, n - 1, n});
  return TemporalGraph(n, std::move(edges));
}

TwoCnf gen_random_2cnf(const RandomCnfParams& p) {
  if (p.variables < 2 || p.clauses < 0) throw RangeError("2-CNF needs at least two variables");
  Rng rng(p.seed);
  TwoCnf f;
  f.variables = p.variables;
  for (int j = 0; j < p.clauses; ++j) {
    const int a = rng.between(1, p.variables);
    int b = rng.between(1, p.variables - 1);
    if (b >= a) ++b;
    const int sa = rng.bernoulli(0.5) ? 1 : -1;
    const int sb = rng.bernoulli(0.5) ? 1 : -1;
    f.clauses.push_back({sa * a, sb * b});
  }
  return f;
}

}  // namespace timw
