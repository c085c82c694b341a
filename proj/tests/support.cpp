#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace timw::support {

TemporalGraph random_graph(std::uint64_t seed, int n_lo, int n_hi, Time lam_hi, int max_times) {
  Rng rng(seed);
  RandomGraphParams p;
  p.n = rng.between(n_lo, n_hi);
  p.lifetime = rng.between(1, lam_hi);
  p.edge_probability = 0.25 + 0.5 * rng.unit();
  p.max_times_per_edge = max_times;
  p.seed = rng.next();
  return gen_random(p);
}

std::vector<TimeEdge> canonical_edges(const TemporalGraph& g) {
  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  auto key = [](const std::vector<TimeEdge>& es) {
    std::vector<std::tuple<Time, Vertex, Vertex>> k;
    for (const auto& e : es) k.emplace_back(e.t, e.u, e.v);
    return k;
  };
  std::vector<TimeEdge> best = g.time_edges();
  auto best_key = key(best);
  do {
    std::vector<TimeEdge> es;
    for (const auto& e : g.time_edges()) es.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v]), e.t});
    std::sort(es.begin(), es.end(), canonical_less);
    auto k = key(es);
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(es);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

std::vector<std::vector<Vertex>> components_of(const TemporalGraph& g, Time t) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  if (t >= 1 && t <= g.lifetime())
    for (const auto& e : g.time_edges())
      if (e.t == t) parent[find(e.u)] = find(e.v);
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.n(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [r, vs] : groups) out.push_back(std::move(vs));
  return out;
}

}  // namespace

std::vector<Profile> brute_force_profiles(const TimPlugin& plugin, const TemporalGraph& g,
                                          const TwoStepDecomposition& ts, int s) {
  const auto& rd = ts.rooted;
  Time horizon = 0;
  for (Time t : rd.tree.time) horizon = std::max(horizon, t);
  std::set<VertexTime> pairs;
  std::vector<TimedComponent> comps;
  for (int x = 0; x < static_cast<int>(rd.tree.size()); ++x) {
    int y = x;
    while (y != -1 && y != s) y = rd.parent[y];
    if (y != s) continue;
    const Time t = rd.time(x);
    for (Vertex v : rd.bag(x)) pairs.insert({v, t});
    for (const auto& c : components_of(g, t == 0 ? 1 : t))
      if (std::binary_search(rd.bag(x).begin(), rd.bag(x).end(), c.front())) comps.push_back({t, c});
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.t, a.vertices) < std::make_pair(b.t, b.vertices);
  });

  std::map<VertexTime, Label> labels;
  std::vector<Vec> chosen(comps.size());
  std::set<Profile> out;
  const int k = plugin.arity;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == comps.size()) {
      Profile p;
      for (const auto& vt : ts.bags[s]) p.labels.push_back({vt, labels.at(vt)});
      p.total.assign(k, 0);
      for (std::size_t j = 0; j < comps.size(); ++j) {
        for (int q = 0; q < k; ++q) p.total[q] += chosen[j][q];
        if (std::find(ts.components[s].begin(), ts.components[s].end(), comps[j]) != ts.components[s].end())
          p.vectors.push_back({comps[j], chosen[j]});
      }
      out.insert(std::move(p));
      return;
    }
    const auto& c = comps[i];
    const auto view = make_component_view(g, c);
    const Phase phase = c.t == 0 ? Phase::start : (c.t == horizon ? Phase::finish : Phase::valid);
    bool check_transition = c.t >= 1;
    for (Vertex v : c.vertices)
      if (!pairs.count({v, c.t - 1})) check_transition = false;
    std::vector<Label> prev(c.vertices.size()), next(c.vertices.size());
    if (check_transition)
      for (std::size_t j = 0; j < c.vertices.size(); ++j) prev[j] = labels.at({c.vertices[j], c.t - 1});
    for_each_assignment(c.vertices.size(), plugin.alphabet, [&](const std::vector<int>& a) {
      for (std::size_t j = 0; j < a.size(); ++j) next[j] = static_cast<Label>(a[j]);
      if (check_transition && !plugin.transition(view, prev, next)) return;
      std::vector<Vec> cands;
      if (plugin.vectors) {
        cands = plugin.vectors(phase, view, next);
      } else {
        for_each_assignment(static_cast<std::size_t>(k), 2 * plugin.bound + 1, [&](const std::vector<int>& b) {
          Vec v(b.size());
          for (std::size_t q = 0; q < b.size(); ++q) v[q] = b[q] - plugin.bound;
          cands.push_back(std::move(v));
        });
      }
      for (std::size_t j = 0; j < c.vertices.size(); ++j) labels[{c.vertices[j], c.t}] = next[j];
      for (const auto& v : cands) {
        if (!plugin.routine(phase)(view, next, v)) continue;
        chosen[i] = v;
        rec(i + 1);
      }
      for (Vertex v : c.vertices) labels.erase({v, c.t});
    });
  };
  rec(0);
  return {out.begin(), out.end()};
}

}  // namespace timw::support
