#include "timw/temporal_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace timw {

namespace {

class Dsu {
 public:
  explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<int> parent_;
};

std::string edge_text(const TimeEdge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.t) + ")";
}

}  // namespace

bool StaticGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n || b >= n) return false;
  const auto& l = adj[a];
  return std::binary_search(l.begin(), l.end(), b);
}

StaticGraph make_static_graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
  StaticGraph sg;
  sg.n = n;
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  sg.adj.assign(n, {});
  for (auto [a, b] : edges) {
    sg.adj[a].push_back(b);
    sg.adj[b].push_back(a);
  }
  for (auto& l : sg.adj) std::sort(l.begin(), l.end());
  sg.edges = std::move(edges);
  return sg;
}

TemporalGraph::TemporalGraph(int n, std::vector<TimeEdge> edges) : n_(n) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) throw ValidationError("self-loop " + edge_text(e));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw ValidationError("vertex out of range in " + edge_text(e));
    if (e.t < 1) throw ValidationError("timestep below 1 in " + edge_text(e));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw ValidationError("duplicate time-edge " + edge_text(edges[i]));
  edges_ = std::move(edges);
  lifetime_ = edges_.empty() ? 0 : edges_.back().t;
  offsets_.assign(static_cast<std::size_t>(lifetime_) + 2, 0);
  for (const auto& e : edges_) ++offsets_[e.t + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

std::span<const TimeEdge> TemporalGraph::edges_at(Time t) const {
  if (t < 1 || t > lifetime_) return {};
  return std::span<const TimeEdge>(edges_.data() + offsets_[t], offsets_[t + 1] - offsets_[t]);
}

bool TemporalGraph::has_time_edge(Vertex a, Vertex b, Time t) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_at(t))
    if (e.u == a && e.v == b) return true;
  return false;
}

std::vector<Time> TemporalGraph::times_of(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  std::vector<Time> out;
  for (const auto& e : edges_)
    if (e.u == a && e.v == b) out.push_back(e.t);
  return out;
}

std::optional<std::pair<Time, Time>> TemporalGraph::interval(Vertex v) const {
  std::optional<std::pair<Time, Time>> out;
  for (const auto& e : edges_) {
    if (e.u != v && e.v != v) continue;
    if (!out) out = std::pair{e.t, e.t};
    out->first = std::min(out->first, e.t);
    out->second = std::max(out->second, e.t);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> TemporalGraph::underlying_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TemporalGraph TemporalGraph::window(Time lo, Time hi) const {
  std::vector<TimeEdge> kept;
  for (const auto& e : edges_)
    if (e.t >= lo && e.t <= hi) kept.push_back(e);
  return TemporalGraph(n_, std::move(kept));
}

TemporalGraph TemporalGraph::shifted_from(Time from) const {
  std::vector<TimeEdge> kept;
  for (const auto& e : edges_)
    if (e.t >= from) kept.push_back({e.u, e.v, e.t - from + 1});
  return TemporalGraph(n_, std::move(kept));
}

TemporalGraph TemporalGraph::relabelled(const std::vector<Vertex>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ValidationError("permutation size mismatch");
  std::vector<TimeEdge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v], e.t});
  return TemporalGraph(n_, std::move(out));
}

Snapshot snapshot(const TemporalGraph& g, Time t) {
  if (t < 0 || t > g.lifetime())
    throw RangeError("snapshot time " + std::to_string(t) + " outside [0," + std::to_string(g.lifetime()) + "]");
  return snapshot_padded(g, t);
}

Snapshot snapshot_padded(const TemporalGraph& g, Time t) {
  if (t < 0) throw RangeError("negative snapshot time");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& e : g.edges_at(t)) es.emplace_back(e.u, e.v);
  Snapshot s;
  s.t = t;
  s.graph = make_static_graph(g.n(), std::move(es));
  return s;
}

std::vector<std::vector<Vertex>> connected_components(const StaticGraph& sg) {
  Dsu dsu(sg.n);
  for (auto [a, b] : sg.edges) dsu.unite(a, b);
  std::vector<std::vector<Vertex>> groups(sg.n);
  for (Vertex v = 0; v < sg.n; ++v) groups[dsu.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& gr : groups)
    if (!gr.empty()) out.push_back(std::move(gr));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<TimedComponent> components_at(const TemporalGraph& g, Time t) {
  auto comps = connected_components(snapshot(g, t).graph);
  std::vector<TimedComponent> out;
  out.reserve(comps.size());
  for (auto& c : comps) out.push_back({t, std::move(c)});
  return out;
}

namespace {

StaticGraph filtered_underlying(const TemporalGraph& g, Time lo, Time hi) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& e : g.time_edges())
    if (e.t >= lo && e.t <= hi) es.emplace_back(e.u, e.v);
  return make_static_graph(g.n(), std::move(es));
}

void check_split_time(const TemporalGraph& g, Time t) {
  if (t < 1 || t > g.lifetime())
    throw RangeError("split time " + std::to_string(t) + " outside [1," + std::to_string(g.lifetime()) + "]");
}

}  // namespace

StaticGraph prefix_graph(const TemporalGraph& g, Time t) {
  check_split_time(g, t);
  return filtered_underlying(g, 1, t);
}

StaticGraph suffix_graph(const TemporalGraph& g, Time t) {
  check_split_time(g, t);
  return filtered_underlying(g, t, g.lifetime());
}

StaticGraph underlying_graph(const TemporalGraph& g) { return filtered_underlying(g, 1, g.lifetime()); }

bool is_strict_temporal_path(const TemporalGraph& g, std::span<const TimeEdge> seq) {
  for (const auto& e : seq)
    if (!g.has_time_edge(e.u, e.v, e.t)) throw ValidationError("not a time-edge: " + edge_text(e));
  if (seq.empty()) return true;
  std::vector<Vertex> walk;
  if (seq.size() == 1) {
    walk = {seq[0].u, seq[0].v};
  } else {
    // Orient the first edge away from the vertex shared with the second.
    const auto& a = seq[0];
    const auto& b = seq[1];
    Vertex shared;
    if (a.u == b.u || a.u == b.v)
      shared = a.u;
    else if (a.v == b.u || a.v == b.v)
      shared = a.v;
    else
      return false;
    walk = {shared == a.u ? a.v : a.u, shared};
    for (std::size_t i = 1; i < seq.size(); ++i) {
      const auto& e = seq[i];
      if (e.t <= seq[i - 1].t) return false;
      Vertex cur = walk.back();
      if (e.u == cur)
        walk.push_back(e.v);
      else if (e.v == cur)
        walk.push_back(e.u);
      else
        return false;
    }
  }
  auto sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace timw
