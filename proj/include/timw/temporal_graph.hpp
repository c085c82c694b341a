#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace timw {

using Vertex = int;
using Time = int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct RangeError : Error {
  using Error::Error;
};
struct ResourceLimitError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// (u, v, t) with u < v, t >= 1.
struct TimeEdge {
  Vertex u = 0;
  Vertex v = 0;
  Time t = 0;
  bool operator==(const TimeEdge&) const = default;
};

// Canonical order: (t, u, v).
inline bool canonical_less(const TimeEdge& a, const TimeEdge& b) {
  if (a.t != b.t) return a.t < b.t;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

struct StaticGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted
  std::vector<std::vector<Vertex>> adj;          // sorted neighbour lists
  bool has_edge(Vertex a, Vertex b) const;
};

StaticGraph make_static_graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

struct Snapshot {
  Time t = 0;
  StaticGraph graph;
  int n() const { return graph.n; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return graph.edges; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return graph.adj[v]; }
  bool has_edge(Vertex a, Vertex b) const { return graph.has_edge(a, b); }
  bool isolated(Vertex v) const { return graph.adj[v].empty(); }
};

struct TimedComponent {
  Time t = 0;
  std::vector<Vertex> vertices;  // sorted
  bool operator==(const TimedComponent&) const = default;
};

class TemporalGraph {
 public:
  TemporalGraph() = default;
  // Throws ValidationError on self-loops, duplicates, bad ids or t < 1.
  TemporalGraph(int n, std::vector<TimeEdge> edges);

  int n() const { return n_; }
  Time lifetime() const { return lifetime_; }
  const std::vector<TimeEdge>& time_edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  // Edges with time exactly t; t = 0 gives an empty range.
  std::span<const TimeEdge> edges_at(Time t) const;
  bool has_time_edge(Vertex a, Vertex b, Time t) const;
  std::vector<Time> times_of(Vertex a, Vertex b) const;
  // First and last incident time, if any.
  std::optional<std::pair<Time, Time>> interval(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> underlying_edges() const;

  // Keep edges with lo <= t <= hi; times unchanged.
  TemporalGraph window(Time lo, Time hi) const;
  // Drop edges before `from` and shift the rest so `from` becomes 1.
  TemporalGraph shifted_from(Time from) const;
  // Apply a vertex permutation perm[old] = new.
  TemporalGraph relabelled(const std::vector<Vertex>& perm) const;

 private:
  int n_ = 0;
  Time lifetime_ = 0;
  std::vector<TimeEdge> edges_;
  std::vector<std::size_t> offsets_;  // offsets_[t] .. offsets_[t+1]
};

// max(Λ, 1): engines always run over at least one snapshot.
inline Time effective_lifetime(const TemporalGraph& g) { return g.lifetime() < 1 ? 1 : g.lifetime(); }

// Snapshot at t; 0 <= t <= Λ (t = 0 is empty). Throws RangeError otherwise.
Snapshot snapshot(const TemporalGraph& g, Time t);
// Like snapshot but any t >= 0; times beyond Λ are empty.
Snapshot snapshot_padded(const TemporalGraph& g, Time t);

// Components of G_t ordered by smallest member; singletons included.
std::vector<TimedComponent> components_at(const TemporalGraph& g, Time t);
std::vector<std::vector<Vertex>> connected_components(const StaticGraph& sg);

// Underlying graph of edges with time <= t (resp. >= t); 1 <= t <= Λ.
StaticGraph prefix_graph(const TemporalGraph& g, Time t);
StaticGraph suffix_graph(const TemporalGraph& g, Time t);
StaticGraph underlying_graph(const TemporalGraph& g);

// Throws ValidationError if an element is not a time-edge of g.
bool is_strict_temporal_path(const TemporalGraph& g, std::span<const TimeEdge> seq);

}  // namespace timw
