#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "timw/temporal_graph.hpp"

namespace timw {

struct TimDecomposition {
  std::vector<Time> time;                 // τ(i)
  std::vector<std::vector<Vertex>> bags;  // B(i), sorted
  std::vector<std::pair<int, int>> arcs;  // (i, j) with τ(j) = τ(i) + 1, sorted

  std::size_t size() const { return bags.size(); }
  // Largest bag; 1 when there are no nodes.
  int width() const;
  bool operator==(const TimDecomposition&) const = default;
};

// Narrowest of several valid constructions: component bags with cycle merging (all same-time pairs on a
// cycle, or one cheapest pair at a time), and bags cut from prefix/suffix components. Exact minimality is
// checked against exhaustive enumeration on small graphs only.
TimDecomposition compute_tim_decomposition(const TemporalGraph& g);
// Same construction over times 1..horizon (horizon >= Λ); later snapshots are empty.
TimDecomposition compute_tim_decomposition(const TemporalGraph& g, Time horizon);
int tim_width(const TemporalGraph& g);

// Arcs implied by bags and times.
std::vector<std::pair<int, int>> implied_arcs(const std::vector<Time>& time, const std::vector<std::vector<Vertex>>& bags);
// One bag per F_t plus singletons for vertices outside F_t.
TimDecomposition decomposition_from_vim(const TemporalGraph& g);
// All vertices in one bag at every time.
TimDecomposition single_bag_decomposition(const TemporalGraph& g);

enum class DecompositionCondition { none, bag_shape, vertex_cover, edge_cover, arc_set, tree, node_count };

struct DecompositionReport {
  DecompositionCondition condition = DecompositionCondition::none;
  std::string message;
  std::vector<int> nodes;  // witnesses
  bool ok() const { return condition == DecompositionCondition::none; }
};

std::string to_string(DecompositionCondition c);
DecompositionReport validate_decomposition(const TemporalGraph& g, const TimDecomposition& d);

struct RootedTimDecomposition {
  TimDecomposition tree;               // original nodes followed by time-0 copies
  std::size_t original_nodes = 0;      // copies have ids >= original_nodes
  std::vector<int> copy_of;            // original node of a copy, else -1
  std::vector<int> roots;              // one per tree of the forest
  std::vector<int> parent;             // -1 at roots
  std::vector<std::vector<int>> children;
  std::vector<int> post_order;         // children before parents
  std::vector<int> tree_of;            // index into roots

  int root() const { return roots.front(); }
  Time time(int s) const { return tree.time[s]; }
  const std::vector<Vertex>& bag(int s) const { return tree.bags[s]; }
};

// Root every tree at its time-Λ bag holding the smallest vertex; `root_override`
// replaces the root of the tree that contains it.
RootedTimDecomposition root_and_augment(const TimDecomposition& d, std::optional<int> root_override = std::nullopt);

struct VertexTime {
  Vertex v = 0;
  Time t = 0;
  auto operator<=>(const VertexTime&) const = default;
};

struct TwoStepDecomposition {
  RootedTimDecomposition rooted;
  std::vector<std::vector<VertexTime>> bags;  // B²(s), sorted by (v, t)
  // 𝒞^s: timed components inside B²(s), sorted by (t, smallest vertex). Time 0 uses G_1.
  std::vector<std::vector<TimedComponent>> components;

  int width() const;
};

TwoStepDecomposition build_two_step(const TemporalGraph& g, const RootedTimDecomposition& rd);

}  // namespace timw
