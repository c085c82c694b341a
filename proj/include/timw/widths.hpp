#pragma once

#include <vector>

#include "timw/temporal_graph.hpp"

namespace timw {

struct VimSequence {
  std::vector<std::vector<Vertex>> bags;    // F_0..F_Λ, sorted
  std::vector<std::vector<Vertex>> active;  // A_0..A_Λ, sorted
  int width = 1;                            // ω; 1 for edgeless graphs
};

VimSequence vim_sequence(const TemporalGraph& g);

enum class Direction { le, ge };

struct ConnectedVimWidth {
  int width = 1;
  // bags[t-1]: the d-connected bags V(C) ∩ F_t at time t, non-empty ones only.
  std::vector<std::vector<std::vector<Vertex>>> bags;
};

ConnectedVimWidth connected_vim(const TemporalGraph& g, Direction d);
inline int connected_vim_width(const TemporalGraph& g, Direction d) { return connected_vim(g, d).width; }

// ψ_∼(t) for one split time t in [1, Λ]. The ≤ side covers times before t, the ≥ side times after,
// both with bags cut from the whole graph's F.
int bidirectional_split_width(const TemporalGraph& g, Time t);
int bidirectional_cvim_width(const TemporalGraph& g);

}  // namespace timw
