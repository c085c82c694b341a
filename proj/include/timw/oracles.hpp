#pragma once

#include <vector>

#include "timw/problems.hpp"
#include "timw/temporal_graph.hpp"

// Brute-force ground truth. Nothing here calls the engines or the plugins.
namespace timw::oracle {

// DFS over strictly increasing time-edge sequences without repeated vertices.
bool ham(const TemporalGraph& g);

// Largest Δ-temporal matching, searching no further once `stop_at` is reached.
int max_matching(const TemporalGraph& g, int delta, int stop_at);
bool matching(const TemporalGraph& g, int delta, int h);

// Vertices reachable from `source` by strict temporal paths; `deleted[i]` removes time_edges()[i].
std::vector<char> reachable(const TemporalGraph& g, Vertex source, const std::vector<char>& deleted = {});
bool tred(const TemporalGraph& g, Vertex source, int r, int h);
// Every vertex as a source (the multi-source problem).
bool tred_all_sources(const TemporalGraph& g, int r, int h);

struct FirefighterOptions {
  // Allow defences anywhere, not only at vertices with an edge at the current time.
  bool unrestricted = false;
};
int firefighter_max_saved(const TemporalGraph& g, Vertex root, FirefighterOptions options = {});
bool firefighter(const TemporalGraph& g, Vertex root, int h, FirefighterOptions options = {});

// Largest number of simultaneously satisfiable clauses.
int max2sat(const TwoCnf& f);

// Per-time partitions of the vertex set that form a valid decomposition.
struct Partitioning {
  // blocks[t-1]: the bags at time t
  std::vector<std::vector<std::vector<Vertex>>> blocks;
  int width() const;
};

// Every valid decomposition whose width is at most `max_width` (0: no limit).
std::vector<Partitioning> valid_decompositions(const TemporalGraph& g, int max_width = 0);
// Smallest width of any valid decomposition; 1 for edgeless graphs.
int min_tim_width(const TemporalGraph& g);

}  // namespace timw::oracle
