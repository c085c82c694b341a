#pragma once

#include <cstdint>
#include <random>

#include "timw/problems.hpp"
#include "timw/temporal_graph.hpp"

namespace timw {

// std::mt19937_64 with fixed reductions, so a seed gives the same instance on any platform:
//   below(m): rejection sampling on the raw 64-bit output, then x % m
//   unit():   (x >> 11) * 2^-53
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t m);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct RandomGraphParams {
  int n = 5;
  Time lifetime = 4;
  double edge_probability = 0.5;
  // Each present edge gets between 1 and this many distinct times, uniformly.
  int max_times_per_edge = 1;
  std::uint64_t seed = 1;
};

// Pairs u < v in lexicographic order; each is kept with the given probability.
TemporalGraph gen_random(const RandomGraphParams& p);

struct OrderedTreeParams {
  int n = 8;
  int max_children = 3;
  // Width of the time window available to the child edges of one vertex.
  int spread = 3;
  // Each child edge gets between 1 and this many distinct times inside its window.
  int max_times_per_edge = 2;
  Time max_lifetime = 1000;
  std::uint64_t seed = 1;
};

// Random rooted tree (root 0) whose edges at a vertex precede every edge lower in its subtree.
TemporalGraph gen_ordered_tree(const OrderedTreeParams& p);

// max_t max_v deg(v) + 1 in the graph that also activates each edge between its first and last time.
int ordered_tree_width(const TemporalGraph& g);

// Path 0-1-...-(n-1) with lifetime n and TIM width 2.
TemporalGraph gen_width2_path(int n);

struct RandomCnfParams {
  int variables = 3;
  int clauses = 3;
  std::uint64_t seed = 1;
};
// Clauses over two distinct variables with random signs; k is left at 0.
TwoCnf gen_random_2cnf(const RandomCnfParams& p);

}  // namespace timw
