#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "timw/generators.hpp"
#include "timw/tim_engine.hpp"

namespace timw::support {

// Random graph with n in [n_lo, n_hi] and lifetime in [1, lam_hi], drawn from `seed`.
TemporalGraph random_graph(std::uint64_t seed, int n_lo, int n_hi, Time lam_hi, int max_times = 2);

// Every temporal graph on n vertices whose edges use times from [1, lam_hi].
// Calls f(g) for each; enumeration order is fixed.
template <class F>
void for_each_small_graph(int n, Time lam_hi, F&& f) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint64_t per_pair = std::uint64_t{1} << lam_hi;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= per_pair;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<TimeEdge> edges;
    std::uint64_t c = code;
    for (const auto& [u, v] : pairs) {
      const auto mask = c % per_pair;
      c /= per_pair;
      for (Time t = 1; t <= lam_hi; ++t)
        if (mask >> (t - 1) & 1) edges.push_back({u, v, t});
    }
    f(TemporalGraph(n, std::move(edges)));
  }
}

// Smallest edge encoding over all vertex relabellings; equal for isomorphic graphs.
std::vector<TimeEdge> canonical_edges(const TemporalGraph& g);

// Realisable profiles of node s by enumerating whole configurations of its subtree.
std::vector<Profile> brute_force_profiles(const TimPlugin& plugin, const TemporalGraph& g,
                                          const TwoStepDecomposition& ts, int s);

// Seconds spent in f().
template <class F>
double seconds(F&& f);

}  // namespace timw::support

#include <chrono>

template <class F>
double timw::support::seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
