#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "support.hpp"
#include "timw/decomposition.hpp"
#include "timw/oracles.hpp"

using namespace timw;

namespace {

// Breadth-first search over (vertex, arrival time) states.
std::vector<char> reachable_by_state_search(const TemporalGraph& g, Vertex source) {
  std::set<std::pair<Vertex, Time>> seen{{source, 0}};
  std::deque<std::pair<Vertex, Time>> queue{{source, 0}};
  std::vector<char> out(g.n(), 0);
  out[source] = 1;
  while (!queue.empty()) {
    const auto [v, t] = queue.front();
    queue.pop_front();
    for (const auto& e : g.time_edges()) {
      if (e.t <= t || (e.u != v && e.v != v)) continue;
      const Vertex w = e.u == v ? e.v : e.u;
      out[w] = 1;
      if (seen.insert({w, e.t}).second) queue.push_back({w, e.t});
    }
  }
  return out;
}

int count(const std::vector<char>& v) { return static_cast<int>(std::count(v.begin(), v.end(), 1)); }

}  // namespace

TEST(Oracles, HamiltonianExamples) {
  EXPECT_TRUE(oracle::ham(TemporalGraph(1, {})));
  EXPECT_TRUE(oracle::ham(TemporalGraph(3, {{0, 1, 1}, {1, 2, 2}})));
  EXPECT_FALSE(oracle::ham(TemporalGraph(3, {{0, 1, 1}, {0, 2, 1}})));
  EXPECT_FALSE(oracle::ham(TemporalGraph(2, {})));
}

TEST(Oracles, MatchingExamples) {
  const TemporalGraph twice(2, {{0, 1, 1}, {0, 1, 2}});
  EXPECT_TRUE(oracle::matching(twice, 5, 0));
  EXPECT_FALSE(oracle::matching(twice, 2, 2));
  EXPECT_TRUE(oracle::matching(twice, 1, 2));
  EXPECT_EQ(oracle::max_matching(twice, 3, 10), 1);
}

TEST(Oracles, TredExamples) {
  const TemporalGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}});
  EXPECT_FALSE(oracle::tred(star, 0, 1, 2));
  EXPECT_TRUE(oracle::tred(star, 0, 1, 3));
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = support::random_graph(seed, 1, 7, 5, 2);
    const int base = count(oracle::reachable(g, 0));
    for (int r = 0; r <= g.n(); ++r) EXPECT_EQ(oracle::tred(g, 0, r, 0), base <= r);
  }
}

TEST(Oracles, ReachabilityMatchesStateSearch) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = support::random_graph(seed, 1, 9, 7, 3);
    for (Vertex s = 0; s < g.n(); ++s)
      EXPECT_EQ(oracle::reachable(g, s), reachable_by_state_search(g, s)) << "seed " << seed << " source " << s;
  }
}

TEST(Oracles, ReachabilityHonoursDeletions) {
  const TemporalGraph path(3, {{0, 1, 1}, {1, 2, 2}});
  EXPECT_EQ(count(oracle::reachable(path, 0)), 3);
  EXPECT_EQ(count(oracle::reachable(path, 0, {0, 1})), 2);
  EXPECT_EQ(count(oracle::reachable(path, 0, {1, 0})), 1);
  EXPECT_EQ(count(oracle::reachable(TemporalGraph(3, {{0, 1, 2}, {1, 2, 2}}), 0)), 2);
}

TEST(Oracles, FirefighterExamples) {
  const TemporalGraph isolated(5, {{1, 2, 1}, {3, 4, 2}});
  EXPECT_EQ(oracle::firefighter_max_saved(isolated, 0), 4);
  const TemporalGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  EXPECT_TRUE(oracle::firefighter(star, 0, 1));
  EXPECT_FALSE(oracle::firefighter(star, 0, 2));
  // A late fire leaves time to build up defences.
  const TemporalGraph late(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}});
  EXPECT_EQ(oracle::firefighter_max_saved(late, 0), 3);
}

TEST(Oracles, Monotonicity) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto g = support::random_graph(seed, 1, 6, 4, 2);
    for (int delta = 1; delta <= 3; ++delta)
      for (int h = 1; h <= 4; ++h)
        if (oracle::matching(g, delta, h)) EXPECT_TRUE(oracle::matching(g, delta, h - 1));
    for (int r = 0; r <= g.n(); ++r)
      for (int h = 0; h <= 2; ++h)
        if (oracle::tred(g, 0, r, h)) {
          EXPECT_TRUE(oracle::tred(g, 0, r + 1, h));
          EXPECT_TRUE(oracle::tred(g, 0, r, h + 1));
        }
    for (int h = 1; h <= g.n(); ++h)
      if (oracle::firefighter(g, 0, h)) EXPECT_TRUE(oracle::firefighter(g, 0, h - 1));
  }
}

TEST(Oracles, RestrictedDefencesLoseNothing) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = support::random_graph(seed, 2, 6, 4, 2);
    EXPECT_EQ(oracle::firefighter_max_saved(g, 0), oracle::firefighter_max_saved(g, 0, {.unrestricted = true}))
        << "seed " << seed;
  }
}

TEST(Oracles, TredAllSources) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = support::random_graph(seed, 2, 5, 3, 1);
    for (int r = 1; r <= g.n(); ++r) {
      const bool all = oracle::tred_all_sources(g, r, 1);
      if (all)
        for (Vertex s = 0; s < g.n(); ++s) EXPECT_TRUE(oracle::tred(g, s, r, 1));
    }
    EXPECT_TRUE(oracle::tred_all_sources(g, g.n(), 0));
  }
}

TEST(Oracles, Max2Sat) {
  TwoCnf f;
  f.variables = 2;
  f.clauses = {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}};
  EXPECT_EQ(oracle::max2sat(f), 3);
  f.clauses = {{1, 2}, {-1, 2}};
  EXPECT_EQ(oracle::max2sat(f), 2);
}

TEST(Oracles, ValidDecompositionsAreValid) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = support::random_graph(seed, 2, 4, 3, 2);
    const auto all = oracle::valid_decompositions(g);
    ASSERT_FALSE(all.empty());
    for (const auto& p : all) {
      TimDecomposition d;
      for (Time t = 1; t <= g.lifetime(); ++t)
        for (const auto& b : p.blocks[t - 1]) {
          d.time.push_back(t);
          d.bags.push_back(b);
        }
      d.arcs = implied_arcs(d.time, d.bags);
      const auto r = validate_decomposition(g, d);
      EXPECT_TRUE(r.ok()) << r.message;
    }
    // The single-bag decomposition is always among them.
    const auto widest = std::max_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.width() < b.width();
    });
    if (g.size() > 0) EXPECT_EQ(widest->width(), g.n());
    EXPECT_EQ(oracle::min_tim_width(g), tim_width(g)) << "seed " << seed;
  }
  EXPECT_EQ(oracle::min_tim_width(TemporalGraph(3, {})), 1);
}
