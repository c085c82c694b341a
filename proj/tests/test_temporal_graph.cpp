#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"
#include "timw/temporal_graph.hpp"

using namespace timw;

namespace {

std::vector<std::pair<Vertex, Vertex>> filtered(const TemporalGraph& g, bool (*keep)(Time, Time), Time t) {
  std::set<std::pair<Vertex, Vertex>> s;
  for (const auto& e : g.time_edges())
    if (keep(e.t, t)) s.insert({e.u, e.v});
  return {s.begin(), s.end()};
}

}  // namespace

TEST(TemporalGraph, SnapshotOfSingleEdge) {
  const TemporalGraph g(2, {{0, 1, 3}});
  EXPECT_EQ(g.lifetime(), 3);
  const auto s3 = snapshot(g, 3);
  ASSERT_EQ(s3.edges().size(), 1u);
  EXPECT_EQ(s3.edges()[0], std::make_pair(0, 1));
  EXPECT_TRUE(snapshot(g, 1).edges().empty());
  EXPECT_TRUE(snapshot(g, 0).edges().empty());
  EXPECT_THROW(snapshot(g, 4), RangeError);
  EXPECT_TRUE(snapshot_padded(g, 9).edges().empty());
}

TEST(TemporalGraph, SnapshotsRepartitionTheEdges) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto g = support::random_graph(seed, 1, 8, 6, 3);
    std::multiset<std::tuple<Time, Vertex, Vertex>> from_snapshots, direct;
    for (Time t = 1; t <= g.lifetime(); ++t) {
      const auto gt = snapshot(g, t);
      for (const auto& [u, v] : gt.edges()) from_snapshots.insert({t, u, v});
    }
    for (const auto& e : g.time_edges()) direct.insert({e.t, e.u, e.v});
    EXPECT_EQ(from_snapshots, direct) << "seed " << seed;
  }
}

TEST(TemporalGraph, RejectsMalformedEdges) {
  EXPECT_THROW(TemporalGraph(2, {{0, 0, 1}}), ValidationError);
  EXPECT_THROW(TemporalGraph(2, {{0, 1, 1}, {1, 0, 1}}), ValidationError);
  EXPECT_THROW(TemporalGraph(2, {{0, 2, 1}}), ValidationError);
  EXPECT_THROW(TemporalGraph(2, {{0, 1, 0}}), ValidationError);
  EXPECT_NO_THROW(TemporalGraph(2, {{0, 1, 1}, {0, 1, 2}}));
}

TEST(TemporalGraph, ComponentsAtExamples) {
  const TemporalGraph g(4, {{0, 1, 1}, {2, 3, 1}, {1, 2, 2}});
  const auto c1 = components_at(g, 1);
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1[0].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(c1[1].vertices, (std::vector<Vertex>{2, 3}));
  const TemporalGraph h(4, {{0, 1, 2}});
  const auto c = components_at(h, 1);
  EXPECT_EQ(c.size(), 4u);
  for (const auto& comp : c) EXPECT_EQ(comp.vertices.size(), 1u);
}

TEST(TemporalGraph, ComponentsMatchUnionFind) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto g = support::random_graph(seed, 1, 9, 5, 2);
    for (Time t = 0; t <= g.lifetime(); ++t) {
      std::vector<int> parent(g.n());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& e : g.edges_at(t)) parent[find(e.u)] = find(e.v);
      const auto comps = components_at(g, t);
      std::vector<int> block(g.n(), -1);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        EXPECT_EQ(comps[i].t, t);
        EXPECT_TRUE(std::is_sorted(comps[i].vertices.begin(), comps[i].vertices.end()));
        for (Vertex v : comps[i].vertices) {
          EXPECT_EQ(block[v], -1) << "vertex in two blocks";
          block[v] = static_cast<int>(i);
        }
      }
      for (Vertex u = 0; u < g.n(); ++u) {
        ASSERT_NE(block[u], -1);
        for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(block[u] == block[v], find(u) == find(v));
      }
      for (std::size_t i = 1; i < comps.size(); ++i)
        EXPECT_LT(comps[i - 1].vertices.front(), comps[i].vertices.front());
    }
  }
}

TEST(TemporalGraph, PrefixSuffixExamples) {
  const TemporalGraph g(3, {{0, 1, 1}, {1, 2, 3}});
  EXPECT_EQ(prefix_graph(g, 2).edges, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
  EXPECT_EQ(suffix_graph(g, 2).edges, (std::vector<std::pair<Vertex, Vertex>>{{1, 2}}));
  EXPECT_EQ(prefix_graph(g, 3).edges, underlying_graph(g).edges);
  EXPECT_EQ(suffix_graph(g, 1).edges, underlying_graph(g).edges);
  EXPECT_THROW(prefix_graph(g, 0), RangeError);
  EXPECT_THROW(suffix_graph(g, 4), RangeError);
}

TEST(TemporalGraph, PrefixSuffixMatchFilteredScan) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto g = support::random_graph(seed, 2, 8, 6, 3);
    for (Time t = 1; t <= g.lifetime(); ++t) {
      EXPECT_EQ(prefix_graph(g, t).edges, filtered(g, [](Time e, Time x) { return e <= x; }, t));
      EXPECT_EQ(suffix_graph(g, t).edges, filtered(g, [](Time e, Time x) { return e >= x; }, t));
    }
    if (g.lifetime() >= 1) {
      EXPECT_EQ(prefix_graph(g, g.lifetime()).edges, underlying_graph(g).edges);
      EXPECT_EQ(suffix_graph(g, 1).edges, underlying_graph(g).edges);
    }
  }
}

TEST(TemporalGraph, StrictPathExamples) {
  const TemporalGraph g(3, {{0, 1, 1}, {1, 2, 2}, {0, 1, 2}, {0, 2, 3}});
  const std::vector<TimeEdge> ok{{0, 1, 1}, {1, 2, 2}};
  const std::vector<TimeEdge> plateau{{0, 1, 2}, {1, 2, 2}};
  const std::vector<TimeEdge> repeat{{0, 1, 1}, {1, 2, 2}, {0, 2, 3}};
  EXPECT_TRUE(is_strict_temporal_path(g, ok));
  EXPECT_FALSE(is_strict_temporal_path(g, plateau));
  EXPECT_FALSE(is_strict_temporal_path(g, repeat));
  const std::vector<TimeEdge> missing{{1, 2, 1}};
  EXPECT_THROW(is_strict_temporal_path(g, missing), ValidationError);
}

TEST(TemporalGraph, StrictPathRejectsAnyPlateau) {
  // Chains 0-1-...-(n-1) where one step repeats the previous time.
  for (int n = 3; n <= 7; ++n) {
    for (int plateau = 1; plateau + 1 < n; ++plateau) {
      std::vector<TimeEdge> seq;
      Time t = 0;
      for (Vertex i = 0; i + 1 < n; ++i) {
        if (i != plateau) ++t;
        seq.push_back({i, i + 1, t});
      }
      const TemporalGraph g(n, seq);
      EXPECT_FALSE(is_strict_temporal_path(g, seq));
    }
  }
}

TEST(TemporalGraph, IntervalsAndTransforms) {
  const TemporalGraph g(4, {{0, 1, 2}, {1, 2, 4}, {0, 1, 5}});
  EXPECT_EQ(g.interval(1), std::make_optional(std::make_pair(2, 5)));
  EXPECT_FALSE(g.interval(3).has_value());
  EXPECT_EQ(g.times_of(0, 1), (std::vector<Time>{2, 5}));
  const auto s = g.shifted_from(4);
  EXPECT_EQ(s.lifetime(), 2);
  EXPECT_TRUE(s.has_time_edge(1, 2, 1));
  EXPECT_TRUE(s.has_time_edge(0, 1, 2));
  const auto w = g.window(2, 4);
  EXPECT_EQ(w.size(), 2u);
  const auto r = g.relabelled({3, 2, 1, 0});
  EXPECT_TRUE(r.has_time_edge(2, 3, 2));
  EXPECT_TRUE(r.has_time_edge(1, 2, 4));
}
