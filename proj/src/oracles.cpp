#include "timw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace timw::oracle {

namespace {

struct Incidence {
  Vertex other;
  Time t;
};

std::vector<std::vector<Incidence>> incidence(const TemporalGraph& g) {
  std::vector<std::vector<Incidence>> inc(g.n());
  for (const auto& e : g.time_edges()) {
    inc[e.u].push_back({e.v, e.t});
    inc[e.v].push_back({e.u, e.t});
  }
  return inc;
}

}  // namespace

bool ham(const TemporalGraph& g) {
  const int n = g.n();
  if (n <= 1) return true;
  const auto inc = incidence(g);
  std::vector<char> seen(n, 0);
  std::function<bool(Vertex, Time, int)> dfs = [&](Vertex v, Time last, int count) {
    if (count == n) return true;
    for (const auto& [w, t] : inc[v]) {
      if (t <= last || seen[w]) continue;
      seen[w] = 1;
      const bool ok = dfs(w, t, count + 1);
      seen[w] = 0;
      if (ok) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    seen[s] = 1;
    const bool ok = dfs(s, 0, 1);
    seen[s] = 0;
    if (ok) return true;
  }
  return false;
}

int max_matching(const TemporalGraph& g, int delta, int stop_at) {
  const auto& edges = g.time_edges();
  const int m = static_cast<int>(edges.size());
  auto conflict = [&](const TimeEdge& a, const TimeEdge& b) {
    const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    return share && std::abs(a.t - b.t) < delta;
  };
  std::vector<int> chosen;
  int best = 0;
  std::function<void(int)> rec = [&](int i) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (best >= stop_at || i == m) return;
    if (static_cast<int>(chosen.size()) + (m - i) <= best) return;
    bool ok = true;
    for (int c : chosen)
      if (conflict(edges[c], edges[i])) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      if (best >= stop_at) return;
    }
    rec(i + 1);
  };
  rec(0);
  return best;
}

bool matching(const TemporalGraph& g, int delta, int h) {
  if (h <= 0) return true;
  return max_matching(g, delta, h) >= h;
}

std::vector<char> reachable(const TemporalGraph& g, Vertex source, const std::vector<char>& deleted) {
  const int inf = g.lifetime() + 1;
  std::vector<int> arrival(g.n(), inf);
  arrival[source] = 0;
  const auto& edges = g.time_edges();  // sorted by time
  std::size_t i = 0;
  while (i < edges.size()) {
    std::size_t j = i;
    while (j < edges.size() && edges[j].t == edges[i].t) ++j;
    // Arrivals at time t may not be used again at time t.
    std::vector<std::pair<Vertex, Time>> updates;
    for (std::size_t k = i; k < j; ++k) {
      if (!deleted.empty() && deleted[k]) continue;
      const auto& e = edges[k];
      if (arrival[e.u] < e.t) updates.push_back({e.v, e.t});
      if (arrival[e.v] < e.t) updates.push_back({e.u, e.t});
    }
    for (const auto& [v, t] : updates) arrival[v] = std::min(arrival[v], t);
    i = j;
  }
  std::vector<char> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = arrival[v] < inf;
  return out;
}

namespace {

// Calls f(deleted) on every set of at most h time-edges; stops when f returns true.
bool any_deletion(const TemporalGraph& g, int h, const std::function<bool(const std::vector<char>&)>& f) {
  const int m = static_cast<int>(g.size());
  std::vector<char> deleted(m, 0);
  std::function<bool(int, int)> rec = [&](int from, int left) {
    if (f(deleted)) return true;
    if (left == 0) return false;
    for (int i = from; i < m; ++i) {
      deleted[i] = 1;
      const bool ok = rec(i + 1, left - 1);
      deleted[i] = 0;
      if (ok) return true;
    }
    return false;
  };
  return rec(0, std::min(h, m));
}

int count(const std::vector<char>& v) { return static_cast<int>(std::count(v.begin(), v.end(), 1)); }

}  // namespace

bool tred(const TemporalGraph& g, Vertex source, int r, int h) {
  return any_deletion(g, h, [&](const std::vector<char>& del) { return count(reachable(g, source, del)) <= r; });
}

bool tred_all_sources(const TemporalGraph& g, int r, int h) {
  return any_deletion(g, h, [&](const std::vector<char>& del) {
    for (Vertex s = 0; s < g.n(); ++s)
      if (count(reachable(g, s, del)) > r) return false;
    return true;
  });
}

namespace {

using Mask = unsigned __int128;

int popcount(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

struct FireKey {
  Time t;
  int budget;
  Mask burning;
  Mask defended;
  bool operator==(const FireKey&) const = default;
};

struct FireKeyHash {
  std::size_t operator()(const FireKey& k) const noexcept {
    auto mix = [](std::uint64_t h, std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return h;
    };
    std::uint64_t h = mix(static_cast<std::uint64_t>(k.t), static_cast<std::uint64_t>(k.budget));
    h = mix(h, static_cast<std::uint64_t>(k.burning));
    h = mix(h, static_cast<std::uint64_t>(k.burning >> 64));
    h = mix(h, static_cast<std::uint64_t>(k.defended));
    h = mix(h, static_cast<std::uint64_t>(k.defended >> 64));
    return static_cast<std::size_t>(h);
  }
};

// Reserve game: before the fire spreads at time t we may defend up to the budget,
// which then grows by one; fire crosses every edge at t into undefended vertices.
class FireSearch {
 public:
  FireSearch(const TemporalGraph& g, FirefighterOptions options) : g_(g), options_(options) {
    const Time lam = g.lifetime();
    live_.assign(static_cast<std::size_t>(lam) + 2, 0);
    active_.assign(static_cast<std::size_t>(lam) + 2, 0);
    for (const auto& e : g.time_edges()) {
      const Mask bits = (Mask{1} << e.u) | (Mask{1} << e.v);
      active_[e.t] |= bits;
      for (Time t = 1; t <= e.t; ++t) live_[t] |= bits;
    }
  }

  // Fewest vertices that still catch fire from time t on.
  int future_burns(Time t, Mask burning, Mask defended, int budget) {
    if (t > g_.lifetime()) return 0;
    burning &= live_[t];
    defended &= live_[t];
    budget = std::min(budget, popcount(live_[t]));
    const FireKey key{t, budget, burning, defended};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Mask pool = (options_.unrestricted ? live_[t] : active_[t]) & ~burning & ~defended;
    std::vector<int> cand;
    for (int v = 0; v < g_.n(); ++v)
      if (pool >> v & 1) cand.push_back(v);
    int best = g_.n() + 1;
    const std::size_t m = cand.size();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
      const int size = std::popcount(sub);
      if (size > budget) continue;
      Mask def = defended;
      for (std::size_t i = 0; i < m; ++i)
        if (sub >> i & 1) def |= Mask{1} << cand[i];
      Mask caught = 0;
      for (const auto& e : g_.edges_at(t)) {
        const bool bu = burning >> e.u & 1, bv = burning >> e.v & 1;
        if (bu && !bv && !(def >> e.v & 1)) caught |= Mask{1} << e.v;
        if (bv && !bu && !(def >> e.u & 1)) caught |= Mask{1} << e.u;
      }
      const int cost = popcount(caught) + future_burns(t + 1, burning | caught, def, budget - size + 1);
      best = std::min(best, cost);
    }
    memo_.emplace(key, best);
    return best;
  }

 private:
  const TemporalGraph& g_;
  FirefighterOptions options_;
  std::vector<Mask> live_;
  std::vector<Mask> active_;
  std::unordered_map<FireKey, int, FireKeyHash> memo_;
};

}  // namespace

int firefighter_max_saved(const TemporalGraph& g, Vertex root, FirefighterOptions options) {
  if (g.n() > 128) throw ResourceLimitError("firefighter oracle supports at most 128 vertices");
  if (root < 0 || root >= g.n()) throw ValidationError("root out of range");
  FireSearch search(g, options);
  return g.n() - 1 - search.future_burns(1, Mask{1} << root, 0, 1);
}

bool firefighter(const TemporalGraph& g, Vertex root, int h, FirefighterOptions options) {
  return firefighter_max_saved(g, root, options) >= h;
}

int max2sat(const TwoCnf& f) {
  int best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variables); ++a) {
    auto holds = [&](int lit) {
      const bool value = a >> (std::abs(lit) - 1) & 1;
      return lit > 0 ? value : !value;
    };
    int sat = 0;
    for (const auto& [x, y] : f.clauses)
      if (holds(x) || holds(y)) ++sat;
    best = std::max(best, sat);
  }
  return best;
}

int Partitioning::width() const {
  std::size_t w = 1;
  for (const auto& per_time : blocks)
    for (const auto& b : per_time) w = std::max(w, b.size());
  return static_cast<int>(w);
}

namespace {

// Component id of each vertex in the snapshot at t.
std::vector<int> snapshot_components(const TemporalGraph& g, Time t, int& count) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : g.edges_at(t)) parent[find(e.u)] = find(e.v);
  std::vector<int> id(g.n(), -1), out(g.n());
  count = 0;
  for (int v = 0; v < g.n(); ++v) {
    const int r = find(v);
    if (id[r] < 0) id[r] = count++;
    out[v] = id[r];
  }
  return out;
}

// All ways to group `count` items into blocks (restricted growth strings).
std::vector<std::vector<int>> set_partitions(int count) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(count, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == count) {
      out.push_back(a);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

struct Layer {
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> bag_of;  // per vertex
  int width = 0;
};

}  // namespace

std::vector<Partitioning> valid_decompositions(const TemporalGraph& g, int max_width) {
  const Time lam = g.lifetime();
  const int n = g.n();
  std::vector<std::vector<Layer>> layers(lam);
  for (Time t = 1; t <= lam; ++t) {
    int comps = 0;
    const auto comp = snapshot_components(g, t, comps);
    for (const auto& grouping : set_partitions(comps)) {
      Layer l;
      const int blocks = grouping.empty() ? 0 : *std::max_element(grouping.begin(), grouping.end()) + 1;
      l.bags.assign(blocks, {});
      l.bag_of.assign(n, -1);
      for (Vertex v = 0; v < n; ++v) {
        l.bag_of[v] = grouping[comp[v]];
        l.bags[l.bag_of[v]].push_back(v);
      }
      for (const auto& b : l.bags) l.width = std::max<int>(l.width, static_cast<int>(b.size()));
      if (max_width == 0 || l.width <= max_width) layers[t - 1].push_back(std::move(l));
    }
  }
  std::vector<Partitioning> out;
  std::vector<const Layer*> chosen(lam, nullptr);
  // Union-find over all bags chosen so far; an arc joining two connected bags closes a cycle.
  std::vector<int> parent;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::function<void(Time, int)> rec = [&](Time t, int offset_prev) {
    if (t > lam) {
      Partitioning p;
      for (const auto* l : chosen) p.blocks.push_back(l->bags);
      out.push_back(std::move(p));
      return;
    }
    const int offset = static_cast<int>(parent.size());
    for (const auto& l : layers[t - 1]) {
      const auto saved = parent;
      for (std::size_t i = 0; i < l.bags.size(); ++i) parent.push_back(offset + static_cast<int>(i));
      bool acyclic = true;
      if (t > 1) {
        const Layer& prev = *chosen[t - 2];
        for (std::size_t i = 0; i < prev.bags.size() && acyclic; ++i)
          for (std::size_t j = 0; j < l.bags.size() && acyclic; ++j) {
            bool meet = false;
            for (Vertex v : prev.bags[i])
              if (l.bag_of[v] == static_cast<int>(j)) meet = true;
            if (!meet) continue;
            const int a = find(offset_prev + static_cast<int>(i)), b = find(offset + static_cast<int>(j));
            if (a == b) acyclic = false;
            else parent[a] = b;
          }
      }
      if (acyclic) {
        chosen[t - 1] = &l;
        rec(t + 1, offset);
      }
      parent = saved;
    }
  };
  rec(1, 0);
  return out;
}

int min_tim_width(const TemporalGraph& g) {
  if (g.lifetime() == 0) return 1;
  for (int w = 1; w <= std::max(g.n(), 1); ++w)
    if (!valid_decompositions(g, w).empty()) return w;
  return g.n();
}

}  // namespace timw::oracle
