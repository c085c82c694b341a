#include "timw/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "timw/widths.hpp"

namespace timw {

int TimDecomposition::width() const {
  int w = 1;
  for (const auto& b : bags) w = std::max<int>(w, static_cast<int>(b.size()));
  return w;
}

std::vector<std::pair<int, int>> implied_arcs(const std::vector<Time>& time, const std::vector<std::vector<Vertex>>& bags) {
  std::map<Time, std::vector<int>> by_time;
  for (std::size_t i = 0; i < bags.size(); ++i) by_time[time[i]].push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [t, nodes] : by_time) {
    auto next = by_time.find(t + 1);
    if (next == by_time.end()) continue;
    for (int i : nodes)
      for (int j : next->second) {
        const auto& a = bags[i];
        const auto& b = bags[j];
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty()) arcs.emplace_back(i, j);
      }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

namespace {

// Working state of the merge loop: label[t][v] is the node holding (v, t).
struct MergeState {
  int n = 0;
  Time horizon = 0;
  std::vector<std::vector<int>> label;  // index t-1
  std::vector<Time> node_time;
  std::vector<char> alive;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::set<int>> nb(node_time.size());
    for (Time t = 1; t < horizon; ++t)
      for (Vertex v = 0; v < n; ++v) {
        int a = label[t - 1][v];
        int b = label[t][v];
        nb[a].insert(b);
        nb[b].insert(a);
      }
    std::vector<std::vector<int>> out(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) out[i].assign(nb[i].begin(), nb[i].end());
    return out;
  }

  // Returns the node sequence of one cycle, or empty if the graph is a forest.
  std::vector<int> find_cycle() const {
    const auto adj = adjacency();
    const std::size_t m = node_time.size();
    std::vector<int> parent(m, -1), state(m, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> cursor(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
      if (!alive[r] || state[r] != 0) continue;
      std::vector<int> stack{static_cast<int>(r)};
      state[r] = 1;
      while (!stack.empty()) {
        int w = stack.back();
        if (cursor[w] == adj[w].size()) {
          state[w] = 2;
          stack.pop_back();
          continue;
        }
        int u = adj[w][cursor[w]++];
        if (u == parent[w]) continue;
        if (state[u] == 0) {
          parent[u] = w;
          state[u] = 1;
          stack.push_back(u);
        } else if (state[u] == 1) {
          std::vector<int> cycle{w};
          for (int x = w; x != u;) {
            x = parent[x];
            cycle.push_back(x);
          }
          return cycle;
        }
      }
    }
    return {};
  }

  void merge_nodes(Time t, int keep, int gone) {
    for (auto& l : label[t - 1])
      if (l == gone) l = keep;
    alive[gone] = 0;
  }

  // Merges every same-time pair on the cycle.
  void merge_cycle(const std::vector<int>& cycle) {
    std::map<Time, std::vector<int>> by_time;
    for (int x : cycle) by_time[node_time[x]].push_back(x);
    for (auto& [t, nodes] : by_time) {
      if (nodes.size() < 2) continue;
      std::sort(nodes.begin(), nodes.end());
      for (std::size_t k = 1; k < nodes.size(); ++k) merge_nodes(t, nodes.front(), nodes[k]);
    }
  }

  std::vector<int> sizes() const {
    std::vector<int> out(node_time.size(), 0);
    for (const auto& row : label)
      for (int l : row) ++out[l];
    return out;
  }

  // Merges only the same-time pair on the cycle with the smallest union.
  void merge_cheapest_pair(const std::vector<int>& cycle) {
    const auto size = sizes();
    int best_a = -1, best_b = -1, best = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      for (std::size_t j = i + 1; j < cycle.size(); ++j) {
        const int a = std::min(cycle[i], cycle[j]), b = std::max(cycle[i], cycle[j]);
        if (node_time[a] != node_time[b]) continue;
        const int w = size[a] + size[b];
        if (best_a == -1 || w < best || (w == best && std::pair(a, b) < std::pair(best_a, best_b))) {
          best_a = a;
          best_b = b;
          best = w;
        }
      }
    merge_nodes(node_time[best_a], best_a, best_b);
  }

  int width() const {
    const auto size = sizes();
    return std::max(1, size.empty() ? 1 : *std::max_element(size.begin(), size.end()));
  }

  TimDecomposition to_decomposition() const {
    std::vector<int> new_id(node_time.size(), -1);
    TimDecomposition d;
    const auto size = sizes();
    for (std::size_t i = 0; i < node_time.size(); ++i) {
      if (!alive[i] || size[i] == 0) continue;
      new_id[i] = static_cast<int>(d.time.size());
      d.time.push_back(node_time[i]);
      d.bags.emplace_back();
    }
    for (Time t = 1; t <= horizon; ++t)
      for (Vertex v = 0; v < n; ++v) d.bags[new_id[label[t - 1][v]]].push_back(v);
    d.arcs = implied_arcs(d.time, d.bags);
    return d;
  }
};

// key[t-1][v] groups the vertices at time t; equal keys share a bag.
MergeState from_keys(int n, Time horizon, const std::vector<std::vector<int>>& key) {
  MergeState st;
  st.n = n;
  st.horizon = horizon;
  st.label.assign(horizon, std::vector<int>(n, -1));
  for (Time t = 1; t <= horizon; ++t) {
    std::map<int, int> id;
    for (Vertex v = 0; v < n; ++v) {
      auto [it, fresh] = id.emplace(key[t - 1][v], static_cast<int>(st.node_time.size()));
      if (fresh) {
        st.node_time.push_back(t);
        st.alive.push_back(1);
      }
      st.label[t - 1][v] = it->second;
    }
  }
  return st;
}

// Component index of each vertex in the given static graph.
std::vector<int> component_index(const StaticGraph& sg) {
  std::vector<int> out(sg.n, -1);
  int c = 0;
  for (const auto& comp : connected_components(sg)) {
    for (Vertex v : comp) out[v] = c;
    ++c;
  }
  return out;
}

// Keys placing F_t ∩ C in one bag per component C of the given graphs, everything else in singletons.
std::vector<int> cut_keys(const std::vector<int>& comp, const std::vector<char>& in_f) {
  const int n = static_cast<int>(comp.size());
  std::vector<int> key(n);
  for (Vertex v = 0; v < n; ++v) key[v] = in_f[v] ? comp[v] : n + v;
  return key;
}

}  // namespace

TimDecomposition compute_tim_decomposition(const TemporalGraph& g) { return compute_tim_decomposition(g, g.lifetime()); }

TimDecomposition compute_tim_decomposition(const TemporalGraph& g, Time horizon) {
  if (horizon < g.lifetime()) throw RangeError("horizon below lifetime");
  const int n = g.n();
  std::vector<std::vector<int>> snapshot_keys(horizon);
  for (Time t = 1; t <= horizon; ++t) snapshot_keys[t - 1] = component_index(snapshot_padded(g, t).graph);

  // Component bags with every same-time pair on a cycle merged.
  MergeState st = from_keys(n, horizon, snapshot_keys);
  bool had_cycle = false;
  for (;;) {
    auto cycle = st.find_cycle();
    if (cycle.empty()) break;
    had_cycle = true;
    st.merge_cycle(cycle);
  }
  MergeState best = std::move(st);
  int best_width = best.width();
  auto offer = [&](MergeState cand, bool check_cycles) {
    const int w = cand.width();
    if (w >= best_width) return;
    if (check_cycles && !cand.find_cycle().empty()) return;
    best = std::move(cand);
    best_width = w;
  };

  // Merging every pair on a cycle can overshoot; merging one cheapest pair at a time sometimes does better.
  if (had_cycle) {
    MergeState greedy = from_keys(n, horizon, snapshot_keys);
    for (;;) {
      auto cycle = greedy.find_cycle();
      if (cycle.empty()) break;
      greedy.merge_cheapest_pair(cycle);
    }
    offer(std::move(greedy), false);
  }

  // Bags cut from the prefix and suffix components, and their splices at one split time.
  const Time lam = g.lifetime();
  if (lam >= 1 && best_width > 1) {
    const auto seq = vim_sequence(g);
    std::vector<std::vector<int>> le(horizon), ge(horizon), whole(horizon);
    for (Time t = 1; t <= horizon; ++t) {
      std::vector<char> in_f(n, 0);
      if (t <= lam)
        for (Vertex v : seq.bags[t]) in_f[v] = 1;
      le[t - 1] = cut_keys(component_index(prefix_graph(g, std::min(t, lam))), in_f);
      ge[t - 1] = cut_keys(component_index(suffix_graph(g, std::min(t, lam))), in_f);
      whole[t - 1] = cut_keys(std::vector<int>(n, 0), in_f);
    }
    offer(from_keys(n, horizon, le), true);
    offer(from_keys(n, horizon, ge), true);
    for (Time split = 2; split < lam; ++split) {
      std::vector<std::vector<int>> keys(horizon);
      for (Time t = 1; t <= horizon; ++t) keys[t - 1] = t < split ? le[t - 1] : t == split ? whole[t - 1] : ge[t - 1];
      offer(from_keys(n, horizon, keys), true);
    }
  }
  return best.to_decomposition();
}

int tim_width(const TemporalGraph& g) { return compute_tim_decomposition(g).width(); }

TimDecomposition decomposition_from_vim(const TemporalGraph& g) {
  const auto seq = vim_sequence(g);
  TimDecomposition d;
  for (Time t = 1; t <= g.lifetime(); ++t) {
    std::vector<char> in_f(g.n(), 0);
    if (!seq.bags[t].empty()) {
      d.time.push_back(t);
      d.bags.push_back(seq.bags[t]);
      for (Vertex v : seq.bags[t]) in_f[v] = 1;
    }
    for (Vertex v = 0; v < g.n(); ++v)
      if (!in_f[v]) {
        d.time.push_back(t);
        d.bags.push_back({v});
      }
  }
  d.arcs = implied_arcs(d.time, d.bags);
  return d;
}

TimDecomposition single_bag_decomposition(const TemporalGraph& g) {
  TimDecomposition d;
  std::vector<Vertex> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  if (g.n() == 0) return d;
  for (Time t = 1; t <= g.lifetime(); ++t) {
    d.time.push_back(t);
    d.bags.push_back(all);
  }
  d.arcs = implied_arcs(d.time, d.bags);
  return d;
}

std::string to_string(DecompositionCondition c) {
  switch (c) {
    case DecompositionCondition::none: return "ok";
    case DecompositionCondition::bag_shape: return "bag-shape";
    case DecompositionCondition::vertex_cover: return "condition 1 (vertex-time cover)";
    case DecompositionCondition::edge_cover: return "condition 2 (time-edge cover)";
    case DecompositionCondition::arc_set: return "condition 3 (arc set)";
    case DecompositionCondition::tree: return "tree";
    case DecompositionCondition::node_count: return "node-count";
  }
  return "unknown";
}

DecompositionReport validate_decomposition(const TemporalGraph& g, const TimDecomposition& d) {
  auto fail = [](DecompositionCondition c, std::string msg, std::vector<int> nodes) {
    return DecompositionReport{c, std::move(msg), std::move(nodes)};
  };
  const int n = g.n();
  const Time lam = g.lifetime();
  const int m = static_cast<int>(d.bags.size());
  if (d.time.size() != d.bags.size()) return fail(DecompositionCondition::bag_shape, "time and bag lists differ in length", {});
  for (int i = 0; i < m; ++i) {
    const auto& b = d.bags[i];
    if (b.empty()) return fail(DecompositionCondition::bag_shape, "empty bag", {i});
    if (d.time[i] < 1 || d.time[i] > lam) return fail(DecompositionCondition::bag_shape, "bag time outside [1, Λ]", {i});
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end() || b.front() < 0 ||
        b.back() >= n)
      return fail(DecompositionCondition::bag_shape, "bag not a sorted set of vertex ids", {i});
  }
  // holder[t][v]: node holding (v, t)
  std::vector<std::vector<int>> holder(static_cast<std::size_t>(lam) + 1, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i)
    for (Vertex v : d.bags[i]) {
      int& h = holder[d.time[i]][v];
      if (h != -1)
        return fail(DecompositionCondition::vertex_cover,
                    "vertex " + std::to_string(v) + " in two bags at time " + std::to_string(d.time[i]), {h, i});
      h = i;
    }
  for (Time t = 1; t <= lam; ++t)
    for (Vertex v = 0; v < n; ++v)
      if (holder[t][v] == -1)
        return fail(DecompositionCondition::vertex_cover,
                    "vertex " + std::to_string(v) + " in no bag at time " + std::to_string(t), {});
  for (const auto& e : g.time_edges()) {
    int a = holder[e.t][e.u];
    int b = holder[e.t][e.v];
    if (a != b)
      return fail(DecompositionCondition::edge_cover,
                  "time-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.t) +
                      ") split across bags",
                  {a, b});
  }
  auto expected = implied_arcs(d.time, d.bags);
  auto given = d.arcs;
  std::sort(given.begin(), given.end());
  if (std::adjacent_find(given.begin(), given.end()) != given.end())
    return fail(DecompositionCondition::arc_set, "duplicate arc", {});
  if (given != expected) {
    std::vector<std::pair<int, int>> diff;
    std::set_symmetric_difference(given.begin(), given.end(), expected.begin(), expected.end(), std::back_inserter(diff));
    return fail(DecompositionCondition::arc_set, "arc set differs from implied arcs", {diff.front().first, diff.front().second});
  }
  // Forest check with union-find; then each underlying component must sit in one tree.
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : given) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return fail(DecompositionCondition::tree, "arcs contain a cycle", {a, b});
    parent[ra] = rb;
  }
  if (lam >= 1) {
    for (const auto& comp : connected_components(underlying_graph(g))) {
      int r = find(holder[1][comp.front()]);
      for (Vertex v : comp)
        for (Time t = 1; t <= lam; ++t)
          if (find(holder[t][v]) != r)
            return fail(DecompositionCondition::tree, "underlying component split over several trees", {holder[t][v]});
    }
  }
  if (static_cast<long long>(m) > static_cast<long long>(n) * lam)
    return fail(DecompositionCondition::node_count, "more than nΛ nodes", {});
  return {};
}

RootedTimDecomposition root_and_augment(const TimDecomposition& d, std::optional<int> root_override) {
  RootedTimDecomposition rd;
  rd.tree = d;
  rd.original_nodes = d.size();
  const int m0 = static_cast<int>(d.size());
  rd.copy_of.assign(m0, -1);
  for (int i = 0; i < m0; ++i) {
    if (d.time[i] != 1) continue;
    const int c = static_cast<int>(rd.tree.time.size());
    rd.tree.time.push_back(0);
    rd.tree.bags.push_back(d.bags[i]);
    rd.tree.arcs.emplace_back(c, i);
    rd.copy_of.push_back(i);
  }
  std::sort(rd.tree.arcs.begin(), rd.tree.arcs.end());
  const int m = static_cast<int>(rd.tree.size());
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : rd.tree.arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  Time lam = 0;
  for (int i = 0; i < m0; ++i) lam = std::max(lam, d.time[i]);
  // Label trees, then choose roots.
  std::vector<int> tree(m, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < m; ++s) {
    if (tree[s] != -1) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    tree[s] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (int y : adj[x])
        if (tree[y] == -1) {
          tree[y] = id;
          stack.push_back(y);
        }
    }
  }
  std::vector<int> roots(members.size(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) {
    int best = -1;
    for (int x : members[k]) {
      if (d.time.size() <= static_cast<std::size_t>(x) || rd.tree.time[x] != lam) continue;
      if (best == -1 || rd.tree.bags[x].front() < rd.tree.bags[best].front()) best = x;
    }
    if (best == -1) best = *std::min_element(members[k].begin(), members[k].end());
    roots[k] = best;
  }
  if (root_override) {
    const int r = *root_override;
    if (r < 0 || r >= m) throw RangeError("root override outside node range");
    roots[tree[r]] = r;
  }
  // Order trees by their smallest vertex.
  std::vector<int> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rd.tree.bags[roots[a]].front() < rd.tree.bags[roots[b]].front();
  });
  rd.parent.assign(m, -1);
  rd.children.assign(m, {});
  rd.tree_of.assign(m, -1);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int r = roots[order[pos]];
    rd.roots.push_back(r);
    // Iterative DFS producing post-order.
    std::vector<std::pair<int, std::size_t>> stack{{r, 0}};
    rd.tree_of[r] = static_cast<int>(pos);
    while (!stack.empty()) {
      auto& [x, idx] = stack.back();
      if (idx < adj[x].size()) {
        int y = adj[x][idx++];
        if (y == rd.parent[x]) continue;
        rd.parent[y] = x;
        rd.tree_of[y] = static_cast<int>(pos);
        rd.children[x].push_back(y);
        stack.emplace_back(y, 0);
      } else {
        rd.post_order.push_back(x);
        stack.pop_back();
      }
    }
  }
  for (auto& c : rd.children) std::sort(c.begin(), c.end());
  return rd;
}

int TwoStepDecomposition::width() const {
  int w = 1;
  for (const auto& b : bags) w = std::max<int>(w, static_cast<int>(b.size()));
  return w;
}

TwoStepDecomposition build_two_step(const TemporalGraph& g, const RootedTimDecomposition& rd) {
  TwoStepDecomposition ts;
  ts.rooted = rd;
  const int m = static_cast<int>(rd.tree.size());
  Time horizon = 0;
  for (Time t : rd.tree.time) horizon = std::max(horizon, t);
  // comp_id[t][v]: index of v's component of G_t (time 0 uses G_1).
  std::vector<std::vector<std::vector<Vertex>>> comps(static_cast<std::size_t>(horizon) + 1);
  std::vector<std::vector<int>> comp_id(static_cast<std::size_t>(horizon) + 1, std::vector<int>(g.n(), -1));
  for (Time t = 0; t <= horizon; ++t) {
    comps[t] = connected_components(snapshot_padded(g, t == 0 ? 1 : t).graph);
    for (std::size_t k = 0; k < comps[t].size(); ++k)
      for (Vertex v : comps[t][k]) comp_id[t][v] = static_cast<int>(k);
  }
  ts.bags.resize(m);
  ts.components.resize(m);
  for (int s = 0; s < m; ++s) {
    std::vector<int> members{s};
    members.insert(members.end(), rd.children[s].begin(), rd.children[s].end());
    std::set<std::pair<Time, int>> seen;
    for (int x : members) {
      const Time t = rd.tree.time[x];
      for (Vertex v : rd.tree.bags[x]) {
        ts.bags[s].push_back({v, t});
        seen.insert({t, comp_id[t][v]});
      }
    }
    std::sort(ts.bags[s].begin(), ts.bags[s].end());
    for (auto [t, k] : seen) ts.components[s].push_back({t, comps[t][k]});
    std::sort(ts.components[s].begin(), ts.components[s].end(), [](const auto& a, const auto& b) {
      return a.t != b.t ? a.t < b.t : a.vertices.front() < b.vertices.front();
    });
  }
  return ts;
}

}  // namespace timw
