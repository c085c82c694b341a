#include "timw/problems.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>

namespace timw {

namespace {

int count_label(std::span<const Label> l, Label x) { return static_cast<int>(std::count(l.begin(), l.end(), x)); }

bool is_vector(std::span<const int> v, const Vec& expected) {
  return v.size() == expected.size() && std::equal(v.begin(), v.end(), expected.begin());
}

template <class F>
void for_each_subset(const std::vector<int>& items, F&& f) {
  const std::size_t m = items.size();
  std::vector<int> chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.push_back(items[i]);
    f(static_cast<const std::vector<int>&>(chosen));
  }
}

}  // namespace

// ---------------------------------------------------------------- Hamiltonian path

VimPlugin ham_vim_plugin(int n) {
  VimPlugin p;
  p.name = "temporal-hamiltonian-path";
  p.alphabet = 3;
  p.unlabelled = ham::unvisited;
  p.counters = {{1, std::max(n, 1)}};
  p.transition = [](const KXState& a, const KXState& b, const Snapshot& gt) {
    std::vector<Vertex> diff;
    for (std::size_t v = 0; v < a.labels.size(); ++v)
      if (a.labels[v] != b.labels[v]) {
        diff.push_back(static_cast<Vertex>(v));
        if (diff.size() > 2) return false;
      }
    if (diff.empty()) return a.counters == b.counters;
    if (diff.size() != 2) return false;
    for (int swap = 0; swap < 2; ++swap) {
      const Vertex c1 = diff[swap], c2 = diff[1 - swap];
      if (a.labels[c1] == ham::current && b.labels[c1] == ham::visited && a.labels[c2] == ham::unvisited &&
          b.labels[c2] == ham::current && gt.has_edge(c1, c2) && b.counters[0] == a.counters[0] + 1)
        return true;
    }
    return false;
  };
  p.accept = [n](const KXState& s) { return s.counters[0] == n; };
  p.initial = [](const VimSequence& seq, int nv) {
    std::vector<KXState> out;
    for (Vertex v : seq.bags.front()) {
      KXState s;
      s.labels.assign(nv, ham::unvisited);
      s.labels[v] = ham::current;
      s.counters = {1};
      out.push_back(std::move(s));
    }
    return out;
  };
  p.derive_counters = [n](const KXState& prev, const std::vector<Label>& next,
                          const Snapshot&) -> std::optional<std::vector<int>> {
    int moved = 0;
    for (std::size_t v = 0; v < next.size(); ++v)
      if (prev.labels[v] == ham::unvisited && next[v] == ham::current) ++moved;
    const int h = prev.counters[0] + moved;
    if (h > n) return std::nullopt;
    return std::vector<int>{h};
  };
  return p;
}

namespace {

bool ham_component_transition(const ComponentView& c, std::span<const Label> a, std::span<const Label> b) {
  std::vector<int> diff;
  for (int i = 0; i < c.size(); ++i)
    if (a[i] != b[i]) diff.push_back(i);
  if (diff.empty()) return true;
  if (diff.size() != 2) return false;
  for (int swap = 0; swap < 2; ++swap) {
    const int c1 = diff[swap], c2 = diff[1 - swap];
    if (a[c1] == ham::current && b[c1] == ham::visited && a[c2] == ham::unvisited && b[c2] == ham::current &&
        c.has_edge(c1, c2))
      return true;
  }
  return false;
}

}  // namespace

TimPlugin ham_tim_plugin(const TemporalGraph& g) {
  TimPlugin p;
  p.name = "temporal-hamiltonian-path";
  p.alphabet = 3;
  p.label_names = {"U", "V", "C"};
  p.arity = 1;
  p.bound = 1;
  p.horizon = effective_lifetime(g);
  p.v_upper = {p.horizon + 1};
  p.start = [](const ComponentView& c, std::span<const Label> l, std::span<const int> v) {
    const int cur = count_label(l, ham::current);
    return cur <= 1 && cur + count_label(l, ham::unvisited) == c.size() && v[0] == cur;
  };
  p.valid = [](const ComponentView&, std::span<const Label> l, std::span<const int> v) {
    const int cur = count_label(l, ham::current);
    return cur <= 1 && v[0] == cur;
  };
  p.finish = [](const ComponentView&, std::span<const Label> l, std::span<const int> v) {
    const int cur = count_label(l, ham::current);
    return cur <= 1 && count_label(l, ham::unvisited) == 0 && v[0] == cur;
  };
  p.transition = ham_component_transition;
  p.vectors = [](Phase, const ComponentView&, std::span<const Label> l) {
    return std::vector<Vec>{{count_label(l, ham::current)}};
  };
  p.successors = [](const ComponentView& c, std::span<const Label> prev) {
    std::vector<std::vector<Label>> out;
    std::vector<Label> base(prev.begin(), prev.end());
    out.push_back(base);
    for (int i = 0; i < c.size(); ++i) {
      if (prev[i] != ham::current) continue;
      for (int j : c.adj[i]) {
        if (prev[j] != ham::unvisited) continue;
        auto next = base;
        next[i] = ham::visited;
        next[j] = ham::current;
        out.push_back(std::move(next));
      }
    }
    return out;
  };
  return p;
}

bool ham_vim_solve(const TemporalGraph& g, const VimOptions& options, VimStats* stats) {
  if (g.n() <= 1) return true;
  VimStats merged;
  bool found = false;
  const auto plugin = ham_vim_plugin(g.n());
  for (Time j = 1; j <= g.lifetime() && !found; ++j) {
    VimStats s;
    found = solve_locally_uniform(plugin, g.shifted_from(j), options, &s);
    merged.table_sizes.insert(merged.table_sizes.end(), s.table_sizes.begin(), s.table_sizes.end());
    merged.peak = std::max(merged.peak, s.peak);
    merged.omega = std::max(merged.omega, s.omega);
    merged.bound_ok = merged.bound_ok && s.bound_ok;
  }
  if (stats) *stats = std::move(merged);
  return found;
}

bool ham_tim_solve(const TemporalGraph& g, const TimOptions& options, TimStats* stats) {
  if (g.n() == 0) return true;
  return solve_component_exchangeable(ham_tim_plugin(g), g, options, stats);
}

// ---------------------------------------------------------------- Firefighter

ReserveInstance normalize_reserve(const FirefighterInstance& inst) {
  if (inst.root < 0 || inst.root >= inst.g.n()) throw ValidationError("firefighter root out of range");
  ReserveInstance out;
  out.root = inst.root;
  out.h = inst.h;
  const auto iv = inst.g.interval(inst.root);
  if (!iv) {
    out.g = inst.g;
    out.saved_without_fire = inst.g.n() - 1;
    return out;
  }
  // Defences before the fire can move are pooled into the starting budget.
  out.g = inst.g.shifted_from(iv->first);
  out.budget = iv->first;
  return out;
}

VimPlugin ff_vim_plugin(const ReserveInstance& inst) {
  const int n = inst.g.n();
  const int b_hi = inst.budget + effective_lifetime(inst.g);
  VimPlugin p;
  p.name = "temporal-firefighter";
  p.alphabet = 3;
  p.unlabelled = ff::unburnt;
  p.counters = {{1, n}, {1, b_hi}};
  p.transition = [](const KXState& a, const KXState& b, const Snapshot& gt) {
    const auto n_v = a.labels.size();
    int new_defences = 0, new_burning = 0;
    for (std::size_t i = 0; i < n_v; ++i) {
      const auto v = static_cast<Vertex>(i);
      const Label x = a.labels[v], y = b.labels[v];
      if (y == ff::defended && x != ff::defended) {
        if (x != ff::unburnt || gt.isolated(v)) return false;
        ++new_defences;
      }
      bool near_fire = x == ff::burning;
      for (Vertex u : gt.neighbours(v))
        if (a.labels[u] == ff::burning) near_fire = true;
      if ((y == ff::burning) != (near_fire && y != ff::defended)) return false;
      if (y == ff::burning && x != ff::burning) ++new_burning;
      if (y == ff::unburnt && x != ff::unburnt) return false;
    }
    const int budget = a.counters[1] - new_defences + 1;
    return budget >= 1 && b.counters[1] == budget && b.counters[0] == a.counters[0] + new_burning;
  };
  p.accept = [n, h = inst.h](const KXState& s) { return n - s.counters[0] >= h; };
  p.initial = [root = inst.root, budget = inst.budget](const VimSequence&, int nv) {
    KXState s;
    s.labels.assign(nv, ff::unburnt);
    s.labels[root] = ff::burning;
    s.counters = {1, budget};
    return std::vector<KXState>{s};
  };
  p.derive_counters = [n, b_hi](const KXState& prev, const std::vector<Label>& next,
                                const Snapshot&) -> std::optional<std::vector<int>> {
    int d = 0, burnt = 0;
    for (std::size_t v = 0; v < next.size(); ++v) {
      if (next[v] == ff::defended && prev.labels[v] != ff::defended) ++d;
      if (next[v] == ff::burning && prev.labels[v] != ff::burning) ++burnt;
    }
    const int h = prev.counters[0] + burnt;
    const int b = prev.counters[1] - d + 1;
    if (h > n || b < 1 || b > b_hi) return std::nullopt;
    return std::vector<int>{h, b};
  };
  return p;
}

namespace {

bool ff_component_transition(const ComponentView& c, std::span<const Label> a, std::span<const Label> b) {
  for (int i = 0; i < c.size(); ++i) {
    const Label x = a[i], y = b[i];
    // D2 = D1 ∪ N1
    if ((y == ff::defended) != (x == ff::defended || x == ff::newdef)) return false;
    // U2 ∪ N2 ⊆ U1
    if ((y == ff::unburnt || y == ff::newdef) && x != ff::unburnt) return false;
    // B2 = B1 ∪ (N(B1) \ (D2 ∪ N2))
    bool near_fire = false;
    for (int j : c.adj[i])
      if (a[j] == ff::burning) near_fire = true;
    const bool expect_burning = x == ff::burning || (near_fire && y != ff::defended && y != ff::newdef);
    if ((y == ff::burning) != expect_burning) return false;
  }
  return true;
}

}  // namespace

TimPlugin ff_tim_plugin(const ReserveInstance& inst) {
  const Time H = effective_lifetime(inst.g);
  TimPlugin p;
  p.name = "temporal-firefighter";
  p.alphabet = 4;
  p.label_names = {"U", "B", "D", "N"};
  p.arity = H + 2;
  p.bound = std::max(inst.g.n(), 1);
  p.horizon = H;
  p.v_upper.assign(H + 2, 0);
  p.v_upper[0] = -inst.h;
  for (Time i = 1; i <= H; ++i) p.v_upper[i] = inst.budget + i - 1;
  p.v_upper[H + 1] = inst.budget + H - 1;
  const Vertex source = inst.root;
  auto start_vector = [H](std::span<const Label>) { return Vec(H + 2, 0); };
  auto valid_vector = [H](Time t, std::span<const Label> l) {
    const int nd = count_label(l, ff::newdef);
    Vec v(H + 2, 0);
    for (Time i = t; i <= H; ++i) v[i] = nd;
    v[H + 1] = nd;
    return v;
  };
  auto finish_vector = [H](std::span<const Label> l) {
    const int nd = count_label(l, ff::newdef);
    Vec v(H + 2, 0);
    v[0] = -static_cast<int>(l.size() - count_label(l, ff::burning));
    v[H] = nd;
    v[H + 1] = nd;
    return v;
  };
  p.start = [=](const ComponentView& c, std::span<const Label> l, std::span<const int> v) {
    for (int i = 0; i < c.size(); ++i) {
      const Label want = c.vertices[i] == source ? ff::burning : ff::unburnt;
      if (l[i] != want) return false;
    }
    return is_vector(v, start_vector(l));
  };
  p.valid = [=](const ComponentView& c, std::span<const Label> l, std::span<const int> v) {
    return is_vector(v, valid_vector(c.t, l));
  };
  p.finish = [=](const ComponentView&, std::span<const Label> l, std::span<const int> v) {
    return is_vector(v, finish_vector(l));
  };
  p.transition = ff_component_transition;
  p.vectors = [=](Phase ph, const ComponentView& c, std::span<const Label> l) {
    if (ph == Phase::start) return std::vector<Vec>{start_vector(l)};
    if (ph == Phase::valid) return std::vector<Vec>{valid_vector(c.t, l)};
    return std::vector<Vec>{finish_vector(l)};
  };
  p.successors = [](const ComponentView& c, std::span<const Label> prev) {
    std::vector<int> unburnt;
    for (int i = 0; i < c.size(); ++i)
      if (prev[i] == ff::unburnt) unburnt.push_back(i);
    std::vector<std::vector<Label>> out;
    for_each_subset(unburnt, [&](const std::vector<int>& defend) {
      std::vector<Label> next(prev.begin(), prev.end());
      for (auto& x : next)
        if (x == ff::newdef) x = ff::defended;
      for (int i : defend) next[i] = ff::newdef;
      for (int i : unburnt) {
        if (next[i] != ff::unburnt) continue;
        for (int j : c.adj[i])
          if (prev[j] == ff::burning) next[i] = ff::burning;
      }
      out.push_back(std::move(next));
    });
    return out;
  };
  return p;
}

bool ff_vim_solve(const FirefighterInstance& inst, const VimOptions& options, VimStats* stats) {
  const auto r = normalize_reserve(inst);
  if (r.saved_without_fire) return *r.saved_without_fire >= inst.h;
  return solve_locally_uniform(ff_vim_plugin(r), r.g, options, stats);
}

bool ff_tim_solve(const FirefighterInstance& inst, const TimOptions& options, TimStats* stats) {
  const auto r = normalize_reserve(inst);
  if (r.saved_without_fire) return *r.saved_without_fire >= inst.h;
  return solve_component_exchangeable(ff_tim_plugin(r), r.g, options, stats);
}

// ---------------------------------------------------------------- Δ-temporal matching

Label encode_matching_label(int delta, MatchingLabel l) {
  if (l.matched) return static_cast<Label>(delta * delta);
  return static_cast<Label>((l.a - 1) * delta + (l.b - 1));
}

MatchingLabel decode_matching_label(int delta, Label l) {
  if (l == delta * delta) return {true, delta, delta};
  return {false, l / delta + 1, l % delta + 1};
}

namespace {

// Edmonds' blossom algorithm on a small dense graph.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adj) : n_(static_cast<int>(adj.size())), adj_(std::move(adj)) {}

  int run() {
    match_.assign(n_, -1);
    int size = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) {
        const int end = find_path(v);
        if (end == -1) continue;
        ++size;
        for (int u = end; u != -1;) {
          const int pv = parent_[u], ppv = match_[pv];
          match_[u] = pv;
          match_[pv] = u;
          u = ppv;
        }
      }
    return size;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

bool perfect_by_search(const ComponentView& c, std::vector<int>& left) {
  if (left.empty()) return true;
  const int a = left.back();
  left.pop_back();
  for (std::size_t i = 0; i < left.size(); ++i) {
    const int b = left[i];
    if (!c.has_edge(a, b)) continue;
    std::swap(left[i], left.back());
    left.pop_back();
    const bool ok = perfect_by_search(c, left);
    left.push_back(b);
    std::swap(left[i], left.back());
    if (ok) {
      left.push_back(a);
      return true;
    }
  }
  left.push_back(a);
  return false;
}

}  // namespace

bool has_perfect_matching(const ComponentView& c, const std::vector<int>& marked) {
  if (marked.size() % 2 != 0) return false;
  if (marked.size() < 12) {
    auto left = marked;
    return perfect_by_search(c, left);
  }
  std::vector<int> pos(c.size(), -1);
  for (std::size_t i = 0; i < marked.size(); ++i) pos[marked[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(marked.size());
  for (std::size_t i = 0; i < marked.size(); ++i)
    for (int j : c.adj[marked[i]])
      if (pos[j] >= 0) adj[i].push_back(pos[j]);
  return 2 * BlossomMatcher(std::move(adj)).run() == static_cast<int>(marked.size());
}

TimPlugin matching_tim_plugin(const MatchingInstance& inst) {
  const int delta = inst.delta;
  if (delta < 1) throw ValidationError("Δ must be at least 1");
  if (inst.h < 0) throw ValidationError("h must be non-negative");
  const Label matched = encode_matching_label(delta, {true, delta, delta});
  TimPlugin p;
  p.name = "delta-temporal-matching";
  p.alphabet = delta * delta + 1;
  p.label_names.resize(p.alphabet);
  for (int l = 0; l < p.alphabet; ++l) {
    const auto d = decode_matching_label(delta, static_cast<Label>(l));
    p.label_names[l] = d.matched ? "M" : "(0," + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
  }
  p.arity = 1;
  p.bound = std::max(inst.g.n(), 1);
  p.horizon = effective_lifetime(inst.g);
  p.v_upper = {-inst.h};
  p.start = [delta](const ComponentView&, std::span<const Label> l, std::span<const int> v) {
    for (Label x : l) {
      const auto d = decode_matching_label(delta, x);
      if (d.matched || d.a != 1) return false;
    }
    return v[0] == 0;
  };
  auto valid = [matched](const ComponentView& c, std::span<const Label> l, std::span<const int> v) {
    std::vector<int> marked;
    for (int i = 0; i < c.size(); ++i)
      if (l[i] == matched) marked.push_back(i);
    return 2 * v[0] == -static_cast<int>(marked.size()) && has_perfect_matching(c, marked);
  };
  p.valid = valid;
  p.finish = valid;
  // Next labels a vertex may take after `x`; the matched label is allowed only when the wait is over.
  auto options_after = [delta, matched](Label x) {
    std::vector<Label> out;
    const auto d = decode_matching_label(delta, x);
    if (d.matched) {
      out.push_back(encode_matching_label(delta, {false, 1, std::max(1, delta - 1)}));
      if (delta == 1) out.push_back(matched);
    } else {
      out.push_back(encode_matching_label(delta, {false, std::min(delta, d.a + 1), std::max(1, d.b - 1)}));
      if (d.b == 1) out.push_back(matched);
    }
    return out;
  };
  p.transition = [options_after](const ComponentView& c, std::span<const Label> a, std::span<const Label> b) {
    for (int i = 0; i < c.size(); ++i) {
      const auto opts = options_after(a[i]);
      if (std::find(opts.begin(), opts.end(), b[i]) == opts.end()) return false;
    }
    return true;
  };
  p.vectors = [matched](Phase ph, const ComponentView&, std::span<const Label> l) {
    if (ph == Phase::start) return std::vector<Vec>{{0}};
    const int m = count_label(l, matched);
    if (m % 2 != 0) return std::vector<Vec>{};
    return std::vector<Vec>{{-m / 2}};
  };
  p.successors = [options_after](const ComponentView& c, std::span<const Label> prev) {
    std::vector<std::vector<Label>> out{{}};
    for (int i = 0; i < c.size(); ++i) {
      std::vector<std::vector<Label>> grown;
      for (Label x : options_after(prev[i]))
        for (const auto& partial : out) {
          auto next = partial;
          next.push_back(x);
          grown.push_back(std::move(next));
        }
      out = std::move(grown);
    }
    return out;
  };
  return p;
}

bool matching_tim_solve(const MatchingInstance& inst, const TimOptions& options, TimStats* stats) {
  if (inst.h <= 0) return true;
  return solve_component_exchangeable(matching_tim_plugin(inst), inst.g, options, stats);
}

// ---------------------------------------------------------------- Reachability edge deletion

int tred_deleted_edges(const ComponentView& c, std::span<const Label> labels) {
  int d = 0;
  for (int i = 0; i < c.size(); ++i) {
    if (labels[i] != tred::reached) continue;
    for (int j : c.adj[i])
      if (labels[j] == tred::unreached) ++d;
  }
  return d;
}

TimPlugin tred_tim_plugin(const TredInstance& inst) {
  const int n = inst.g.n();
  if (inst.source < 0 || inst.source >= n) throw ValidationError("source out of range");
  if (inst.r < 0 || inst.h < 0) throw ValidationError("r and h must be non-negative");
  TimPlugin p;
  p.name = "temporal-reachability-edge-deletion";
  p.alphabet = 3;
  p.label_names = {"U", "C", "R"};
  p.arity = 2;
  p.bound = std::max({n * (n - 1) / 2, n, 1});
  p.horizon = effective_lifetime(inst.g);
  p.v_upper = {inst.h, inst.r};
  const Vertex source = inst.source;
  p.start = [source](const ComponentView& c, std::span<const Label> l, std::span<const int> v) {
    bool has_source = false;
    for (int i = 0; i < c.size(); ++i) {
      const bool is_source = c.vertices[i] == source;
      has_source = has_source || is_source;
      if (l[i] != (is_source ? tred::current : tred::unreached)) return false;
    }
    return v[0] == 0 && v[1] == (has_source ? 1 : 0);
  };
  auto valid = [](const ComponentView& c, std::span<const Label> l, std::span<const int> v) {
    return v[0] == tred_deleted_edges(c, l) && v[1] == count_label(l, tred::current);
  };
  p.valid = valid;
  p.finish = valid;
  p.transition = [](const ComponentView& c, std::span<const Label> a, std::span<const Label> b) {
    auto reached_before = [&](int i) { return a[i] == tred::reached || a[i] == tred::current; };
    for (int i = 0; i < c.size(); ++i) {
      // R2 = R1 ∪ N1
      if ((b[i] == tred::reached) != reached_before(i)) return false;
      if (b[i] == tred::current) {
        // N2 ⊆ U1 ∩ N(R2)
        if (a[i] != tred::unreached) return false;
        bool adjacent = false;
        for (int j : c.adj[i])
          if (reached_before(j)) adjacent = true;
        if (!adjacent) return false;
      }
    }
    return true;
  };
  p.vectors = [source](Phase ph, const ComponentView& c, std::span<const Label> l) {
    if (ph == Phase::start) {
      const bool has_source = c.index_of(source) >= 0;
      return std::vector<Vec>{{0, has_source ? 1 : 0}};
    }
    return std::vector<Vec>{{tred_deleted_edges(c, l), count_label(l, tred::current)}};
  };
  p.successors = [](const ComponentView& c, std::span<const Label> prev) {
    std::vector<Label> base(prev.size());
    std::vector<int> reachable;
    for (int i = 0; i < c.size(); ++i) {
      base[i] = prev[i] == tred::unreached ? tred::unreached : tred::reached;
      if (prev[i] != tred::unreached) continue;
      for (int j : c.adj[i])
        if (prev[j] != tred::unreached) {
          reachable.push_back(i);
          break;
        }
    }
    std::vector<std::vector<Label>> out;
    for_each_subset(reachable, [&](const std::vector<int>& pick) {
      auto next = base;
      for (int i : pick) next[i] = tred::current;
      out.push_back(std::move(next));
    });
    return out;
  };
  return p;
}

bool tred_tim_solve(const TredInstance& inst, const TimOptions& options, TimStats* stats) {
  return solve_component_exchangeable(tred_tim_plugin(inst), inst.g, options, stats);
}

}  // namespace timw
