#include "timw/tim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace timw {

int ComponentView::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool ComponentView::has_edge(int a, int b) const {
  const auto& l = adj[a];
  return std::find(l.begin(), l.end(), b) != l.end();
}

ComponentView make_component_view(const TemporalGraph& g, const TimedComponent& c) {
  ComponentView view;
  view.t = c.t;
  view.vertices = c.vertices;
  view.adj.assign(c.vertices.size(), {});
  for (const auto& e : g.edges_at(c.t == 0 ? 1 : c.t)) {
    int a = view.index_of(e.u);
    int b = view.index_of(e.v);
    if (a < 0 || b < 0) continue;
    view.adj[a].push_back(b);
    view.adj[b].push_back(a);
  }
  for (auto& l : view.adj) std::sort(l.begin(), l.end());
  return view;
}

bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void normalize(TotalSet& s, bool prune_dominated) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!prune_dominated || s.size() < 2) return;
  // Lexicographic order: a dominating vector always precedes the vectors it dominates.
  TotalSet kept;
  for (auto& v : s) {
    bool dominated = false;
    for (const auto& k : kept)
      if (leq(k, v)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(v));
  }
  s = std::move(kept);
}

TotalSet sumset(const TotalSet& a, const TotalSet& b, bool prune_dominated) {
  TotalSet out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Vec z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
      out.push_back(std::move(z));
    }
  normalize(out, prune_dominated);
  return out;
}

bool aggregate_child_totals(const std::vector<TotalSet>& children, const Vec& target) {
  // Reachable partial sums after each child prefix.
  TotalSet reach{Vec(target.size(), 0)};
  for (const auto& c : children) {
    reach = sumset(reach, c, false);
    if (reach.empty()) return false;
  }
  return std::binary_search(reach.begin(), reach.end(), target);
}

bool operator<(const Profile& a, const Profile& b) {
  if (a.labels != b.labels) return a.labels < b.labels;
  if (a.total != b.total) return a.total < b.total;
  auto key = [](const Profile& p) {
    std::vector<std::pair<std::pair<Time, std::vector<Vertex>>, Vec>> k;
    for (const auto& [c, v] : p.vectors) k.push_back({{c.t, c.vertices}, v});
    return k;
  };
  return key(a) < key(b);
}

namespace {

using Key = std::vector<int>;
using Table = std::unordered_map<Key, TotalSet, IntVectorHash>;

struct Option {
  std::vector<Label> labels;
  Vec vec;
};

struct Comp {
  ComponentView view;
  int owner = -1;
  int checker = -1;  // -1 at time 0
  Phase phase = Phase::valid;
};

struct Slot {
  bool is_child = false;
  int id = -1;  // child node or component id
  // Child: scope index of each rel label. Component: scope index of each own label.
  std::vector<int> label_scope;
  // Component with local Tr: scope index of each predecessor label.
  std::vector<int> prev_scope;
  bool local_transition = false;
  // Child: deferred components checked once this child is fixed.
  struct Deferred {
    int comp = -1;
    std::vector<int> prev_scope;
    std::vector<int> next_scope;
  };
  std::vector<Deferred> deferred;
};

struct NodePlan {
  Time tau = 0;
  std::vector<int> own;       // component ids
  std::vector<int> deferred;  // own components checked at the parent
  std::vector<VertexTime> key_pairs;  // own pairs, then extras
  std::vector<int> key_scope;         // scope index of each key pair
  std::vector<VertexTime> rel_pairs;  // labels exposed to the parent
  std::vector<int> rel_from_key;      // index into key label part
  std::vector<Slot> slots;
  std::vector<int> free_children;
  std::size_t scope_size = 0;
  std::map<VertexTime, int> scope_index;
};

}  // namespace

struct TimEngine::Impl {
  TimPlugin plugin;
  TemporalGraph g;
  TimOptions options;
  Time horizon = 1;
  TwoStepDecomposition ts;
  int phi = 1;
  std::vector<Comp> comps;
  std::vector<std::vector<int>> holder;  // holder[t][v]
  std::vector<NodePlan> plans;
  bool full = false;
  std::vector<Table> tables;
  std::vector<Table> rel_tables;
  std::vector<std::vector<Option>> fixed_options;  // per component, for start/deferred
  std::vector<std::unordered_map<std::vector<Label>, std::vector<Option>, IntVectorHash>> local_options;
  int collect_at = -1;
  std::vector<Profile> collected;
  TimStats stats;

  Impl(const TimPlugin& p, const TemporalGraph& graph, TimOptions o) : plugin(p), g(graph), options(o) {
    horizon = effective_lifetime(g);
    auto d = compute_tim_decomposition(g, horizon);
    phi = d.width();
    ts = build_two_step(g, root_and_augment(d, options.root_override));
    build_plan();
  }

  const RootedTimDecomposition& rd() const { return ts.rooted; }

  void build_plan() {
    const auto& r = rd();
    const int m = static_cast<int>(r.tree.size());
    holder.assign(static_cast<std::size_t>(horizon) + 1, std::vector<int>(g.n(), -1));
    for (int s = 0; s < m; ++s)
      for (Vertex v : r.bag(s)) holder[r.time(s)][v] = s;
    plans.assign(m, {});
    for (int s = 0; s < m; ++s) plans[s].tau = r.time(s);
    for (Time t = 0; t <= horizon; ++t) {
      for (auto& vs : connected_components(snapshot_padded(g, t == 0 ? 1 : t).graph)) {
        Comp c;
        c.view = make_component_view(g, TimedComponent{t, vs});
        c.owner = holder[t][vs.front()];
        for (Vertex v : vs)
          if (holder[t][v] != c.owner) throw Error("timed component split across bags");
        c.phase = t == 0 ? Phase::start : (t == horizon ? Phase::finish : Phase::valid);
        if (t >= 1) {
          bool local = true;
          for (Vertex v : vs) {
            int x = holder[t - 1][v];
            if (r.parent[x] != c.owner) local = false;
          }
          if (local) {
            c.checker = c.owner;
          } else {
            const int p = r.parent[c.owner];
            if (p < 0 || r.time(p) != t - 1) throw Error("transition predecessor outside parent and children");
            for (Vertex v : vs) {
              int x = holder[t - 1][v];
              if (x != p && r.parent[x] != c.owner) throw Error("transition predecessor outside parent and children");
            }
            c.checker = p;
          }
        }
        const int id = static_cast<int>(comps.size());
        plans[c.owner].own.push_back(id);
        if (t >= 1 && c.checker != c.owner) plans[c.owner].deferred.push_back(id);
        comps.push_back(std::move(c));
      }
    }
    fixed_options.assign(comps.size(), {});
    local_options.assign(comps.size(), {});
    // Key layouts first (children's rel layouts feed parents' scopes).
    for (int s = 0; s < m; ++s) {
      auto& pl = plans[s];
      for (Vertex v : r.bag(s)) pl.key_pairs.push_back({v, pl.tau});
      for (int cid : pl.deferred)
        for (Vertex v : comps[cid].view.vertices) {
          int x = holder[pl.tau - 1][v];
          if (r.parent[x] == s) pl.key_pairs.push_back({v, pl.tau - 1});
        }
    }
    for (int s = 0; s < m; ++s) {
      auto& pl = plans[s];
      const int p = r.parent[s];
      std::vector<int> idx;
      if (full || p < 0) {
        for (std::size_t i = 0; i < pl.key_pairs.size(); ++i) idx.push_back(static_cast<int>(i));
      } else if (r.time(p) == pl.tau + 1) {
        const auto& pb = r.bag(p);
        for (std::size_t i = 0; i < r.bag(s).size(); ++i)
          if (std::binary_search(pb.begin(), pb.end(), r.bag(s)[i])) idx.push_back(static_cast<int>(i));
      } else {
        std::set<Vertex> dv;
        for (int cid : pl.deferred) dv.insert(comps[cid].view.vertices.begin(), comps[cid].view.vertices.end());
        for (std::size_t i = 0; i < r.bag(s).size(); ++i)
          if (dv.count(r.bag(s)[i])) idx.push_back(static_cast<int>(i));
        for (std::size_t i = r.bag(s).size(); i < pl.key_pairs.size(); ++i) idx.push_back(static_cast<int>(i));
      }
      pl.rel_from_key = idx;
      pl.rel_pairs.clear();
      for (int i : idx) pl.rel_pairs.push_back(pl.key_pairs[i]);
    }
    for (int s = 0; s < m; ++s) build_slots(s);
  }

  void build_slots(int s) {
    const auto& r = rd();
    auto& pl = plans[s];
    auto scope = [&](VertexTime vt) {
      auto it = pl.scope_index.find(vt);
      if (it != pl.scope_index.end()) return it->second;
      const int id = static_cast<int>(pl.scope_index.size());
      pl.scope_index.emplace(vt, id);
      return id;
    };
    for (Vertex v : r.bag(s)) scope({v, pl.tau});
    for (int c : r.children[s])
      for (const auto& vt : plans[c].rel_pairs) scope(vt);
    std::vector<char> done_comp(comps.size(), 0);
    std::set<int> scheduled;
    auto child_slot = [&](int c) {
      Slot sl;
      sl.is_child = true;
      sl.id = c;
      for (const auto& vt : plans[c].rel_pairs) sl.label_scope.push_back(pl.scope_index.at(vt));
      if (r.time(c) == pl.tau + 1) {
        for (int cid : plans[c].deferred) {
          Slot::Deferred d;
          d.comp = cid;
          for (Vertex v : comps[cid].view.vertices) {
            d.prev_scope.push_back(pl.scope_index.at({v, pl.tau}));
            d.next_scope.push_back(pl.scope_index.at({v, pl.tau + 1}));
          }
          sl.deferred.push_back(std::move(d));
        }
      }
      pl.slots.push_back(std::move(sl));
      scheduled.insert(c);
    };
    // Components of s that a later child depends on.
    auto deps_of = [&](int c) {
      std::set<int> deps;
      for (int cid : plans[c].deferred)
        for (Vertex v : comps[cid].view.vertices)
          if (holder[pl.tau][v] == s)
            for (int own : pl.own)
              if (comps[own].view.index_of(v) >= 0) deps.insert(own);
      return deps;
    };
    for (int cid : pl.own) {
      const auto& comp = comps[cid];
      if (pl.tau >= 1)
        for (Vertex v : comp.view.vertices) {
          int x = holder[pl.tau - 1][v];
          if (r.parent[x] == s && !scheduled.count(x)) child_slot(x);
        }
      Slot sl;
      sl.id = cid;
      for (Vertex v : comp.view.vertices) sl.label_scope.push_back(pl.scope_index.at({v, pl.tau}));
      sl.local_transition = pl.tau >= 1 && comp.checker == s;
      if (sl.local_transition)
        for (Vertex v : comp.view.vertices) sl.prev_scope.push_back(pl.scope_index.at({v, pl.tau - 1}));
      pl.slots.push_back(std::move(sl));
      done_comp[cid] = 1;
      for (int c : r.children[s]) {
        if (scheduled.count(c) || r.time(c) != pl.tau + 1 || plans[c].deferred.empty()) continue;
        bool ready = true;
        for (int dep : deps_of(c))
          if (!done_comp[dep]) ready = false;
        if (ready) child_slot(c);
      }
    }
    for (int c : r.children[s])
      if (!scheduled.count(c)) {
        if (full)
          child_slot(c);
        else
          pl.free_children.push_back(c);
      }
    for (const auto& vt : pl.key_pairs) pl.key_scope.push_back(pl.scope_index.at(vt));
    pl.scope_size = pl.scope_index.size();
  }

  // Candidate (labelling, vector) pairs passing the phase routine.
  void add_options(const Comp& comp, const std::vector<Label>& labels, std::vector<Option>& out) {
    const auto& routine = plugin.routine(comp.phase);
    std::vector<Vec> cands;
    if (plugin.vectors) {
      cands = plugin.vectors(comp.phase, comp.view, labels);
    } else {
      for_each_assignment(static_cast<std::size_t>(plugin.arity), 2 * plugin.bound + 1, [&](const std::vector<int>& a) {
        Vec v(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - plugin.bound;
        cands.push_back(std::move(v));
      });
    }
    for (auto& v : cands)
      if (routine(comp.view, labels, v)) out.push_back({labels, std::move(v)});
  }

  void check_enumerable(const Comp& comp) const {
    const double count = std::pow(static_cast<double>(plugin.alphabet), comp.view.size());
    if (count > 2e7)
      throw ResourceLimitError("labelling space of a component at node " + std::to_string(comp.owner) + " exceeds cap");
  }

  const std::vector<Option>& unconstrained_options(int cid) {
    auto& out = fixed_options[cid];
    if (!out.empty()) return out;
    const auto& comp = comps[cid];
    check_enumerable(comp);
    std::vector<Label> l(comp.view.size());
    for_each_assignment(l.size(), plugin.alphabet, [&](const std::vector<int>& a) {
      for (std::size_t i = 0; i < a.size(); ++i) l[i] = static_cast<Label>(a[i]);
      add_options(comp, l, out);
    });
    if (out.empty()) out.push_back({{}, {}});  // sentinel: no option
    return out;
  }

  const std::vector<Option>& transition_options(int cid, const std::vector<Label>& prev) {
    auto& cache = local_options[cid];
    auto it = cache.find(prev);
    if (it != cache.end()) return it->second;
    const auto& comp = comps[cid];
    std::vector<Option> out;
    auto consider = [&](const std::vector<Label>& next) {
      if (plugin.transition(comp.view, prev, next)) add_options(comp, next, out);
    };
    if (plugin.successors) {
      for (const auto& next : plugin.successors(comp.view, prev)) consider(next);
    } else {
      check_enumerable(comp);
      std::vector<Label> l(comp.view.size());
      for_each_assignment(l.size(), plugin.alphabet, [&](const std::vector<int>& a) {
        for (std::size_t i = 0; i < a.size(); ++i) l[i] = static_cast<Label>(a[i]);
        consider(l);
      });
    }
    return cache.emplace(prev, std::move(out)).first->second;
  }

  struct Frame {
    std::vector<int> scope;
    std::vector<const Key*> child_keys;  // chosen rel key per child slot
    std::vector<const Option*> comp_choice;
  };

  void process(int s) {
    const auto& pl = plans[s];
    const int k = plugin.arity;
    Table& table = tables[s];
    // Union of totals of children that no check at s reads.
    TotalSet free_total{Vec(k, 0)};
    for (int c : pl.free_children) {
      TotalSet all;
      for (const auto& [key, tot] : rel_tables[c]) all.insert(all.end(), tot.begin(), tot.end());
      normalize(all, options.prune_dominated && !full);
      free_total = sumset(free_total, all, options.prune_dominated && !full);
    }
    if (free_total.empty()) return;
    Frame f;
    f.scope.assign(pl.scope_size, -1);
    f.child_keys.assign(pl.slots.size(), nullptr);
    f.comp_choice.assign(pl.slots.size(), nullptr);
    const bool prune = options.prune_dominated && !full;
    std::size_t entries = 0;

    auto emit = [&](const TotalSet& acc) {
      TotalSet final_totals = sumset(acc, free_total, prune);
      Key key;
      key.reserve(pl.key_scope.size() + (full ? pl.own.size() * k : 0));
      for (int idx : pl.key_scope) key.push_back(f.scope[idx]);
      if (full)
        for (std::size_t i = 0; i < pl.slots.size(); ++i)
          if (!pl.slots[i].is_child) key.insert(key.end(), f.comp_choice[i]->vec.begin(), f.comp_choice[i]->vec.end());
      auto& dst = table[key];
      const std::size_t before = dst.size();
      dst.insert(dst.end(), final_totals.begin(), final_totals.end());
      if (dst.size() > 2 * before + 64) normalize(dst, prune);
      if (s == collect_at) collect(s, f, final_totals);
      entries += final_totals.size();
      if (entries > options.table_cap)
        throw ResourceLimitError("profile table at node " + std::to_string(s) + " exceeds cap");
    };

    std::function<void(std::size_t, const TotalSet&)> rec = [&](std::size_t i, const TotalSet& acc) {
      if (i == pl.slots.size()) {
        emit(acc);
        return;
      }
      const Slot& sl = pl.slots[i];
      if (sl.is_child) {
        for (const auto& [key, tot] : rel_tables[sl.id]) {
          for (std::size_t j = 0; j < sl.label_scope.size(); ++j) f.scope[sl.label_scope[j]] = key[j];
          bool ok = true;
          for (const auto& d : sl.deferred) {
            std::vector<Label> prev(d.prev_scope.size()), next(d.next_scope.size());
            for (std::size_t j = 0; j < prev.size(); ++j) prev[j] = static_cast<Label>(f.scope[d.prev_scope[j]]);
            for (std::size_t j = 0; j < next.size(); ++j) next[j] = static_cast<Label>(f.scope[d.next_scope[j]]);
            if (!plugin.transition(comps[d.comp].view, prev, next)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          f.child_keys[i] = &key;
          rec(i + 1, sumset(acc, tot, prune));
        }
        for (int idx : sl.label_scope) f.scope[idx] = -1;
        return;
      }
      const std::vector<Option>* opts;
      if (sl.local_transition) {
        std::vector<Label> prev(sl.prev_scope.size());
        for (std::size_t j = 0; j < prev.size(); ++j) prev[j] = static_cast<Label>(f.scope[sl.prev_scope[j]]);
        opts = &transition_options(sl.id, prev);
      } else {
        opts = &unconstrained_options(sl.id);
      }
      for (const auto& o : *opts) {
        if (o.labels.size() != sl.label_scope.size()) continue;
        for (std::size_t j = 0; j < sl.label_scope.size(); ++j) f.scope[sl.label_scope[j]] = o.labels[j];
        f.comp_choice[i] = &o;
        TotalSet shifted = acc;
        for (auto& v : shifted)
          for (int j = 0; j < k; ++j) v[j] += o.vec[j];
        rec(i + 1, shifted);
      }
      for (int idx : sl.label_scope) f.scope[idx] = -1;
    };
    rec(0, TotalSet{Vec(k, 0)});
    for (auto& [key, tot] : table) normalize(tot, prune);
  }

  void collect(int s, const Frame& f, const TotalSet& totals) {
    const auto& pl = plans[s];
    const int k = plugin.arity;
    Profile base;
    for (const auto& [vt, idx] : pl.scope_index) {
      // Only pairs of B²(s): own time or a child's own time.
      bool in_bag = false;
      for (const auto& p : ts.bags[s])
        if (p == vt) in_bag = true;
      if (in_bag) base.labels.push_back({vt, static_cast<Label>(f.scope[idx])});
    }
    std::sort(base.labels.begin(), base.labels.end());
    for (std::size_t i = 0; i < pl.slots.size(); ++i) {
      const auto& sl = pl.slots[i];
      if (!sl.is_child) {
        base.vectors.push_back({TimedComponent{comps[sl.id].view.t, comps[sl.id].view.vertices}, f.comp_choice[i]->vec});
        continue;
      }
      // Full mode: the child's key ends with its own component vectors.
      const auto& cp = plans[sl.id];
      const Key& key = *f.child_keys[i];
      std::size_t off = cp.key_pairs.size();
      for (int cid : cp.own) {
        Vec v(key.begin() + static_cast<long>(off), key.begin() + static_cast<long>(off + k));
        off += k;
        base.vectors.push_back({TimedComponent{comps[cid].view.t, comps[cid].view.vertices}, v});
      }
    }
    std::sort(base.vectors.begin(), base.vectors.end(), [](const auto& a, const auto& b) {
      return std::make_pair(a.first.t, a.first.vertices) < std::make_pair(b.first.t, b.first.vertices);
    });
    for (const auto& t : totals) {
      Profile p = base;
      p.total = t;
      collected.push_back(std::move(p));
    }
  }

  void project(int s) {
    const auto& pl = plans[s];
    const int k = plugin.arity;
    Table& rel = rel_tables[s];
    const bool prune = options.prune_dominated && !full;
    for (const auto& [key, tot] : tables[s]) {
      Key rk;
      for (int i : pl.rel_from_key) rk.push_back(key[i]);
      if (full) rk.insert(rk.end(), key.begin() + static_cast<long>(pl.key_pairs.size()), key.end());
      auto& dst = rel[rk];
      dst.insert(dst.end(), tot.begin(), tot.end());
    }
    for (auto& [key, tot] : rel) normalize(tot, prune);
    (void)k;
  }

  void run(const std::vector<int>& order) {
    const std::size_t m = rd().tree.size();
    tables.assign(m, {});
    rel_tables.assign(m, {});
    stats = {};
    stats.nodes = m;
    stats.phi = phi;
    stats.entries.assign(m, 0);
    const double b = plugin.bound;
    const double n = g.n();
    const double lam = horizon;
    const double kk = plugin.arity;
    stats.log_bound = 3.0 * phi * phi * std::log(std::max(plugin.alphabet, 1)) +
                      3.0 * kk * phi * phi * std::log(2 * b + 1) + kk * std::log(2 * lam * n * b + 1);
    for (int s : order) {
      process(s);
      std::size_t e = 0;
      for (const auto& [key, tot] : tables[s]) e += tot.size();
      stats.entries[s] = e;
      stats.peak_entries = std::max(stats.peak_entries, e);
      if (e > 0 && std::log(static_cast<double>(e)) > stats.log_bound + 1e-9) stats.bound_ok = false;
      project(s);
    }
  }

  bool solve() {
    full = false;
    run(rd().post_order);
    const bool prune = options.prune_dominated;
    TotalSet acc{Vec(plugin.arity, 0)};
    for (int root : rd().roots) {
      TotalSet all;
      for (const auto& [key, tot] : tables[root]) all.insert(all.end(), tot.begin(), tot.end());
      normalize(all, prune);
      acc = sumset(acc, all, prune);
      if (acc.empty()) return false;
    }
    for (const auto& t : acc)
      if (leq(t, plugin.v_upper)) return true;
    return false;
  }

  std::vector<Profile> profiles(int s) {
    full = true;
    plans.clear();
    comps.clear();
    build_plan();
    collect_at = s;
    collected.clear();
    // Post-order restricted to the subtree of s.
    std::vector<int> order;
    for (int x : rd().post_order) {
      int y = x;
      while (y != -1 && y != s) y = rd().parent[y];
      if (y == s) order.push_back(x);
    }
    run(order);
    auto out = collected;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    collect_at = -1;
    full = false;
    plans.clear();
    comps.clear();
    build_plan();
    return out;
  }
};

TimEngine::TimEngine(const TimPlugin& plugin, const TemporalGraph& g, TimOptions options)
    : impl_(std::make_unique<Impl>(plugin, g, options)) {}

TimEngine::~TimEngine() = default;

bool TimEngine::solve(TimStats* stats) {
  const bool ok = impl_->solve();
  if (stats) *stats = impl_->stats;
  return ok;
}

std::vector<Profile> TimEngine::realisable_profiles(int s) { return impl_->profiles(s); }

std::vector<TimEngine::TransitionCheck> TimEngine::transition_plan() const {
  std::vector<TransitionCheck> out;
  for (const auto& c : impl_->comps) {
    if (c.view.t == 0) continue;
    out.push_back({TimedComponent{c.view.t, c.view.vertices}, c.owner, c.checker});
  }
  return out;
}

const TwoStepDecomposition& TimEngine::two_step() const { return impl_->ts; }

bool solve_component_exchangeable(const TimPlugin& plugin, const TemporalGraph& g, const TimOptions& options,
                                  TimStats* stats) {
  TimEngine engine(plugin, g, options);
  return engine.solve(stats);
}

}  // namespace timw
