#include "timw/vim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace timw {

int VimPlugin::counter_bound() const {
  int b = 0;
  for (const auto& r : counters) b = std::max({b, std::abs(r.lo), std::abs(r.hi)});
  return b;
}

namespace {

double counter_combinations(const VimPlugin& p) {
  double c = 1;
  for (const auto& r : p.counters) c *= static_cast<double>(r.hi - r.lo + 1);
  return c;
}

template <class F>
void for_each_counter_vector(const VimPlugin& p, F&& f) {
  std::vector<int> c(p.counters.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.counters[i].lo;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (p.counters[i].hi < p.counters[i].lo) return;
  for (;;) {
    f(static_cast<const std::vector<int>&>(c));
    std::size_t i = c.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++c[i] <= p.counters[i].hi) break;
      c[i] = p.counters[i].lo;
    }
  }
}

std::vector<int> key_of(const KXState& s, const std::vector<Vertex>& bag) {
  std::vector<int> key;
  key.reserve(bag.size() + s.counters.size());
  for (Vertex v : bag) key.push_back(s.labels[v]);
  key.insert(key.end(), s.counters.begin(), s.counters.end());
  return key;
}

KXState state_of(const std::vector<int>& key, const std::vector<Vertex>& bag, int n, Label u) {
  KXState s;
  s.labels.assign(n, u);
  for (std::size_t i = 0; i < bag.size(); ++i) s.labels[bag[i]] = static_cast<Label>(key[i]);
  s.counters.assign(key.begin() + static_cast<long>(bag.size()), key.end());
  return s;
}

}  // namespace

std::vector<KXState> enumerate_bag_states(std::span<const Vertex> bag, int n, const VimPlugin& plugin, double cap) {
  const double count = std::pow(static_cast<double>(plugin.alphabet), static_cast<double>(bag.size())) *
                       counter_combinations(plugin);
  if (count > cap) throw ResourceLimitError("bag state space of " + std::to_string(count) + " exceeds cap");
  std::vector<KXState> out;
  for_each_assignment(bag.size(), plugin.alphabet, [&](const std::vector<int>& a) {
    for_each_counter_vector(plugin, [&](const std::vector<int>& c) {
      KXState s;
      s.labels.assign(n, plugin.unlabelled);
      for (std::size_t i = 0; i < bag.size(); ++i) s.labels[bag[i]] = static_cast<Label>(a[i]);
      s.counters = c;
      out.push_back(std::move(s));
    });
  });
  return out;
}

bool solve_locally_uniform(const VimPlugin& plugin, const TemporalGraph& g, const VimOptions& options,
                           VimStats* stats) {
  const int n = g.n();
  const Time horizon = effective_lifetime(g);
  const auto seq = vim_sequence(g);
  auto bag_at = [&](Time t) -> const std::vector<Vertex>& {
    static const std::vector<Vertex> empty;
    return t < static_cast<Time>(seq.bags.size()) ? seq.bags[t] : empty;
  };
  auto active_at = [&](Time t) -> const std::vector<Vertex>& {
    static const std::vector<Vertex> empty;
    return t < static_cast<Time>(seq.active.size()) ? seq.active[t] : empty;
  };
  const bool use_derived = !options.literal && static_cast<bool>(plugin.derive_counters);
  const double log_bound = plugin.arity() * std::log(2.0 * plugin.counter_bound() + 1.0) +
                           seq.width * std::log(static_cast<double>(std::max(plugin.alphabet, 1)));
  VimStats local;
  local.omega = seq.width;

  using Table = std::unordered_set<std::vector<int>, IntVectorHash>;
  Table table;
  for (const auto& s : plugin.initial(seq, n)) table.insert(key_of(s, bag_at(0)));
  auto record = [&](const Table& t) {
    if (options.observer) {
      const Time now = static_cast<Time>(local.table_sizes.size());
      for (const auto& key : t) options.observer(now, state_of(key, bag_at(now), n, plugin.unlabelled));
    }
    local.table_sizes.push_back(t.size());
    local.peak = std::max(local.peak, t.size());
    if (!t.empty() && std::log(static_cast<double>(t.size())) > log_bound + 1e-9) local.bound_ok = false;
  };
  record(table);

  for (Time t = 1; t <= horizon; ++t) {
    const auto& prev_bag = bag_at(t - 1);
    const auto& bag = bag_at(t);
    const Snapshot gt = snapshot_padded(g, t);
    // Vertices whose label may change; the rest keep the predecessor's label.
    std::vector<Vertex> free;
    if (options.literal) {
      free = bag;
    } else {
      free = active_at(t);
    }
    const double per_prev = std::pow(static_cast<double>(plugin.alphabet), static_cast<double>(free.size())) *
                            (use_derived ? 1.0 : counter_combinations(plugin));
    if (per_prev > options.candidate_cap)
      throw ResourceLimitError("state space at t=" + std::to_string(t) + " exceeds cap (" + std::to_string(per_prev) +
                               " candidates per predecessor)");
    Table next;
    for (const auto& key : table) {
      // r_{t-1}: predecessor restricted to F_t, U elsewhere.
      KXState prev = state_of(key, prev_bag, n, plugin.unlabelled);
      KXState r;
      r.labels.assign(n, plugin.unlabelled);
      for (Vertex v : bag) r.labels[v] = prev.labels[v];
      r.counters = prev.counters;
      KXState cand = r;
      for_each_assignment(free.size(), plugin.alphabet, [&](const std::vector<int>& a) {
        for (std::size_t i = 0; i < free.size(); ++i) cand.labels[free[i]] = static_cast<Label>(a[i]);
        if (use_derived) {
          auto c = plugin.derive_counters(r, cand.labels, gt);
          if (!c) return;
          cand.counters = std::move(*c);
          if (plugin.transition(r, cand, gt)) next.insert(key_of(cand, bag));
        } else {
          for_each_counter_vector(plugin, [&](const std::vector<int>& c) {
            cand.counters = c;
            if (plugin.transition(r, cand, gt)) next.insert(key_of(cand, bag));
          });
        }
      });
    }
    table = std::move(next);
    record(table);
    if (table.empty()) break;
  }
  bool accepted = false;
  if (static_cast<Time>(local.table_sizes.size()) == horizon + 1) {
    for (const auto& key : table)
      if (plugin.accept(state_of(key, bag_at(horizon), n, plugin.unlabelled))) {
        accepted = true;
        break;
      }
  }
  if (stats) *stats = std::move(local);
  return accepted;
}

}  // namespace timw
