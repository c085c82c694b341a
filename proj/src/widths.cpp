#include "timw/widths.hpp"

#include <algorithm>
#include <limits>

namespace timw {

VimSequence vim_sequence(const TemporalGraph& g) {
  const Time lam = g.lifetime();
  VimSequence seq;
  seq.bags.assign(static_cast<std::size_t>(lam) + 1, {});
  seq.active.assign(static_cast<std::size_t>(lam) + 1, {});
  std::vector<Time> first(g.n(), 0), last(g.n(), 0);
  for (const auto& e : g.time_edges()) {
    for (Vertex x : {e.u, e.v}) {
      if (first[x] == 0 || e.t < first[x]) first[x] = e.t;
      last[x] = std::max(last[x], e.t);
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (first[v] == 0) continue;
    for (Time t = first[v]; t <= last[v]; ++t) seq.bags[t].push_back(v);
  }
  for (Time t = 1; t <= lam; ++t) {
    auto& a = seq.active[t];
    for (const auto& e : g.edges_at(t)) {
      a.push_back(e.u);
      a.push_back(e.v);
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  if (lam >= 1) {
    seq.bags[0] = seq.bags[1];
    seq.active[0] = seq.active[1];
  }
  seq.width = 1;
  for (Time t = 1; t <= lam; ++t) seq.width = std::max<int>(seq.width, static_cast<int>(seq.bags[t].size()));
  return seq;
}

ConnectedVimWidth connected_vim(const TemporalGraph& g, Direction d) {
  ConnectedVimWidth out;
  const Time lam = g.lifetime();
  if (lam == 0) return out;
  const auto seq = vim_sequence(g);
  out.width = 1;
  out.bags.resize(lam);
  for (Time t = 1; t <= lam; ++t) {
    const auto sg = d == Direction::le ? prefix_graph(g, t) : suffix_graph(g, t);
    std::vector<char> in_f(g.n(), 0);
    for (Vertex v : seq.bags[t]) in_f[v] = 1;
    for (const auto& comp : connected_components(sg)) {
      std::vector<Vertex> bag;
      for (Vertex v : comp)
        if (in_f[v]) bag.push_back(v);
      if (bag.empty()) continue;
      out.width = std::max<int>(out.width, static_cast<int>(bag.size()));
      out.bags[t - 1].push_back(std::move(bag));
    }
  }
  return out;
}

namespace {

// Largest d-connected bag at each time 1..Λ; F_t always comes from the whole graph.
std::vector<int> connected_profile(const TemporalGraph& g, Direction d) {
  const auto cv = connected_vim(g, d);
  std::vector<int> out;
  for (const auto& bags : cv.bags) {
    int best = 0;
    for (const auto& b : bags) best = std::max(best, static_cast<int>(b.size()));
    out.push_back(best);
  }
  return out;
}

int split_width(const TemporalGraph& g, Time t, const std::vector<int>& le, const std::vector<int>& ge,
                const VimSequence& seq) {
  const Time lam = g.lifetime();
  if (t == 1) return std::max(1, *std::max_element(ge.begin(), ge.end()));
  if (t == lam) return std::max(1, *std::max_element(le.begin(), le.end()));
  int w = std::max(1, static_cast<int>(seq.bags[t].size()));
  for (Time s = 1; s < t; ++s) w = std::max(w, le[s - 1]);
  for (Time s = t + 1; s <= lam; ++s) w = std::max(w, ge[s - 1]);
  return w;
}

}  // namespace

int bidirectional_split_width(const TemporalGraph& g, Time t) {
  const Time lam = g.lifetime();
  if (t < 1 || t > lam) throw RangeError("split time outside [1, Λ]");
  return split_width(g, t, connected_profile(g, Direction::le), connected_profile(g, Direction::ge), vim_sequence(g));
}

int bidirectional_cvim_width(const TemporalGraph& g) {
  const Time lam = g.lifetime();
  if (lam == 0) return 1;
  const auto le = connected_profile(g, Direction::le);
  const auto ge = connected_profile(g, Direction::ge);
  const auto seq = vim_sequence(g);
  int best = std::numeric_limits<int>::max();
  for (Time t = 1; t <= lam; ++t) best = std::min(best, split_width(g, t, le, ge, seq));
  return best;
}

}  // namespace timw
