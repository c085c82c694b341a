#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "timw/decomposition.hpp"
#include "timw/state.hpp"
#include "timw/temporal_graph.hpp"

namespace timw {

// A timed component with its local adjacency (G_t; G_1 at t = 0).
struct ComponentView {
  Time t = 0;
  std::vector<Vertex> vertices;       // sorted
  std::vector<std::vector<int>> adj;  // local indices
  int size() const { return static_cast<int>(vertices.size()); }
  int index_of(Vertex v) const;
  bool has_edge(int a, int b) const;
};

ComponentView make_component_view(const TemporalGraph& g, const TimedComponent& c);

enum class Phase { start, valid, finish };

struct TimPlugin {
  std::string name;
  int alphabet = 0;
  std::vector<std::string> label_names;
  int arity = 0;
  int bound = 0;  // b: largest absolute vector entry
  Time horizon = 1;
  Vec v_upper;
  using Unary = std::function<bool(const ComponentView&, std::span<const Label>, std::span<const int>)>;
  Unary start, valid, finish;
  std::function<bool(const ComponentView&, std::span<const Label> prev, std::span<const Label> next)> transition;
  // Optional: superset of vectors the phase routine can accept for a labelling.
  std::function<std::vector<Vec>(Phase, const ComponentView&, std::span<const Label>)> vectors;
  // Optional: superset of next labellings with a true transition from `prev`.
  std::function<std::vector<std::vector<Label>>(const ComponentView&, std::span<const Label> prev)> successors;

  const Unary& routine(Phase p) const { return p == Phase::start ? start : p == Phase::valid ? valid : finish; }
};

// Sorted set of total vectors.
using TotalSet = std::vector<Vec>;

void normalize(TotalSet& s, bool prune_dominated);
TotalSet sumset(const TotalSet& a, const TotalSet& b, bool prune_dominated);
bool leq(const Vec& a, const Vec& b);
// True iff one total per child sums exactly to target.
bool aggregate_child_totals(const std::vector<TotalSet>& children, const Vec& target);

struct Profile {
  std::vector<std::pair<VertexTime, Label>> labels;      // over B²(s)
  std::vector<std::pair<TimedComponent, Vec>> vectors;  // over 𝒞^s
  Vec total;
  bool operator==(const Profile&) const = default;
};
bool operator<(const Profile& a, const Profile& b);

struct TimOptions {
  // Keep only componentwise-minimal totals; sound because acceptance is total <= v_upper.
  bool prune_dominated = true;
  std::size_t table_cap = 20'000'000;
  std::optional<int> root_override;
};

struct TimStats {
  std::size_t nodes = 0;
  std::size_t peak_entries = 0;
  int phi = 1;
  double log_bound = 0;  // log of |X|^{3φ²}(2b+1)^{3kφ²}(2Λnb+1)^k
  bool bound_ok = true;
  std::vector<std::size_t> entries;  // per node
};

class TimEngine {
 public:
  TimEngine(const TimPlugin& plugin, const TemporalGraph& g, TimOptions options = {});
  ~TimEngine();
  TimEngine(const TimEngine&) = delete;
  TimEngine& operator=(const TimEngine&) = delete;

  bool solve(TimStats* stats = nullptr);
  // Full realisable profiles of node s; disables pruning for the subtree.
  std::vector<Profile> realisable_profiles(int s);

  struct TransitionCheck {
    TimedComponent component;
    int owner = -1;    // node whose bag holds the component
    int checker = -1;  // node where Tr is evaluated
  };
  std::vector<TransitionCheck> transition_plan() const;
  const TwoStepDecomposition& two_step() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool solve_component_exchangeable(const TimPlugin& plugin, const TemporalGraph& g, const TimOptions& options = {},
                                  TimStats* stats = nullptr);

}  // namespace timw
