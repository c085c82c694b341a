#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "timw/state.hpp"
#include "timw/temporal_graph.hpp"
#include "timw/widths.hpp"

namespace timw {

// Labelling over all n vertices plus k counters.
struct KXState {
  std::vector<Label> labels;
  std::vector<int> counters;
  bool operator==(const KXState&) const = default;
};

struct CounterRange {
  int lo = 0;
  int hi = 0;
};

struct VimPlugin {
  std::string name;
  int alphabet = 0;      // labels are 0..alphabet-1
  Label unlabelled = 0;  // the label U
  std::vector<CounterRange> counters;
  std::function<bool(const KXState& prev, const KXState& next, const Snapshot& gt)> transition;
  std::function<bool(const KXState& last)> accept;
  // Initial states; labels outside F_0 must be U.
  std::function<std::vector<KXState>(const VimSequence& seq, int n)> initial;
  // Optional: counters as a function of the predecessor and the new labels.
  std::function<std::optional<std::vector<int>>(const KXState& prev, const std::vector<Label>& next, const Snapshot& gt)>
      derive_counters;

  int arity() const { return static_cast<int>(counters.size()); }
  // Largest absolute counter value.
  int counter_bound() const;
};

struct VimOptions {
  // Enumerate every label on F_t and every counter value (no locality or derived-counter shortcuts).
  bool literal = false;
  // Cap on candidate successors per predecessor.
  double candidate_cap = 5e7;
  // Called with every state kept in the table at time t, labels expanded over all n vertices.
  std::function<void(Time t, const KXState&)> observer;
};

struct VimStats {
  std::vector<std::size_t> table_sizes;  // index t = 0..horizon
  std::size_t peak = 0;
  int omega = 1;
  bool bound_ok = true;  // every table <= (2b+1)^k |X|^ω
};

// All states on `bag` (U elsewhere) times all counter values, lexicographic order.
std::vector<KXState> enumerate_bag_states(std::span<const Vertex> bag, int n, const VimPlugin& plugin,
                                          double cap = 5e7);

bool solve_locally_uniform(const VimPlugin& plugin, const TemporalGraph& g, const VimOptions& options = {},
                           VimStats* stats = nullptr);

}  // namespace timw
