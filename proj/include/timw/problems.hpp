#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "timw/tim_engine.hpp"
#include "timw/vim_engine.hpp"

namespace timw {

// Temporal Hamiltonian path.
namespace ham {
inline constexpr Label unvisited = 0;
inline constexpr Label visited = 1;
inline constexpr Label current = 2;
}  // namespace ham

VimPlugin ham_vim_plugin(int n);
TimPlugin ham_tim_plugin(const TemporalGraph& g);
// Disjunction over the shifted graphs so paths may start after time 1.
bool ham_vim_solve(const TemporalGraph& g, const VimOptions& options = {}, VimStats* stats = nullptr);
bool ham_tim_solve(const TemporalGraph& g, const TimOptions& options = {}, TimStats* stats = nullptr);

// Temporal firefighter.
struct FirefighterInstance {
  TemporalGraph g;
  Vertex root = 0;
  int h = 0;
};

// Reserve form: the root has an edge at time 1 and the budget starts at `budget`.
struct ReserveInstance {
  TemporalGraph g;
  Vertex root = 0;
  int h = 0;
  int budget = 1;
  // Set when the root never meets an edge; every other vertex is saved.
  std::optional<int> saved_without_fire;
};

ReserveInstance normalize_reserve(const FirefighterInstance& inst);

namespace ff {
// VIM labels.
inline constexpr Label unburnt = 0;
inline constexpr Label burning = 1;
inline constexpr Label defended = 2;
// TIM adds the newly defended label.
inline constexpr Label newdef = 3;
}  // namespace ff

VimPlugin ff_vim_plugin(const ReserveInstance& inst);
TimPlugin ff_tim_plugin(const ReserveInstance& inst);
bool ff_vim_solve(const FirefighterInstance& inst, const VimOptions& options = {}, VimStats* stats = nullptr);
bool ff_tim_solve(const FirefighterInstance& inst, const TimOptions& options = {}, TimStats* stats = nullptr);

// Δ-temporal matching.
struct MatchingInstance {
  TemporalGraph g;
  int delta = 1;
  int h = 0;
};

// Labels: (0, a, b) with a, b in [1, Δ] is (a-1)Δ + (b-1); the matched label is Δ².
struct MatchingLabel {
  bool matched = false;
  int a = 0;
  int b = 0;
};
Label encode_matching_label(int delta, MatchingLabel l);
MatchingLabel decode_matching_label(int delta, Label l);
// True iff the vertices at `marked` have a perfect matching in the component.
bool has_perfect_matching(const ComponentView& c, const std::vector<int>& marked);

TimPlugin matching_tim_plugin(const MatchingInstance& inst);
bool matching_tim_solve(const MatchingInstance& inst, const TimOptions& options = {}, TimStats* stats = nullptr);

// Temporal reachability edge deletion, single source.
struct TredInstance {
  TemporalGraph g;
  Vertex source = 0;
  int r = 0;
  int h = 0;
};

namespace tred {
inline constexpr Label unreached = 0;
inline constexpr Label current = 1;
inline constexpr Label reached = 2;
}  // namespace tred

// Σ over reached vertices of unreached neighbours in the component.
int tred_deleted_edges(const ComponentView& c, std::span<const Label> labels);
TimPlugin tred_tim_plugin(const TredInstance& inst);
bool tred_tim_solve(const TredInstance& inst, const TimOptions& options = {}, TimStats* stats = nullptr);

// Max-2-SAT and the firefighter reduction.
struct TwoCnf {
  int variables = 0;
  // Literals are ±(variable index), variables numbered from 1.
  std::vector<std::pair<int, int>> clauses;
  int k = 0;
};

// Target k' = v + 2wv + 3w + k.
FirefighterInstance gen_firefighter_hardness(const TwoCnf& f);

}  // namespace timw
