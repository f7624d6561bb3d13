#pragma once

#include <optional>
#include <vector>

#include "kstep/des.hpp"

namespace kstep {

/// δ(S, Σ_uo*): the least superset of S closed under unobservable transitions.
StateSet unobservable_reach(const Des& des, const StateSet& states);

/// Projected automaton P(G) over the observable events only.
///
/// Same states and names; event i of the result is the i-th observable
/// event of `des`. Transitions are γ(q,a) = δ(q, Σ_uo* a Σ_uo*), the initial
/// set becomes UR(I), and the secret/nonsecret sets are carried over.
Des project(const Des& des);

/// Accessible part of `des`. Surviving states keep their relative order;
/// new_index[q] is the index of q in the result, or nullopt if q was dropped.
struct AccessiblePart {
    Des des;
    std::vector<std::optional<StateId>> new_index;
};
AccessiblePart accessible_part(const Des& des);
Des accessible(const Des& des);

/// Single initial state and at most one successor per (state, event).
bool is_deterministic(const Des& des);

/// Equality of the generated (prefix-closed) languages of two deterministic
/// systems over the same event table.
/// Throws ModelError on nondeterministic input or mismatched alphabets.
bool language_equivalent(const Des& a, const Des& b);

}  // namespace kstep
