#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "kstep/des.hpp"

namespace kstep {

/// Accessible part of the subset construction over the observable events.
///
/// The empty estimate is never stored: transitions into it are kSink.
struct ObserverAutomaton {
    static constexpr std::uint32_t kSink = std::numeric_limits<std::uint32_t>::max();

    /// alphabet[j] is the source-Des event id of observer column j.
    std::vector<EventId> alphabet;
    /// states[0] is the initial estimate UR(I).
    std::vector<StateSet> states;
    /// next[i * alphabet.size() + j] is the successor of state i on column j, or kSink.
    std::vector<std::uint32_t> next;

    std::size_t size() const { return states.size(); }
    std::uint32_t successor(std::uint32_t state, std::size_t column) const {
        return next[state * alphabet.size() + column];
    }
    const StateSet& initial() const { return states.front(); }
};

ObserverAutomaton observer(const Des& des);

/// Observer of a projected automaton, whose events are all observable.
/// `alphabet` maps projected event j back to the source event id.
ObserverAutomaton observer_of_projection(const Des& projected, std::vector<EventId> alphabet);

/// One step of the full observer: δ(Z, P⁻¹(a)) = UR(δ(UR(Z), a)).
/// The empty result is the sink, and the sink maps to itself.
StateSet full_observer_step(const Des& des, const StateSet& estimate, EventId event);

/// State (q, Z) of P(G) × H. An empty estimate is the sink ∅.
struct ProductState {
    StateId nfa_state;
    StateSet set_state;
    bool is_sink() const { return set_state.empty(); }
    friend bool operator==(const ProductState&, const ProductState&) = default;
};

/// Successors of `state` on event `a` of the fully observable projection `projected`:
/// {(q', δ(Z, a)) : q' ∈ γ(q, a)}.
std::vector<ProductState> product_step(const Des& projected, const ProductState& state, EventId event);

}  // namespace kstep
