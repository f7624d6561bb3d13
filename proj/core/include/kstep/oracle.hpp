#pragma once

#include <cstdint>
#include <optional>

#include "kstep/bounded_bfs.hpp"
#include "kstep/des.hpp"
#include "kstep/weak.hpp"

// Definition-level checkers used to cross-examine the verifiers. Nothing
// here calls into the observer, product, or normalization code: state
// estimates are recomputed by direct simulation of the input system.
namespace kstep::oracle {

struct OracleBounds {
    /// Longest observation explored for the prefix μ (for strong search: |P(s)|).
    std::uint64_t mu_max = 8;
    /// Longest continuation ν; the effective bound is min(k, nu_max).
    std::uint64_t nu_max = 8;
    /// Multiplier on the string length cap of the strong check.
    std::uint64_t w_cap_factor = 1;
};

struct WeakViolation {
    Word mu;
    StateId secret_state;
    Word nu;
};

/// Searches observations μ (shortlex) and, for each secret x in the estimate
/// after μ, continuations ν with |ν| ≤ min(k, nu_max) that x can follow but
/// no nonsecret state of the estimate can. Observations with an estimate
/// already seen are skipped, as are continuations revisiting a pair of
/// estimates; both prunings keep the search exhaustive within the bounds.
std::optional<WeakViolation> weak_violation_search(const Des& des, KBound k, const OracleBounds& bounds);

/// Checks a weak witness against the definition by direct simulation.
bool validate_weak_witness(const Des& des, KBound k, const Witness& witness);

/// True iff every w ∈ L(G) with P(w) = P(s) and |w| ≤ w_cap visits a secret
/// state at some prefix w′ with |P(w)| − |P(w′)| ≤ k. False for s ∉ L(G).
/// w_cap = w_cap_factor · ((n+1)(|P(s)|+1) + n).
bool is_strong_violation(const Des& des, KBound k, const Word& s, std::uint64_t w_cap_factor = 1);

/// Shortlex-least violating string among those whose observation is the
/// shortlex-least violating observation with |P(s)| ≤ mu_max.
/// Requires a deterministic system without neutral states.
std::optional<Word> strong_violation_search(const Des& des, KBound k, const OracleBounds& bounds);

struct GeneratorParams {
    std::size_t state_count = 4;
    std::size_t observable_event_count = 2;
    std::size_t unobservable_event_count = 1;
    /// Expected number of successors per (state, event).
    double transition_density = 0.6;
    double secret_fraction = 0.3;
    bool deterministic = true;
    std::uint64_t rng_seed = 0;
    /// Probability that a non-secret state is made neutral. Zero emits none.
    double neutral_fraction = 0.0;
};

/// Reproducible random system with initial state 0.
Des random_des(const GeneratorParams& params);

}  // namespace kstep::oracle
