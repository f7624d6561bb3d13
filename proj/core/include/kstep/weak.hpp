#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kstep/bounded_bfs.hpp"
#include "kstep/des.hpp"
#include "kstep/observer.hpp"

namespace kstep {

/// A pair (x, X ∩ Q_NS) harvested from a reachable observer state X.
struct Seed {
    StateId secret_state;
    /// X ∩ Q_NS; empty means the sink.
    StateSet nonsecret_estimate;
    StateSet origin_estimate;
    /// Shortlex-least observation reaching origin_estimate.
    Word mu;
};

/// Observation-level counterexample: after observing mu the system may be
/// in secret state x, and the continuation nu from x cannot be matched by
/// any run from a nonsecret state of the same estimate.
struct Witness {
    Word mu;
    StateId secret_state;
    Word nu;
    StateSet origin_estimate;
};

struct VerifyStats {
    std::uint64_t observer_states = 0;
    std::uint64_t h_states = 0;
    std::uint64_t product_states_explored = 0;
    std::uint64_t bfs_depth_reached = 0;
};

struct Verdict {
    bool opaque = true;
    std::optional<Witness> witness;
    VerifyStats stats;
};

std::vector<Seed> compute_seeds(const ObserverAutomaton& obs, const StateSet& secret, const StateSet& nonsecret);

/// Explored part of P(G) × H, kept for DOT export.
struct ProductTrace {
    std::vector<ProductState> states;
    /// Edges (from, projected event, to) between explored states.
    struct Edge {
        VertexId from;
        EventId event;
        VertexId to;
    };
    std::vector<Edge> edges;
    std::vector<VertexId> seeds;
};

/// Weak k-step opacity of `des` w.r.t. its secret and nonsecret sets.
///
/// Seeds with an empty nonsecret estimate are reported immediately with an
/// empty continuation; otherwise the product of the projection with the
/// full observer is explored lazily from the seeds up to depth k.
/// If `trace` is given, the explored product is recorded into it.
Verdict verify_weak(const Des& des, KBound k, ProductTrace* trace = nullptr);

/// Current-state opacity, decided directly on the observer.
Verdict verify_current_state_opacity(const Des& des);

/// n · 2^n, saturating.
std::uint64_t product_state_bound(std::size_t n);

}  // namespace kstep
