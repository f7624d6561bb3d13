#pragma once

#include <optional>
#include <vector>

#include "kstep/des.hpp"
#include "kstep/weak.hpp"

namespace kstep {

/// No unobservable transition leads from a secret state to a non-secret one
/// (non-secret meaning Q − Q_S).
bool is_normal(const Des& des);

struct NormalizationResult {
    Des des_n;
    /// prime_map[q] is the index in des_n of the copy q′, if it survived pruning.
    std::vector<std::optional<StateId>> prime_map;
    /// For each state of des_n: the original state it stands for, and whether it is a copy.
    std::vector<StateId> origin;
    std::vector<bool> is_prime;
    std::size_t original_count;
};

/// Makes a deterministic system without neutral states normal.
///
/// Unobservable secret→nonsecret transitions are redirected to primed
/// copies; the copies replay the unobservable transitions among themselves
/// and leave through the original observable ones. Copies are secret.
/// Unreachable states are pruned once at the end.
NormalizationResult normalize(const Des& des);

struct ReductionResult {
    Des des_prime;
    EventId fresh_event;
    /// copy_map[q] is the index of q′ for every nonsecret q.
    std::vector<std::optional<StateId>> copy_map;
};

/// Disjoint union of a normal deterministic system with its nonsecret part,
/// joined by a fresh unobservable event from each nonsecret state to its
/// copy. All original states become secret, the copies nonsecret.
ReductionResult strong_to_weak(const Des& des);

/// First of "u", "u1", "u2", ... that is not an event name of `events`.
std::string fresh_event_name(const EventTable& events);

struct StrongVerdict {
    /// Result of the weak check on the reduced system. Witness states refer
    /// to `reduced`; its observations are observations of the input as well.
    Verdict verdict;
    Des reduced;
    bool normalized = false;

    bool opaque() const { return verdict.opaque; }
};

/// Strong k-step opacity of a deterministic system whose non-secret states
/// are exactly Q − Q_S. A normal input skips normalization.
StrongVerdict verify_strong(const Des& des, KBound k);

}  // namespace kstep
