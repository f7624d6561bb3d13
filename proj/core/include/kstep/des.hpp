#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kstep/state_set.hpp"

namespace kstep {

/// Sequence of event ids of some Des.
using Word = std::vector<EventId>;

struct Event {
    std::string name;
    bool observable = true;
};

/// Ordered event list with its observable/unobservable partition.
class EventTable {
public:
    EventTable() = default;
    explicit EventTable(std::vector<Event> events);

    std::size_t size() const { return events_.size(); }
    const Event& operator[](EventId e) const { return events_[e]; }
    const std::vector<Event>& events() const { return events_; }

    bool observable(EventId e) const { return events_[e].observable; }
    const std::string& name(EventId e) const { return events_[e].name; }
    std::optional<EventId> find(std::string_view name) const;

    /// Observable event ids in table order.
    const std::vector<EventId>& observable_events() const { return observable_; }
    const std::vector<EventId>& unobservable_events() const { return unobservable_; }

    friend bool operator==(const EventTable& a, const EventTable& b) { return a.events_ == b.events_; }

private:
    std::vector<Event> events_;
    std::vector<EventId> observable_;
    std::vector<EventId> unobservable_;
    std::unordered_map<std::string, EventId> by_name_;
};

inline bool operator==(const Event& a, const Event& b) {
    return a.name == b.name && a.observable == b.observable;
}

struct Transition {
    StateId source;
    EventId event;
    StateId target;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A discrete-event system: a finite automaton over a partially observable
/// alphabet, with disjoint secret and nonsecret state sets. States in
/// neither set are neutral.
///
/// Immutable once built. Duplicate transitions are dropped, keeping the
/// first occurrence, so transitions() preserves the input order otherwise.
class Des {
public:
    Des(std::size_t state_count, EventTable events, std::vector<Transition> transitions,
        StateSet initial, StateSet secret, StateSet nonsecret,
        std::vector<std::string> state_names = {});

    std::size_t state_count() const { return state_count_; }
    const EventTable& events() const { return events_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const StateSet& initial() const { return initial_; }
    const StateSet& secret() const { return secret_; }
    const StateSet& nonsecret() const { return nonsecret_; }
    StateSet neutral() const { return StateSet::full(state_count_) - secret_ - nonsecret_; }
    bool has_neutral_states() const { return (secret_ | nonsecret_).size() != state_count_; }

    /// Label of a state; falls back to the decimal index when unnamed.
    const std::string& state_name(StateId s) const { return state_names_[s]; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    std::optional<StateId> find_state(std::string_view name) const;

    std::span<const StateId> successors(StateId s, EventId e) const {
        const std::size_t slot = static_cast<std::size_t>(s) * events_.size() + e;
        return {targets_.data() + offsets_[slot], targets_.data() + offsets_[slot + 1]};
    }

    /// δ(S, e) for a single event.
    StateSet step(const StateSet& from, EventId e) const;

    /// Same model with different secret/nonsecret sets.
    Des with_secrets(StateSet secret, StateSet nonsecret) const;

private:
    std::size_t state_count_;
    EventTable events_;
    std::vector<Transition> transitions_;
    StateSet initial_;
    StateSet secret_;
    StateSet nonsecret_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, StateId> state_by_name_;
    // CSR adjacency keyed by state * |events| + event.
    std::vector<std::size_t> offsets_;
    std::vector<StateId> targets_;
};

}  // namespace kstep
