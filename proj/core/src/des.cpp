#include "kstep/des.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kstep/error.hpp"

namespace kstep {

EventTable::EventTable(std::vector<Event> events) : events_(std::move(events)) {
    if (events_.empty()) throw ModelError(ErrorKind::no_events, "event table is empty");
    for (EventId e = 0; e < events_.size(); ++e) {
        const auto& ev = events_[e];
        if (ev.name.empty()) throw ModelError(ErrorKind::malformed, "event name is empty");
        if (!by_name_.emplace(ev.name, e).second)
            throw ModelError(ErrorKind::duplicate_event, "duplicate event name '" + ev.name + "'");
        (ev.observable ? observable_ : unobservable_).push_back(e);
    }
}

std::optional<EventId> EventTable::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

Des::Des(std::size_t state_count, EventTable events, std::vector<Transition> transitions,
         StateSet initial, StateSet secret, StateSet nonsecret,
         std::vector<std::string> state_names)
    : state_count_(state_count),
      events_(std::move(events)),
      initial_(std::move(initial)),
      secret_(std::move(secret)),
      nonsecret_(std::move(nonsecret)),
      state_names_(std::move(state_names)) {
    if (state_count_ == 0) throw ModelError(ErrorKind::malformed, "a DES needs at least one state");
    if (events_.size() == 0) throw ModelError(ErrorKind::no_events, "event table is empty");
    for (const StateSet* set : {&initial_, &secret_, &nonsecret_})
        if (set->universe() != state_count_)
            throw ModelError(ErrorKind::index_out_of_range, "state set universe does not match state count");
    if (initial_.empty()) throw ModelError(ErrorKind::empty_initial, "initial state set is empty");
    if (secret_.intersects(nonsecret_))
        throw ModelError(ErrorKind::overlapping_secret, "secret and nonsecret states overlap");

    if (state_names_.empty()) {
        state_names_.reserve(state_count_);
        for (std::size_t i = 0; i < state_count_; ++i) state_names_.push_back(std::to_string(i));
    }
    if (state_names_.size() != state_count_)
        throw ModelError(ErrorKind::malformed, "state name count does not match state count");
    for (StateId s = 0; s < state_count_; ++s) {
        if (state_names_[s].empty()) throw ModelError(ErrorKind::malformed, "state name is empty");
        if (!state_by_name_.emplace(state_names_[s], s).second)
            throw ModelError(ErrorKind::duplicate_state, "duplicate state name '" + state_names_[s] + "'");
    }

    std::set<Transition> seen;
    transitions_.reserve(transitions.size());
    for (const auto& t : transitions) {
        if (t.source >= state_count_ || t.target >= state_count_ || t.event >= events_.size())
            throw ModelError(ErrorKind::index_out_of_range, "transition index out of range");
        if (seen.insert(t).second) transitions_.push_back(t);
    }

    const std::size_t slots = state_count_ * events_.size();
    offsets_.assign(slots + 1, 0);
    for (const auto& t : transitions_) ++offsets_[static_cast<std::size_t>(t.source) * events_.size() + t.event + 1];
    for (std::size_t i = 0; i < slots; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(transitions_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Iterating the ordered set gives ascending targets within each slot.
    for (const auto& t : seen) targets_[cursor[static_cast<std::size_t>(t.source) * events_.size() + t.event]++] = t.target;
}

std::optional<StateId> Des::find_state(std::string_view name) const {
    auto it = state_by_name_.find(std::string(name));
    if (it == state_by_name_.end()) return std::nullopt;
    return it->second;
}

StateSet Des::step(const StateSet& from, EventId e) const {
    StateSet out(state_count_);
    from.for_each([&](StateId s) {
        for (StateId t : successors(s, e)) out.insert(t);
    });
    return out;
}

Des Des::with_secrets(StateSet secret, StateSet nonsecret) const {
    return Des(state_count_, events_, transitions_, initial_, std::move(secret), std::move(nonsecret), state_names_);
}

}  // namespace kstep
