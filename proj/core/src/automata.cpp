#include "kstep/automata.hpp"

#include <deque>
#include <set>
#include <utility>

#include "kstep/error.hpp"

namespace kstep {

StateSet unobservable_reach(const Des& des, const StateSet& states) {
    StateSet reach = states;
    const auto& unobs = des.events().unobservable_events();
    if (unobs.empty()) return reach;
    std::vector<StateId> work = states.members();
    while (!work.empty()) {
        const StateId s = work.back();
        work.pop_back();
        for (EventId e : unobs)
            for (StateId t : des.successors(s, e))
                if (reach.add(t)) work.push_back(t);
    }
    return reach;
}

Des project(const Des& des) {
    const std::size_t n = des.state_count();
    const auto& obs = des.events().observable_events();

    std::vector<Event> events;
    events.reserve(obs.size());
    for (EventId e : obs) events.push_back({des.events().name(e), true});

    std::vector<StateSet> closure;
    closure.reserve(n);
    for (StateId q = 0; q < n; ++q) closure.push_back(unobservable_reach(des, StateSet(n, {q})));

    std::vector<Transition> transitions;
    for (StateId q = 0; q < n; ++q) {
        for (EventId j = 0; j < obs.size(); ++j) {
            StateSet after = des.step(closure[q], obs[j]);
            StateSet gamma(n);
            after.for_each([&](StateId r) { gamma |= closure[r]; });
            gamma.for_each([&](StateId r) { transitions.push_back({q, j, r}); });
        }
    }
    if (events.empty()) {
        // An event table must be nonempty; with Σ_o = ∅ keep a placeholder
        // observable event that has no transitions.
        events.push_back({"_", true});
    }
    return Des(n, EventTable(std::move(events)), std::move(transitions),
               unobservable_reach(des, des.initial()), des.secret(), des.nonsecret(),
               des.state_names());
}

AccessiblePart accessible_part(const Des& des) {
    const std::size_t n = des.state_count();
    StateSet reached = des.initial();
    std::vector<StateId> work = reached.members();
    while (!work.empty()) {
        const StateId s = work.back();
        work.pop_back();
        for (EventId e = 0; e < des.events().size(); ++e)
            for (StateId t : des.successors(s, e))
                if (reached.add(t)) work.push_back(t);
    }

    std::vector<std::optional<StateId>> new_index(n);
    std::vector<std::string> names;
    StateId next = 0;
    for (StateId q = 0; q < n; ++q) {
        if (!reached.contains(q)) continue;
        new_index[q] = next++;
        names.push_back(des.state_name(q));
    }
    const std::size_t m = next;
    auto remap = [&](const StateSet& set) {
        StateSet out(m);
        set.for_each([&](StateId q) {
            if (new_index[q]) out.insert(*new_index[q]);
        });
        return out;
    };
    std::vector<Transition> transitions;
    for (const auto& t : des.transitions())
        if (new_index[t.source] && new_index[t.target])
            transitions.push_back({*new_index[t.source], t.event, *new_index[t.target]});

    Des out(m, des.events(), std::move(transitions), remap(des.initial()), remap(des.secret()),
            remap(des.nonsecret()), std::move(names));
    return {std::move(out), std::move(new_index)};
}

Des accessible(const Des& des) { return accessible_part(des).des; }

bool is_deterministic(const Des& des) {
    if (des.initial().size() != 1) return false;
    for (StateId q = 0; q < des.state_count(); ++q)
        for (EventId e = 0; e < des.events().size(); ++e)
            if (des.successors(q, e).size() > 1) return false;
    return true;
}

bool language_equivalent(const Des& a, const Des& b) {
    if (!is_deterministic(a) || !is_deterministic(b))
        throw ModelError(ErrorKind::nondeterministic, "language_equivalent needs deterministic systems");
    if (!(a.events() == b.events()))
        throw ModelError(ErrorKind::alphabet_mismatch, "language_equivalent needs identical event tables");

    using Pair = std::pair<StateId, StateId>;
    std::set<Pair> seen;
    std::deque<Pair> queue;
    queue.push_back({a.initial().first(), b.initial().first()});
    seen.insert(queue.front());
    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < a.events().size(); ++e) {
            auto sa = a.successors(p, e);
            auto sb = b.successors(q, e);
            if (sa.empty() != sb.empty()) return false;
            if (sa.empty()) continue;
            const Pair next{sa.front(), sb.front()};
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return true;
}

}  // namespace kstep
