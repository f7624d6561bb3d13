#include "kstep/strong.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "kstep/automata.hpp"
#include "kstep/error.hpp"

namespace kstep {
namespace {

void require_strong_input(const Des& des, const char* construction) {
    if (!is_deterministic(des))
        throw ModelError(ErrorKind::nondeterministic, std::string(construction) + ": input is not deterministic");
    if (des.has_neutral_states())
        throw ModelError(ErrorKind::neutral_states,
                         std::string(construction) + ": every state must be secret or nonsecret");
}

std::string unique_name(std::string base, std::unordered_set<std::string>& taken) {
    base += '\'';
    while (taken.count(base)) base += '\'';
    taken.insert(base);
    return base;
}

}  // namespace

bool is_normal(const Des& des) {
    for (const auto& t : des.transitions())
        if (!des.events().observable(t.event) && des.secret().contains(t.source) && !des.secret().contains(t.target))
            return false;
    return true;
}

NormalizationResult normalize(const Des& des) {
    require_strong_input(des, "normalize");
    const std::size_t n = des.state_count();
    const auto prime = [n](StateId q) { return static_cast<StateId>(q + n); };
    const StateSet& secret = des.secret();

    std::vector<Transition> transitions;
    for (const auto& t : des.transitions()) {
        const bool unobs = !des.events().observable(t.event);
        if (unobs && secret.contains(t.source) && !secret.contains(t.target))
            transitions.push_back({t.source, t.event, prime(t.target)});
        else
            transitions.push_back(t);
    }
    for (const auto& t : des.transitions())
        if (!des.events().observable(t.event)) transitions.push_back({prime(t.source), t.event, prime(t.target)});
    for (const auto& t : des.transitions())
        if (des.events().observable(t.event)) transitions.push_back({prime(t.source), t.event, t.target});

    std::unordered_set<std::string> taken(des.state_names().begin(), des.state_names().end());
    std::vector<std::string> names = des.state_names();
    for (StateId q = 0; q < n; ++q) names.push_back(unique_name(des.state_name(q), taken));

    StateSet initial(2 * n), secret_n(2 * n), nonsecret_n(2 * n);
    des.initial().for_each([&](StateId q) { initial.insert(q); });
    for (StateId q = 0; q < n; ++q) {
        (secret.contains(q) ? secret_n : nonsecret_n).insert(q);
        secret_n.insert(prime(q));
    }
    Des doubled(2 * n, des.events(), std::move(transitions), std::move(initial), std::move(secret_n),
                std::move(nonsecret_n), std::move(names));

    auto part = accessible_part(doubled);
    NormalizationResult result{std::move(part.des), std::vector<std::optional<StateId>>(n), {}, {}, n};
    result.origin.resize(result.des_n.state_count());
    result.is_prime.resize(result.des_n.state_count());
    for (StateId q = 0; q < 2 * n; ++q) {
        const auto idx = part.new_index[q];
        if (!idx) continue;
        result.origin[*idx] = q < n ? q : static_cast<StateId>(q - n);
        result.is_prime[*idx] = q >= n;
        if (q >= n) result.prime_map[q - n] = idx;
    }

    // Structural guarantees of the construction, checked on every call.
    const Des& out = result.des_n;
    if (!is_deterministic(out)) throw std::logic_error("normalize produced a nondeterministic system");
    const StateSet closure = unobservable_reach(out, out.secret());
    if (closure.intersects(out.nonsecret()))
        throw std::logic_error("normalize left a nonsecret state in the unobservable reach of a secret state");
    return result;
}

std::string fresh_event_name(const EventTable& events) {
    std::string name = "u";
    for (int i = 1; events.find(name); ++i) name = "u" + std::to_string(i);
    return name;
}

ReductionResult strong_to_weak(const Des& des) {
    require_strong_input(des, "strong_to_weak");
    if (!is_normal(des))
        throw ModelError(ErrorKind::not_normal, "strong_to_weak: input is not normal");
    const std::size_t n = des.state_count();
    const StateSet& secret = des.secret();

    std::vector<Event> events = des.events().events();
    const auto fresh = static_cast<EventId>(events.size());
    events.push_back({fresh_event_name(des.events()), false});

    std::vector<std::optional<StateId>> copy_map(n);
    std::unordered_set<std::string> taken(des.state_names().begin(), des.state_names().end());
    std::vector<std::string> names = des.state_names();
    StateId next = static_cast<StateId>(n);
    for (StateId q = 0; q < n; ++q) {
        if (secret.contains(q)) continue;
        copy_map[q] = next++;
        names.push_back(unique_name(des.state_name(q), taken));
    }
    const std::size_t total = next;

    std::vector<Transition> transitions = des.transitions();
    for (const auto& t : des.transitions())
        if (copy_map[t.source] && copy_map[t.target])
            transitions.push_back({*copy_map[t.source], t.event, *copy_map[t.target]});
    for (StateId q = 0; q < n; ++q)
        if (copy_map[q]) transitions.push_back({q, fresh, *copy_map[q]});

    StateSet initial(total), secret_p(total), nonsecret_p(total);
    des.initial().for_each([&](StateId q) { initial.insert(q); });
    for (StateId q = 0; q < n; ++q) secret_p.insert(q);
    for (StateId q = static_cast<StateId>(n); q < total; ++q) nonsecret_p.insert(q);

    Des out(total, EventTable(std::move(events)), std::move(transitions), std::move(initial), std::move(secret_p),
            std::move(nonsecret_p), std::move(names));
    return {std::move(out), fresh, std::move(copy_map)};
}

StrongVerdict verify_strong(const Des& des, KBound k) {
    require_strong_input(des, "verify_strong");
    const bool normal = is_normal(des);
    ReductionResult reduction = normal ? strong_to_weak(des) : strong_to_weak(normalize(des).des_n);
    Verdict verdict = verify_weak(reduction.des_prime, k);
    return {std::move(verdict), std::move(reduction.des_prime), !normal};
}

}  // namespace kstep
