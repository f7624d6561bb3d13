#include "kstep/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "kstep/error.hpp"

namespace kstep::oracle {
namespace {

// Local simulation helpers, kept apart from automata.cpp on purpose.

StateSet silent_closure(const Des& des, StateSet states) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& t : des.transitions())
            if (!des.events().observable(t.event) && states.contains(t.source) && states.add(t.target)) grew = true;
    }
    return states;
}

StateSet observe(const Des& des, const StateSet& states, EventId a) {
    StateSet next(des.state_count());
    for (const auto& t : des.transitions())
        if (t.event == a && states.contains(t.source)) next.insert(t.target);
    return silent_closure(des, std::move(next));
}

std::vector<EventId> observable_ids(const Des& des) {
    std::vector<EventId> ids;
    for (EventId e = 0; e < des.events().size(); ++e)
        if (des.events().observable(e)) ids.push_back(e);
    return ids;
}

std::optional<StateId> successor(const Des& des, StateId q, EventId e) {
    for (const auto& t : des.transitions())
        if (t.source == q && t.event == e) return t.target;
    return std::nullopt;
}

std::uint64_t effective_nu(KBound k, std::uint64_t nu_max) {
    return k.is_infinite() ? nu_max : std::min(k.value(), nu_max);
}

std::optional<Word> continuation_violation(const Des& des, const std::vector<EventId>& obs, StateId x,
                                           const StateSet& nonsecret_estimate, std::uint64_t limit) {
    struct Node {
        StateSet from_secret;
        StateSet from_nonsecret;
        Word nu;
    };
    std::set<std::pair<StateSet, StateSet>> seen;
    std::deque<Node> queue;
    queue.push_back({silent_closure(des, StateSet(des.state_count(), {x})), silent_closure(des, nonsecret_estimate), {}});
    seen.insert({queue.front().from_secret, queue.front().from_nonsecret});
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (node.from_nonsecret.empty()) return node.nu;
        if (node.nu.size() >= limit) continue;
        for (EventId a : obs) {
            StateSet a_set = observe(des, node.from_secret, a);
            if (a_set.empty()) continue;
            StateSet b_set = observe(des, node.from_nonsecret, a);
            if (!seen.insert({a_set, b_set}).second) continue;
            Word nu = node.nu;
            nu.push_back(a);
            queue.push_back({std::move(a_set), std::move(b_set), std::move(nu)});
        }
    }
    return std::nullopt;
}

void require_strong_input(const Des& des) {
    if (des.initial().size() != 1)
        throw ModelError(ErrorKind::nondeterministic, "strong oracle: needs a single initial state");
    std::set<std::pair<StateId, EventId>> seen;
    for (const auto& t : des.transitions())
        if (!seen.insert({t.source, t.event}).second)
            throw ModelError(ErrorKind::nondeterministic, "strong oracle: input is not deterministic");
    if (des.has_neutral_states())
        throw ModelError(ErrorKind::neutral_states, "strong oracle: neutral states are not allowed");
}

Word observation_of(const Des& des, const Word& s) {
    Word mu;
    for (EventId e : s)
        if (des.events().observable(e)) mu.push_back(e);
    return mu;
}

/// Exists w with P(w) = mu, |w| ≤ cap, whose prefixes at observation
/// position ≥ clean_from all end in non-secret states.
bool has_clean_run(const Des& des, const Word& mu, std::uint64_t clean_from, std::uint64_t cap) {
    // failed[(q, pos)] = largest remaining budget known to fail.
    std::map<std::pair<StateId, std::size_t>, std::uint64_t> failed;
    const StateSet& secret = des.secret();
    auto dfs = [&](auto&& self, StateId q, std::size_t pos, std::uint64_t len) -> bool {
        if (pos >= clean_from && secret.contains(q)) return false;
        if (pos == mu.size()) return true;
        if (len >= cap) return false;
        const std::uint64_t budget = cap - len;
        auto it = failed.find({q, pos});
        if (it != failed.end() && it->second >= budget) return false;
        for (EventId e = 0; e < des.events().size(); ++e) {
            const bool observable = des.events().observable(e);
            if (observable && e != mu[pos]) continue;
            auto t = successor(des, q, e);
            if (!t) continue;
            if (self(self, *t, observable ? pos + 1 : pos, len + 1)) return true;
        }
        auto& slot = failed[{q, pos}];
        slot = std::max(slot, budget);
        return false;
    };
    return dfs(dfs, des.initial().first(), 0, 0);
}

bool observation_violates(const Des& des, KBound k, const Word& mu, std::uint64_t w_cap_factor) {
    const std::uint64_t m = mu.size();
    const std::uint64_t n = des.state_count();
    const std::uint64_t clean_from = (k.is_infinite() || k.value() >= m) ? 0 : m - k.value();
    const std::uint64_t cap = w_cap_factor * ((n + 1) * (m + 1) + n);
    return !has_clean_run(des, mu, clean_from, cap);
}

/// Shortlex-least s ∈ L(G) with P(s) = mu.
std::optional<Word> shortest_string_for(const Des& des, const Word& mu) {
    using Config = std::pair<StateId, std::size_t>;
    std::map<Config, std::pair<Config, EventId>> parent;
    std::deque<Config> queue;
    const Config start{des.initial().first(), 0};
    queue.push_back(start);
    parent.emplace(start, std::make_pair(start, EventId{0}));
    while (!queue.empty()) {
        const Config c = queue.front();
        queue.pop_front();
        if (c.second == mu.size()) {
            Word s;
            for (Config at = c; at != start; at = parent.at(at).first) s.push_back(parent.at(at).second);
            std::reverse(s.begin(), s.end());
            return s;
        }
        for (EventId e = 0; e < des.events().size(); ++e) {
            const bool observable = des.events().observable(e);
            if (observable && e != mu[c.second]) continue;
            auto t = successor(des, c.first, e);
            if (!t) continue;
            const Config next{*t, observable ? c.second + 1 : c.second};
            if (parent.emplace(next, std::make_pair(c, e)).second) queue.push_back(next);
        }
    }
    return std::nullopt;
}

StateSet estimate_after(const Des& des, const Word& mu, std::size_t length) {
    StateSet x = silent_closure(des, des.initial());
    for (std::size_t i = 0; i < length && !x.empty(); ++i) x = observe(des, x, mu[i]);
    return x;
}

/// States reachable by runs over mu that never touch a secret state.
StateSet clean_estimate(const Des& des, const Word& mu) {
    const StateSet& secret = des.secret();
    auto clean_closure = [&](StateSet s) {
        s -= secret;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& t : des.transitions())
                if (!des.events().observable(t.event) && s.contains(t.source) && !secret.contains(t.target) &&
                    s.add(t.target))
                    grew = true;
        }
        return s;
    };
    StateSet c = clean_closure(des.initial());
    for (EventId a : mu) {
        StateSet next(des.state_count());
        for (const auto& t : des.transitions())
            if (t.event == a && c.contains(t.source)) next.insert(t.target);
        c = clean_closure(std::move(next));
    }
    return c;
}

/// Key under which two observations have the same violation status for
/// every common extension.
std::vector<std::uint64_t> extension_key(const Des& des, KBound k, const Word& mu) {
    std::vector<std::uint64_t> key;
    auto push_set = [&](const StateSet& s) {
        key.push_back(s.size());
        s.for_each([&](StateId q) { key.push_back(q); });
    };
    if (k.is_infinite()) {
        key.push_back(0);
        push_set(estimate_after(des, mu, mu.size()));
        push_set(clean_estimate(des, mu));
        return key;
    }
    const std::uint64_t m = mu.size();
    if (m <= k.value()) {
        key.push_back(1);
        key.insert(key.end(), mu.begin(), mu.end());
        return key;
    }
    const std::uint64_t anchor = m - k.value() - 1;
    key.push_back(2);
    push_set(estimate_after(des, mu, anchor));
    key.insert(key.end(), mu.begin() + static_cast<std::ptrdiff_t>(anchor), mu.end());
    return key;
}

}  // namespace

std::optional<WeakViolation> weak_violation_search(const Des& des, KBound k, const OracleBounds& bounds) {
    if (des.secret().intersects(des.nonsecret()))
        throw ModelError(ErrorKind::overlapping_secret, "secret and nonsecret states overlap");
    const auto obs = observable_ids(des);
    const std::uint64_t limit = effective_nu(k, bounds.nu_max);

    std::set<StateSet> seen;
    std::deque<std::pair<StateSet, Word>> queue;
    queue.push_back({silent_closure(des, des.initial()), {}});
    seen.insert(queue.front().first);
    while (!queue.empty()) {
        auto [x, mu] = std::move(queue.front());
        queue.pop_front();
        const StateSet z = x & des.nonsecret();
        std::optional<WeakViolation> found;
        (x & des.secret()).for_each([&](StateId s) {
            if (found) return;
            if (auto nu = continuation_violation(des, obs, s, z, limit)) found = WeakViolation{mu, s, *nu};
        });
        if (found) return found;
        if (mu.size() >= bounds.mu_max) continue;
        for (EventId a : obs) {
            StateSet next = observe(des, x, a);
            if (next.empty() || !seen.insert(next).second) continue;
            Word longer = mu;
            longer.push_back(a);
            queue.push_back({std::move(next), std::move(longer)});
        }
    }
    return std::nullopt;
}

bool validate_weak_witness(const Des& des, KBound k, const Witness& witness) {
    if (!k.admits(witness.nu.size())) return false;
    for (const Word* w : {&witness.mu, &witness.nu})
        for (EventId e : *w)
            if (e >= des.events().size() || !des.events().observable(e)) return false;
    if (witness.secret_state >= des.state_count() || !des.secret().contains(witness.secret_state)) return false;

    StateSet x = silent_closure(des, des.initial());
    for (EventId a : witness.mu) x = observe(des, x, a);
    if (!x.contains(witness.secret_state)) return false;

    StateSet from_secret = silent_closure(des, StateSet(des.state_count(), {witness.secret_state}));
    StateSet from_nonsecret = silent_closure(des, x & des.nonsecret());
    for (EventId a : witness.nu) {
        from_secret = observe(des, from_secret, a);
        from_nonsecret = observe(des, from_nonsecret, a);
    }
    return !from_secret.empty() && from_nonsecret.empty();
}

bool is_strong_violation(const Des& des, KBound k, const Word& s, std::uint64_t w_cap_factor) {
    require_strong_input(des);
    StateId q = des.initial().first();
    for (EventId e : s) {
        auto t = successor(des, q, e);
        if (!t) return false;
        q = *t;
    }
    return observation_violates(des, k, observation_of(des, s), w_cap_factor);
}

std::optional<Word> strong_violation_search(const Des& des, KBound k, const OracleBounds& bounds) {
    require_strong_input(des);
    const auto obs = observable_ids(des);
    std::set<std::vector<std::uint64_t>> seen;
    std::deque<Word> queue{Word{}};
    seen.insert(extension_key(des, k, {}));
    while (!queue.empty()) {
        Word mu = std::move(queue.front());
        queue.pop_front();
        if (observation_violates(des, k, mu, bounds.w_cap_factor)) return shortest_string_for(des, mu);
        if (mu.size() >= bounds.mu_max) continue;
        for (EventId a : obs) {
            Word longer = mu;
            longer.push_back(a);
            if (estimate_after(des, longer, longer.size()).empty()) continue;
            if (!seen.insert(extension_key(des, k, longer)).second) continue;
            queue.push_back(std::move(longer));
        }
    }
    return std::nullopt;
}

Des random_des(const GeneratorParams& p) {
    if (p.state_count == 0) throw ModelError(ErrorKind::invalid_parameter, "state_count must be positive");
    if (p.observable_event_count + p.unobservable_event_count == 0)
        throw ModelError(ErrorKind::invalid_parameter, "at least one event is required");
    if (p.transition_density < 0) throw ModelError(ErrorKind::invalid_parameter, "transition_density must be nonnegative");
    for (double f : {p.secret_fraction, p.neutral_fraction})
        if (f < 0 || f > 1) throw ModelError(ErrorKind::invalid_parameter, "fractions must lie in [0,1]");
    if (p.deterministic && p.transition_density > 1)
        throw ModelError(ErrorKind::invalid_parameter, "a deterministic system allows density at most 1");

    std::mt19937_64 rng(p.rng_seed);
    // Raw engine output only: std distributions differ between libraries.
    auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto uniform_index = [&](std::size_t n) { return static_cast<StateId>(rng() % n); };

    std::vector<Event> events;
    for (std::size_t i = 0; i < p.observable_event_count; ++i)
        events.push_back({i < 20 ? std::string(1, static_cast<char>('a' + i)) : "o" + std::to_string(i), true});
    for (std::size_t i = 0; i < p.unobservable_event_count; ++i) events.push_back({"u" + std::to_string(i + 1), false});

    const std::size_t n = p.state_count;
    std::vector<Transition> transitions;
    for (StateId q = 0; q < n; ++q) {
        for (EventId e = 0; e < events.size(); ++e) {
            if (p.deterministic) {
                if (uniform01() < p.transition_density) transitions.push_back({q, e, uniform_index(n)});
            } else {
                const double per_target = p.transition_density / static_cast<double>(n);
                for (StateId t = 0; t < n; ++t)
                    if (uniform01() < per_target) transitions.push_back({q, e, t});
            }
        }
    }
    StateSet secret(n), nonsecret(n);
    for (StateId q = 0; q < n; ++q) {
        if (uniform01() < p.secret_fraction)
            secret.insert(q);
        else if (p.neutral_fraction > 0 && uniform01() < p.neutral_fraction)
            continue;
        else
            nonsecret.insert(q);
    }
    return Des(n, EventTable(std::move(events)), std::move(transitions), StateSet(n, {0}), std::move(secret),
               std::move(nonsecret));
}

}  // namespace kstep::oracle
