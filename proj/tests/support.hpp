#pragma once

// Shared helpers for the unit tests. The simulation helpers scan the raw
// transition list and deliberately avoid the library's own constructions.

#include <deque>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kstep/des.hpp"
#include "kstep/des_io.hpp"

#ifndef KSTEP_FIXTURE_DIR
#error "KSTEP_FIXTURE_DIR must be defined"
#endif

namespace kstep::test {

inline std::string fixture_path(const std::string& name) { return std::string(KSTEP_FIXTURE_DIR) + "/" + name + ".des"; }

inline Des fixture(const std::string& name, MissingNonsecret missing = MissingNonsecret::empty) {
    return load_des(fixture_path(name), missing);
}

inline StateId st(const Des& des, const std::string& name) {
    auto s = des.find_state(name);
    if (!s) throw std::runtime_error("no state " + name);
    return *s;
}

inline EventId ev(const Des& des, const std::string& name) {
    auto e = des.events().find(name);
    if (!e) throw std::runtime_error("no event " + name);
    return *e;
}

inline StateSet states(const Des& des, std::initializer_list<std::string> names) {
    StateSet s(des.state_count());
    for (const auto& n : names) s.insert(st(des, n));
    return s;
}

/// Space-separated event names.
inline Word word(const Des& des, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.push_back(ev(des, tok));
    return w;
}

inline std::set<Transition> transition_set(const Des& des) {
    return {des.transitions().begin(), des.transitions().end()};
}

/// Transition given by state and event names.
inline Transition tr(const Des& des, const std::string& p, const std::string& e, const std::string& q) {
    return {st(des, p), ev(des, e), st(des, q)};
}

inline StateSet sim_closure(const Des& des, StateSet s) {
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& t : des.transitions())
            if (!des.events().observable(t.event) && s.contains(t.source) && !s.contains(t.target)) {
                s.insert(t.target);
                grew = true;
            }
    }
    return s;
}

inline StateSet sim_event(const Des& des, const StateSet& s, EventId e) {
    StateSet out(des.state_count());
    for (const auto& t : des.transitions())
        if (t.event == e && s.contains(t.source)) out.insert(t.target);
    return out;
}

/// δ(S, P⁻¹(mu)) by direct simulation.
inline StateSet sim_observe(const Des& des, StateSet s, const Word& mu) {
    s = sim_closure(des, std::move(s));
    for (EventId a : mu) s = sim_closure(des, sim_event(des, s, a));
    return s;
}

/// All words over `alphabet` of length exactly `len`, shortlex.
inline void for_each_word(const std::vector<EventId>& alphabet, std::size_t len, const std::function<void(const Word&)>& f) {
    Word w(len, 0);
    std::vector<std::size_t> idx(len, 0);
    while (true) {
        for (std::size_t i = 0; i < len; ++i) w[i] = alphabet[idx[i]];
        f(w);
        std::size_t i = len;
        while (i > 0 && ++idx[i - 1] == alphabet.size()) idx[--i] = 0;
        if (i == 0) return;
    }
}

/// Target of a deterministic run, or -1 if undefined.
inline long run_det(const Des& des, const Word& w) {
    if (des.initial().empty()) return -1;
    StateId q = des.initial().first();
    for (EventId e : w) {
        auto succ = des.successors(q, e);
        if (succ.empty()) return -1;
        q = succ.front();
    }
    return q;
}

}  // namespace kstep::test
