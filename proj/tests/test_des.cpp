#include <doctest.h>

#include <set>

#include "kstep/automata.hpp"
#include "kstep/error.hpp"
#include "kstep/oracle.hpp"
#include "support.hpp"

using namespace kstep;
using namespace kstep::test;

namespace {

Des make(std::size_t n, std::vector<Event> events, std::vector<Transition> ts, StateSet init) {
    return Des(n, EventTable(std::move(events)), std::move(ts), std::move(init), StateSet(n), StateSet(n));
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ModelError& e) {
        return e.kind();
    }
    FAIL("no ModelError thrown");
    return ErrorKind::malformed;
}

/// Bounded enumeration: every word of L(a) up to `len` is in L(b) and vice versa.
bool enumerated_equal(const Des& a, const Des& b, std::size_t len) {
    std::vector<EventId> all;
    for (EventId e = 0; e < a.events().size(); ++e) all.push_back(e);
    // Grow words only while defined in one of the two systems.
    std::vector<Word> frontier{Word{}};
    for (std::size_t l = 0; l < len && !frontier.empty(); ++l) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (EventId e : all) {
                Word x = w;
                x.push_back(e);
                const bool in_a = run_det(a, x) >= 0, in_b = run_det(b, x) >= 0;
                if (in_a != in_b) return false;
                if (in_a) next.push_back(std::move(x));
            }
        frontier = std::move(next);
    }
    return true;
}

}  // namespace

TEST_CASE("state sets compare by content") {
    StateSet a(70, {1, 65}), b(70);
    b.insert(65);
    b.insert(1);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a.size() == 2);
    CHECK(a.members() == std::vector<StateId>{1, 65});
    CHECK(a.first() == 1);
    CHECK_FALSE(b.add(1));
    CHECK(b.add(2));
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK((b - a) == StateSet(70, {2}));
    CHECK((a & StateSet(70, {65, 3})) == StateSet(70, {65}));
    CHECK(StateSet(70).empty());
    CHECK(StateSet::full(70).size() == 70);
    CHECK_FALSE(a.intersects(StateSet(70, {0, 2})));
}

TEST_CASE("event table and construction errors") {
    CHECK(kind_of([] { EventTable(std::vector<Event>{}); }) == ErrorKind::no_events);
    CHECK(kind_of([] { EventTable({{"a", true}, {"a", false}}); }) == ErrorKind::duplicate_event);
    CHECK(kind_of([] { make(2, {{"a", true}}, {}, StateSet(2)); }) == ErrorKind::empty_initial);
    CHECK(kind_of([] { make(2, {{"a", true}}, {{0, 0, 2}}, StateSet(2, {0})); }) == ErrorKind::index_out_of_range);
    CHECK(kind_of([] { make(2, {{"a", true}}, {{0, 1, 1}}, StateSet(2, {0})); }) == ErrorKind::index_out_of_range);
    CHECK(kind_of([] {
              Des(2, EventTable({{"a", true}}), {}, StateSet(2, {0}), StateSet(2, {1}), StateSet(2, {1}));
          }) == ErrorKind::overlapping_secret);

    EventTable t({{"a", true}, {"u", false}, {"b", true}});
    CHECK(t.observable_events() == std::vector<EventId>{0, 2});
    CHECK(t.unobservable_events() == std::vector<EventId>{1});
    CHECK(t.find("b") == 2u);
    CHECK_FALSE(t.find("c"));
}

TEST_CASE("duplicate transitions collapse, successors are indexed") {
    Des d = make(3, {{"a", true}}, {{0, 0, 2}, {0, 0, 1}, {0, 0, 2}}, StateSet(3, {0}));
    CHECK(d.transitions().size() == 2);
    CHECK(d.transitions()[0] == Transition{0, 0, 2});
    auto succ = d.successors(0, 0);
    CHECK(std::vector<StateId>(succ.begin(), succ.end()) == std::vector<StateId>{1, 2});
    CHECK(d.successors(1, 0).empty());
    CHECK(d.step(StateSet(3, {0, 1}), 0) == StateSet(3, {1, 2}));
    CHECK(d.state_name(2) == "2");
    CHECK(d.neutral() == StateSet::full(3));
}

TEST_CASE("unobservable reach") {
    const Des fig5 = fixture("fig5");
    CHECK(unobservable_reach(fig5, states(fig5, {"2"})) == states(fig5, {"2", "3"}));
    CHECK(unobservable_reach(fig5, StateSet(4)).empty());

    const Des fig1 = fixture("fig1");
    for (StateId q = 0; q < fig1.state_count(); ++q) {
        StateSet s(fig1.state_count(), {q});
        CHECK(unobservable_reach(fig1, s) == s);
    }
}

TEST_CASE("unobservable reach is monotone and idempotent") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        oracle::GeneratorParams p;
        p.state_count = 6;
        p.unobservable_event_count = 2;
        p.transition_density = 0.8;
        p.deterministic = false;
        p.rng_seed = seed;
        const Des d = oracle::random_des(p);
        for (std::uint64_t bits = 0; bits < 64; bits += 5) {
            StateSet s(6), t(6);
            for (StateId q = 0; q < 6; ++q) {
                if (bits >> q & 1) s.insert(q);
                if ((bits | 0x9) >> q & 1) t.insert(q);
            }
            const StateSet us = unobservable_reach(d, s);
            CHECK(us == sim_closure(d, s));
            CHECK(us.is_subset_of(unobservable_reach(d, t)));
            CHECK(unobservable_reach(d, us) == us);
        }
    }
}

TEST_CASE("projection") {
    const Des fig5 = fixture("fig5");
    const Des p = project(fig5);
    REQUIRE(p.events().size() == 1);
    CHECK(p.events().name(0) == "a");
    CHECK(p.step(states(fig5, {"1"}), 0) == states(fig5, {"2", "3"}));
    CHECK(p.step(states(fig5, {"3"}), 0) == states(fig5, {"4"}));
    CHECK(p.initial() == states(fig5, {"1"}));
    CHECK(p.secret() == fig5.secret());

    const Des fig1 = fixture("fig1");
    const Des p1 = project(fig1);
    CHECK(p1.events() == fig1.events());
    CHECK(transition_set(p1) == transition_set(fig1));
    CHECK(p1.initial() == fig1.initial());
}

TEST_CASE("projection unfolds to UR(δ(UR{q}, a))") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        oracle::GeneratorParams p;
        p.state_count = 5;
        p.unobservable_event_count = 1 + seed % 2;
        p.transition_density = 0.9;
        p.deterministic = seed % 3 == 0;
        p.rng_seed = seed;
        const Des d = oracle::random_des(p);
        const Des pd = project(d);
        CHECK(pd.initial() == sim_closure(d, d.initial()));
        for (StateId q = 0; q < d.state_count(); ++q)
            for (std::size_t j = 0; j < d.events().observable_events().size(); ++j) {
                const EventId a = d.events().observable_events()[j];
                const StateSet expect = sim_observe(d, StateSet(5, {q}), Word{a});
                CHECK(pd.step(StateSet(5, {q}), static_cast<EventId>(j)) == expect);
            }
    }
}

TEST_CASE("projection without observable events keeps UR(I)") {
    Des d(3, EventTable({{"u", false}}), {{0, 0, 1}}, StateSet(3, {0}), StateSet(3), StateSet(3));
    const Des p = project(d);
    CHECK(p.initial() == StateSet(3, {0, 1}));
    CHECK(p.transitions().empty());
}

TEST_CASE("accessible part") {
    Des d(8, EventTable({{"a", true}}), {{0, 0, 1}, {1, 0, 2}, {3, 0, 4}, {5, 0, 0}}, StateSet(8, {0}),
          StateSet(8, {2, 7}), StateSet(8, {0, 4}), {"a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7"});
    const auto part = accessible_part(d);
    CHECK(part.des.state_count() == 3);
    CHECK(part.des.state_names() == std::vector<std::string>{"a0", "a1", "a2"});
    CHECK(part.des.secret() == StateSet(3, {2}));
    CHECK(part.des.nonsecret() == StateSet(3, {0}));
    CHECK_FALSE(part.new_index[7]);
    CHECK(part.new_index[2] == 2u);

    const Des fig1 = fixture("fig1");
    const Des acc = accessible(fig1);
    CHECK(acc.state_names() == fig1.state_names());
    CHECK(transition_set(acc) == transition_set(fig1));
}

TEST_CASE("determinism check") {
    CHECK(is_deterministic(fixture("fig5")));
    CHECK_FALSE(is_deterministic(fixture("fig1")));
    CHECK_FALSE(is_deterministic(make(2, {{"a", true}}, {}, StateSet(2, {0, 1}))));
    CHECK_FALSE(is_deterministic(make(3, {{"a", true}}, {{0, 0, 1}, {0, 0, 2}}, StateSet(3, {0}))));
}

TEST_CASE("language equivalence") {
    const Des fig5 = fixture("fig5");
    CHECK(language_equivalent(fig5, fig5));
    std::vector<Transition> fewer(fig5.transitions().begin(), fig5.transitions().end() - 1);
    const Des cut(4, fig5.events(), fewer, fig5.initial(), fig5.secret(), fig5.nonsecret());
    CHECK_FALSE(language_equivalent(fig5, cut));
    CHECK_FALSE(language_equivalent(cut, fig5));

    CHECK(kind_of([&] { language_equivalent(fig5, fixture("fig1")); }) == ErrorKind::nondeterministic);
    const Des other = make(4, {{"b", true}, {"u", false}}, {}, StateSet(4, {0}));
    CHECK(kind_of([&] { language_equivalent(fig5, other); }) == ErrorKind::alphabet_mismatch);
}

TEST_CASE("language equivalence agrees with bounded enumeration") {
    int equal = 0, different = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        oracle::GeneratorParams p;
        p.state_count = 2 + seed % 2;
        p.observable_event_count = 2;
        p.unobservable_event_count = 0;
        p.transition_density = 0.8;
        p.rng_seed = seed;
        const Des a = oracle::random_des(p);
        // Partner: either a random system or a with one transition retargeted.
        Des b = a;
        if (seed % 2 == 0) {
            p.rng_seed = seed + 100000;
            b = oracle::random_des(p);
        } else if (!a.transitions().empty()) {
            auto ts = a.transitions();
            auto& t = ts[seed % ts.size()];
            t.target = static_cast<StateId>((t.target + 1) % a.state_count());
            b = Des(a.state_count(), a.events(), ts, a.initial(), a.secret(), a.nonsecret());
        }
        const bool eq = language_equivalent(a, b);
        CHECK(eq == language_equivalent(b, a));
        CHECK(eq == enumerated_equal(a, b, 2 * a.state_count() * b.state_count()));
        (eq ? equal : different)++;
    }
    CHECK(equal > 20);
    CHECK(different > 20);
}
