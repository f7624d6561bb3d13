#include "kstep/observer.hpp"

#include <unordered_map>
#include <utility>

#include "kstep/automata.hpp"

namespace kstep {

ObserverAutomaton observer_of_projection(const Des& projected, std::vector<EventId> alphabet) {
    ObserverAutomaton obs;
    obs.alphabet = std::move(alphabet);
    const std::size_t width = obs.alphabet.size();

    std::unordered_map<StateSet, std::uint32_t, StateSetHash> index;
    obs.states.push_back(projected.initial());
    index.emplace(projected.initial(), 0);
    for (std::uint32_t i = 0; i < obs.states.size(); ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            StateSet target = projected.step(obs.states[i], static_cast<EventId>(j));
            if (target.empty()) {
                obs.next.push_back(ObserverAutomaton::kSink);
                continue;
            }
            auto [it, inserted] = index.emplace(std::move(target), static_cast<std::uint32_t>(obs.states.size()));
            if (inserted) obs.states.push_back(it->first);
            obs.next.push_back(it->second);
        }
    }
    return obs;
}

ObserverAutomaton observer(const Des& des) {
    return observer_of_projection(project(des), des.events().observable_events());
}

StateSet full_observer_step(const Des& des, const StateSet& estimate, EventId event) {
    if (estimate.empty()) return estimate;
    return unobservable_reach(des, des.step(unobservable_reach(des, estimate), event));
}

std::vector<ProductState> product_step(const Des& projected, const ProductState& state, EventId event) {
    std::vector<ProductState> out;
    auto targets = projected.successors(state.nfa_state, event);
    if (targets.empty()) return out;
    StateSet next = full_observer_step(projected, state.set_state, event);
    out.reserve(targets.size());
    for (StateId q : targets) out.push_back({q, next});
    return out;
}

}  // namespace kstep
