#include "kstep/weak.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "kstep/automata.hpp"
#include "kstep/error.hpp"

namespace kstep {
namespace {

constexpr std::uint32_t kSinkEstimate = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kUnknown = kSinkEstimate - 1;

/// Shortlex-least observation to every observer state, by BFS in column order.
std::vector<Word> shortest_observations(const ObserverAutomaton& obs) {
    std::vector<Word> words(obs.size());
    std::vector<bool> seen(obs.size(), false);
    std::deque<std::uint32_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const auto i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < obs.alphabet.size(); ++j) {
            const auto t = obs.successor(i, j);
            if (t == ObserverAutomaton::kSink || seen[t]) continue;
            seen[t] = true;
            words[t] = words[i];
            words[t].push_back(obs.alphabet[j]);
            queue.push_back(t);
        }
    }
    return words;
}

/// Lazily materialized part of P(G) × H.
class LazyProduct {
public:
    LazyProduct(const Des& projected, std::size_t width) : pg_(projected), width_(width) {}

    std::uint32_t intern_estimate(const StateSet& z) {
        if (z.empty()) return kSinkEstimate;
        auto [it, inserted] = estimate_index_.emplace(z, static_cast<std::uint32_t>(estimates_.size()));
        if (inserted) {
            estimates_.push_back(z);
            estimate_next_.resize(estimate_next_.size() + width_, kUnknown);
        }
        return it->second;
    }

    VertexId intern_vertex(StateId q, std::uint32_t estimate) {
        const std::uint64_t key = (std::uint64_t{estimate} << 32) | q;
        auto [it, inserted] = vertex_index_.emplace(key, static_cast<VertexId>(vertices_.size()));
        if (inserted) vertices_.emplace_back(q, estimate);
        return it->second;
    }

    std::uint32_t estimate_step(std::uint32_t estimate, std::size_t column) {
        if (estimate == kSinkEstimate) return kSinkEstimate;
        auto& slot = estimate_next_[estimate * width_ + column];
        if (slot == kUnknown) {
            StateSet next = pg_.step(estimates_[estimate], static_cast<EventId>(column));
            const auto id = intern_estimate(next);
            // intern_estimate may have reallocated estimate_next_.
            estimate_next_[estimate * width_ + column] = id;
            return id;
        }
        return slot;
    }

    template <class Visit>
    void expand(VertexId u, Visit&& visit) {
        const auto [q, estimate] = vertices_[u];
        for (std::size_t j = 0; j < width_; ++j) {
            auto targets = pg_.successors(q, static_cast<EventId>(j));
            if (targets.empty()) continue;
            const auto next = estimate_step(estimate, j);
            for (StateId t : targets) visit(intern_vertex(t, next), static_cast<std::uint32_t>(j));
        }
    }

    bool is_sink(VertexId v) const { return vertices_[v].second == kSinkEstimate; }
    StateId nfa_state(VertexId v) const { return vertices_[v].first; }
    std::size_t estimate_count() const { return estimates_.size(); }
    ProductState state(VertexId v) const {
        const auto [q, e] = vertices_[v];
        return {q, e == kSinkEstimate ? StateSet(pg_.state_count()) : estimates_[e]};
    }

private:
    const Des& pg_;
    std::size_t width_;
    std::vector<StateSet> estimates_;
    std::unordered_map<StateSet, std::uint32_t, StateSetHash> estimate_index_;
    std::vector<std::uint32_t> estimate_next_;
    std::vector<std::pair<StateId, std::uint32_t>> vertices_;
    std::unordered_map<std::uint64_t, VertexId> vertex_index_;
};

}  // namespace

std::uint64_t product_state_bound(std::size_t n) {
    if (n >= 57) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(n) << n;
}

std::vector<Seed> compute_seeds(const ObserverAutomaton& obs, const StateSet& secret, const StateSet& nonsecret) {
    const auto words = shortest_observations(obs);
    std::vector<Seed> seeds;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const StateSet& x = obs.states[i];
        const StateSet z = x & nonsecret;
        (x & secret).for_each([&](StateId s) { seeds.push_back({s, z, x, words[i]}); });
    }
    return seeds;
}

Verdict verify_weak(const Des& des, KBound k, ProductTrace* trace) {
    if (des.secret().intersects(des.nonsecret()))
        throw ModelError(ErrorKind::overlapping_secret, "secret and nonsecret states overlap");
    const std::uint64_t bound = product_state_bound(des.state_count());
    k = k.clamped(bound);

    const Des pg = project(des);
    const auto& alphabet = des.events().observable_events();
    const ObserverAutomaton obs = observer_of_projection(pg, alphabet);

    Verdict verdict;
    verdict.stats.observer_states = obs.size();
    const auto seeds = compute_seeds(obs, des.secret(), des.nonsecret());

    for (const auto& seed : seeds) {
        if (seed.nonsecret_estimate.empty()) {
            verdict.opaque = false;
            verdict.witness = Witness{seed.mu, seed.secret_state, {}, seed.origin_estimate};
            return verdict;
        }
    }
    if (seeds.empty()) return verdict;

    LazyProduct product(pg, alphabet.size());
    std::vector<VertexId> seed_vertices;
    std::unordered_map<VertexId, std::size_t> seed_of;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const auto v = product.intern_vertex(seeds[i].secret_state, product.intern_estimate(seeds[i].nonsecret_estimate));
        // Seeds come in shortlex order of mu, so the first one wins.
        if (seed_of.emplace(v, i).second) seed_vertices.push_back(v);
    }

    auto expand = [&](VertexId u, auto&& visit) {
        if (trace) {
            product.expand(u, [&](VertexId v, std::uint32_t label) {
                trace->edges.push_back({u, alphabet[label], v});
                visit(v, label);
            });
        } else {
            product.expand(u, visit);
        }
    };
    const BfsResult bfs = bounded_bfs(seed_vertices, k, expand);

    verdict.stats.h_states = product.estimate_count();
    verdict.stats.product_states_explored = bfs.order.size();
    verdict.stats.bfs_depth_reached = bfs.depth;
    if (verdict.stats.product_states_explored > bound)
        throw std::logic_error("explored " + std::to_string(verdict.stats.product_states_explored) +
                               " product states, above n*2^n = " + std::to_string(bound));

    if (trace) {
        trace->seeds = seed_vertices;
        trace->states.clear();
        for (VertexId v = 0; v < bfs.order.size(); ++v) trace->states.push_back(product.state(v));
    }

    for (VertexId v : bfs.order) {
        if (!product.is_sink(v)) continue;
        const Seed& seed = seeds[seed_of.at(bfs.root(v))];
        Word nu;
        for (auto label : bfs.path_labels(v)) nu.push_back(alphabet[label]);
        verdict.opaque = false;
        verdict.witness = Witness{seed.mu, seed.secret_state, std::move(nu), seed.origin_estimate};
        break;
    }
    return verdict;
}

Verdict verify_current_state_opacity(const Des& des) {
    if (des.secret().intersects(des.nonsecret()))
        throw ModelError(ErrorKind::overlapping_secret, "secret and nonsecret states overlap");
    const ObserverAutomaton obs = observer(des);
    const auto words = shortest_observations(obs);
    Verdict verdict;
    verdict.stats.observer_states = obs.size();
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const StateSet& x = obs.states[i];
        if (x.intersects(des.secret()) && !x.intersects(des.nonsecret())) {
            verdict.opaque = false;
            verdict.witness = Witness{words[i], (x & des.secret()).first(), {}, x};
            break;
        }
    }
    return verdict;
}

}  // namespace kstep
