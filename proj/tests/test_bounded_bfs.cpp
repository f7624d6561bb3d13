#include <doctest.h>

#include <deque>
#include <random>

#include "kstep/bounded_bfs.hpp"
#include "kstep/error.hpp"

using namespace kstep;

namespace {

using Graph = std::vector<std::vector<VertexId>>;

BfsResult run(const Graph& g, std::vector<VertexId> seeds, KBound k) {
    return bounded_bfs(seeds, k, [&](VertexId u, auto&& visit) {
        for (std::size_t i = 0; i < g[u].size(); ++i) visit(g[u][i], static_cast<std::uint32_t>(i));
    });
}

/// Textbook BFS with a distance per vertex.
std::vector<long> distances(const Graph& g, const std::vector<VertexId>& seeds) {
    std::vector<long> dist(g.size(), -1);
    std::deque<VertexId> q;
    for (VertexId s : seeds)
        if (dist[s] < 0) {
            dist[s] = 0;
            q.push_back(s);
        }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : g[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

}  // namespace

TEST_CASE("k bounds") {
    CHECK(KBound::parse("inf").is_infinite());
    CHECK(KBound::parse("17").value() == 17);
    CHECK(KBound::parse("9223372036854775807").value() == KBound::kMaxFinite);
    CHECK_THROWS_AS(KBound::parse("9223372036854775808"), ModelError);
    CHECK_THROWS_AS(KBound::parse("-1"), ModelError);
    CHECK_THROWS_AS(KBound::parse("1x"), ModelError);
    CHECK_THROWS_AS(KBound::parse(""), ModelError);
    CHECK(KBound::finite(5).clamped(5).is_infinite());
    CHECK(KBound::finite(4).clamped(5) == KBound::finite(4));
    CHECK(KBound::finite(3).to_string() == "3");
    CHECK(KBound::infinite().admits(~std::uint64_t{0}));
    CHECK_FALSE(KBound::finite(2).admits(3));
}

TEST_CASE("path with k = 1") {
    const Graph g{{1}, {2}, {}};
    const auto r = run(g, {0}, KBound::finite(1));
    CHECK(r.order == std::vector<VertexId>{0, 1});
    CHECK_FALSE(r.is_marked(2));
    CHECK(r.depth == 1);
    CHECK(r.root(1) == 0);
    CHECK(r.path_labels(1) == std::vector<std::uint32_t>{0});
}

TEST_CASE("k = 0 marks only the seeds") {
    const Graph g{{1, 2}, {2}, {0}};
    const auto r = run(g, {1, 1}, KBound::finite(0));
    CHECK(r.order == std::vector<VertexId>{1});
    CHECK(r.depth == 0);
}

TEST_CASE("marked set matches distance-array BFS on random digraphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const std::size_t avg = rng() % 4;
        Graph g(n);
        for (auto& out : g)
            for (std::size_t j = 0, deg = rng() % (2 * avg + 1); j < deg; ++j)
                out.push_back(static_cast<VertexId>(rng() % n));
        std::vector<VertexId> seeds;
        for (std::size_t j = 0, m = 1 + rng() % 3; j < m; ++j) seeds.push_back(static_cast<VertexId>(rng() % n));
        const auto dist = distances(g, seeds);
        const KBound k = trial % 5 == 0 ? KBound::infinite() : KBound::finite(rng() % 8);
        const auto r = run(g, seeds, k);
        long deepest = 0;
        for (VertexId v = 0; v < n; ++v) {
            const bool expect = dist[v] >= 0 && k.admits(static_cast<std::uint64_t>(dist[v]));
            CHECK(r.is_marked(v) == expect);
            if (!expect) continue;
            deepest = std::max(deepest, dist[v]);
            // Parent links give a shortest path back to a seed.
            std::size_t hops = 0;
            for (VertexId at = v; r.parent[at].vertex != BfsParent::kNone; at = r.parent[at].vertex) ++hops;
            CHECK(hops == static_cast<std::size_t>(dist[v]));
            CHECK(dist[r.root(v)] == 0);
        }
        CHECK(r.depth == static_cast<std::uint64_t>(deepest));
    }
}
