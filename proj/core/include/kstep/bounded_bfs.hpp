#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kstep {

/// k ∈ ℕ ∪ {∞}.
class KBound {
public:
    static constexpr std::uint64_t kMaxFinite = std::numeric_limits<std::int64_t>::max();

    static KBound finite(std::uint64_t k);
    static KBound infinite() { return KBound(); }

    bool is_infinite() const { return !value_; }
    std::uint64_t value() const { return *value_; }

    /// True iff a distance d is within the bound.
    bool admits(std::uint64_t d) const { return !value_ || d <= *value_; }

    /// Replaces finite bounds of at least `limit` by ∞.
    KBound clamped(std::uint64_t limit) const {
        return value_ && *value_ >= limit ? infinite() : *this;
    }

    /// Decimal or "inf".
    static KBound parse(const std::string& text);
    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend bool operator==(const KBound&, const KBound&) = default;

private:
    KBound() = default;
    explicit KBound(std::uint64_t v) : value_(v) {}
    std::optional<std::uint64_t> value_;
};

using VertexId = std::uint32_t;

struct BfsParent {
    static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
    VertexId vertex = kNone;
    std::uint32_t label = 0;
};

/// Outcome of bounded_bfs over dense vertex ids.
struct BfsResult {
    /// Marked vertices in the order they were marked.
    std::vector<VertexId> order;
    /// Indexed by vertex id; parent.vertex == kNone for seeds and unmarked vertices.
    std::vector<BfsParent> parent;
    std::vector<bool> marked;
    /// Largest distance of a marked vertex from the seeds.
    std::uint64_t depth = 0;

    bool is_marked(VertexId v) const { return v < marked.size() && marked[v]; }

    /// Labels along the recorded shortest path from a seed to v.
    std::vector<std::uint32_t> path_labels(VertexId v) const;
    /// The seed the recorded path to v starts from.
    VertexId root(VertexId v) const;
};

/// Marks every vertex within distance k of the seeds.
///
/// The queue carries a single level counter between vertex entries instead
/// of a per-vertex distance: the counter is enqueued before the seeds, and
/// each time it reaches the head it is either final (== k) or re-enqueued
/// incremented behind the vertices of the next level. Vertices are marked
/// when enqueued. Expansion stops when the counter reaches k or no vertex
/// is left, so an infinite k explores the whole reachable part.
///
/// `expand(u, visit)` must call `visit(v, label)` for each successor v of u.
/// Vertex ids may be created by `expand` on the fly; they only need to be
/// dense enough to index a vector.
template <class Expand>
BfsResult bounded_bfs(std::span<const VertexId> seeds, KBound k, Expand&& expand) {
    BfsResult r;
    auto mark = [&](VertexId v, BfsParent p) {
        if (v >= r.marked.size()) {
            const std::size_t grow = std::max<std::size_t>(v + 1, r.marked.size() * 2);
            r.marked.resize(grow, false);
            r.parent.resize(grow);
        }
        if (r.marked[v]) return false;
        r.marked[v] = true;
        r.parent[v] = p;
        r.order.push_back(v);
        return true;
    };

    struct Entry {
        bool is_level;
        std::uint64_t value;
    };
    std::deque<Entry> queue;
    queue.push_back({true, 0});
    for (VertexId s : seeds)
        if (mark(s, {})) queue.push_back({false, s});

    std::uint64_t level = 0;
    while (!queue.empty()) {
        const Entry u = queue.front();
        queue.pop_front();
        if (u.is_level) {
            level = u.value;
            if (!k.admits(level + 1) || queue.empty()) break;
            queue.push_back({true, level + 1});
            continue;
        }
        const auto from = static_cast<VertexId>(u.value);
        expand(from, [&](VertexId v, std::uint32_t label) {
            if (mark(v, {from, label})) {
                queue.push_back({false, v});
                r.depth = level + 1;
            }
        });
    }
    return r;
}

}  // namespace kstep
