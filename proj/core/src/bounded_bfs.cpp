#include "kstep/bounded_bfs.hpp"

#include <algorithm>
#include <charconv>

#include "kstep/error.hpp"

namespace kstep {

KBound KBound::finite(std::uint64_t k) {
    if (k > kMaxFinite) throw ModelError(ErrorKind::invalid_parameter, "k exceeds 2^63-1");
    return KBound(k);
}

KBound KBound::parse(const std::string& text) {
    if (text == "inf") return infinite();
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw ModelError(ErrorKind::invalid_parameter, "k must be a nonnegative integer or 'inf', got '" + text + "'");
    return finite(v);
}

std::vector<std::uint32_t> BfsResult::path_labels(VertexId v) const {
    std::vector<std::uint32_t> labels;
    while (parent[v].vertex != BfsParent::kNone) {
        labels.push_back(parent[v].label);
        v = parent[v].vertex;
    }
    std::reverse(labels.begin(), labels.end());
    return labels;
}

VertexId BfsResult::root(VertexId v) const {
    while (parent[v].vertex != BfsParent::kNone) v = parent[v].vertex;
    return v;
}

}  // namespace kstep
