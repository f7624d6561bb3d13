#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace kstep {

using StateId = std::uint32_t;
using EventId = std::uint32_t;

/// Subset of {0, ..., universe-1} stored as a dense bit vector.
///
/// Two sets compare equal iff they have the same universe and the same
/// members, so a StateSet can key hash maps during subset construction.
/// The empty set doubles as the sink state of the full observer.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    StateSet(std::size_t universe, std::initializer_list<StateId> members)
        : StateSet(universe) {
        for (StateId s : members) insert(s);
    }

    static StateSet full(std::size_t universe) {
        StateSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<StateId>(i));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(StateId s) const {
        return s < universe_ && ((words_[s >> 6] >> (s & 63)) & 1u);
    }
    void insert(StateId s) { words_[s >> 6] |= (std::uint64_t{1} << (s & 63)); }
    void erase(StateId s) { words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }

    /// Inserts s and reports whether it was new.
    bool add(StateId s) {
        auto& w = words_[s >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (s & 63);
        if (w & bit) return false;
        w |= bit;
        return true;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    StateSet& operator|=(const StateSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    StateSet& operator&=(const StateSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    StateSet& operator-=(const StateSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
    friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

    bool intersects(const StateSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const StateSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int bit = std::countr_zero(w);
                f(static_cast<StateId>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<StateId> members() const {
        std::vector<StateId> out;
        for_each([&](StateId s) { out.push_back(s); });
        return out;
    }

    /// Smallest member; undefined on the empty set.
    StateId first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<StateId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return static_cast<StateId>(universe_);
    }

    std::size_t hash() const {
        std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;
    friend auto operator<=>(const StateSet&, const StateSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace kstep
