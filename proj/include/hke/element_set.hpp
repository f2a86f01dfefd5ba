#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hke {

/// Subset of a dense ground universe {0, ..., kCapacity-1}, stored as a
/// two-word bitmask. Ordering is numeric on the mask (high word first).
class ElementSet {
public:
    static constexpr std::size_t kCapacity = 128;

    constexpr ElementSet() = default;

    static constexpr ElementSet single(std::size_t i) {
        ElementSet s;
        s.set(i);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr ElementSet prefix(std::size_t n) {
        ElementSet s;
        if (n >= 128) {
            s.w_ = {~0ULL, ~0ULL};
        } else if (n >= 64) {
            s.w_ = {~0ULL, n == 64 ? 0ULL : (~0ULL >> (128 - n))};
        } else {
            s.w_ = {n == 0 ? 0ULL : (~0ULL >> (64 - n)), 0ULL};
        }
        return s;
    }

    static ElementSet of(std::initializer_list<std::size_t> idx) {
        ElementSet s;
        for (auto i : idx) s.set(i);
        return s;
    }

    constexpr bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    constexpr void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    constexpr void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }

    constexpr std::size_t count() const {
        return static_cast<std::size_t>(std::popcount(w_[0]) + std::popcount(w_[1]));
    }
    constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }

    /// Index of the lowest member; kCapacity when empty.
    constexpr std::size_t lowest() const {
        if (w_[0]) return static_cast<std::size_t>(std::countr_zero(w_[0]));
        if (w_[1]) return 64 + static_cast<std::size_t>(std::countr_zero(w_[1]));
        return kCapacity;
    }

    /// One past the highest member; 0 when empty.
    constexpr std::size_t extent() const {
        if (w_[1]) return 128 - static_cast<std::size_t>(std::countl_zero(w_[1]));
        if (w_[0]) return 64 - static_cast<std::size_t>(std::countl_zero(w_[0]));
        return 0;
    }

    constexpr bool subset_of(const ElementSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    constexpr bool intersects(const ElementSet& o) const {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
    }

    constexpr ElementSet operator|(const ElementSet& o) const { return {w_[0] | o.w_[0], w_[1] | o.w_[1]}; }
    constexpr ElementSet operator&(const ElementSet& o) const { return {w_[0] & o.w_[0], w_[1] & o.w_[1]}; }
    constexpr ElementSet operator^(const ElementSet& o) const { return {w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]}; }
    /// Set difference.
    constexpr ElementSet operator-(const ElementSet& o) const { return {w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]}; }

    constexpr ElementSet& operator|=(const ElementSet& o) { return *this = *this | o; }
    constexpr ElementSet& operator&=(const ElementSet& o) { return *this = *this & o; }
    constexpr ElementSet& operator-=(const ElementSet& o) { return *this = *this - o; }

    constexpr bool operator==(const ElementSet&) const = default;
    constexpr std::strong_ordering operator<=>(const ElementSet& o) const {
        if (auto c = w_[1] <=> o.w_[1]; c != 0) return c;
        return w_[0] <=> o.w_[0];
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    template <class Fn>
    constexpr void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < 2; ++w) {
            for (std::uint64_t bits = w_[w]; bits != 0; bits &= bits - 1) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            }
        }
    }

    constexpr std::uint64_t word(std::size_t i) const { return w_[i]; }

private:
    constexpr ElementSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
    std::array<std::uint64_t, 2> w_{0, 0};
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept {
        std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
        h ^= s.word(1) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

} // namespace hke
