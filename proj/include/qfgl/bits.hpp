// Flat dynamic bitset used for adjacency rows and membership tables.
#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace qfgl {

struct DynBitset {
    std::size_t nbits = 0;
    std::vector<std::uint64_t> words;

    DynBitset() = default;
    explicit DynBitset(std::size_t n) : nbits(n), words((n + 63) / 64, 0) {}

    bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words.begin(), words.end(), 0); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words)
            if (w != 0) return true;
        return false;
    }

    bool all() const { return count() == nbits; }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (words[i] & o.words[i]) return true;
        return false;
    }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
        return *this;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] &= o.words[i];
        return *this;
    }

    template <class Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            std::uint64_t w = words[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const DynBitset&, const DynBitset&) = default;
};

// Word-span helpers for adjacency rows stored in one flat vector.
inline bool row_test(const std::uint64_t* row, std::size_t i) {
    return (row[i >> 6] >> (i & 63)) & 1u;
}
inline void row_set(std::uint64_t* row, std::size_t i) {
    row[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline bool rows_intersect(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}
inline std::size_t row_popcount(const std::uint64_t* row, std::size_t words) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(row[i]));
    return c;
}

}  // namespace qfgl
