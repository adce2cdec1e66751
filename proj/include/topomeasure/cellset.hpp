#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace topomeasure {

// Fixed-width set of cell indices. All spaces are capped at kMaxCells cells.
inline constexpr std::size_t kMaxCells = 128;

class CellSet {
public:
    static constexpr std::size_t kWords = kMaxCells / 64;

    constexpr CellSet() = default;

    static CellSet single(std::size_t i) {
        CellSet s;
        s.set(i);
        return s;
    }

    static CellSet first_n(std::size_t n) {
        CellSet s;
        for (std::size_t w = 0; w < kWords; ++w) {
            if (n >= 64 * (w + 1)) s.words_[w] = ~std::uint64_t{0};
            else if (n > 64 * w) s.words_[w] = (std::uint64_t{1} << (n - 64 * w)) - 1;
        }
        return s;
    }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Index of the least member, or kMaxCells when empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w]) return 64 * w + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return kMaxCells;
    }

    bool subset_of(const CellSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    bool intersects(const CellSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    CellSet& operator|=(const CellSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    CellSet& operator&=(const CellSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    CellSet& operator-=(const CellSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
    friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
    friend CellSet operator-(CellSet a, const CellSet& b) { return a -= b; }

    friend bool operator==(const CellSet&, const CellSet&) = default;

    // Canonical order: lexicographic on the sorted index lists.
    friend bool operator<(const CellSet& a, const CellSet& b) {
        for (std::size_t w = 0; w < kWords; ++w) {
            if (a.words_[w] == b.words_[w]) continue;
            std::uint64_t diff = a.words_[w] ^ b.words_[w];
            std::size_t d = 64 * w + static_cast<std::size_t>(std::countr_zero(diff));
            const CellSet& holder = a.test(d) ? a : b;
            const CellSet& other = a.test(d) ? b : a;
            // The set holding d comes first unless the other one ends before d.
            bool other_continues = !(other - first_n(d + 1)).empty();
            bool holder_first = other_continues;
            return (&holder == &a) == holder_first;
        }
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(64 * w + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (auto w : words_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

    std::uint64_t word(std::size_t w) const { return words_[w]; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct CellSetHash {
    std::size_t operator()(const CellSet& s) const { return s.hash(); }
};

}  // namespace topomeasure
