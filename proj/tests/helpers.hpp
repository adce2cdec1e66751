#pragma once

#include "topomeasure/extend.hpp"

#include <memory>
#include <string>

namespace tmtest {

using namespace topomeasure;

inline SpacePtr space(const std::string& spec) { return std::make_shared<const FiniteSpace>(build_named(spec)); }

inline Region R(const FiniteSpace& sp, const std::string& lit) { return sp.parse_region(lit); }

inline Value q(std::int64_t n, std::int64_t d = 1) { return Value(Rational(n, d)); }

// Every region of a space with at most `limit` cells, as bit masks over the cell indices.
template <class F>
void for_each_subset(const FiniteSpace& sp, F&& f) {
    std::vector<std::size_t> cells;
    sp.all().for_each([&](std::size_t i) { cells.push_back(i); });
    const std::uint64_t n = cells.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Region r;
        for (std::uint64_t b = 0; b < n; ++b)
            if (m >> b & 1) r.set(cells[b]);
        f(r);
    }
}

}  // namespace tmtest
