#pragma once

#include <vector>

#include "periods/series.hpp"

namespace pe::test {

// deterministic generator for small rationals
struct Rng {
    unsigned long state = 0x243f6a8885a308d3ULL;
    long next_long(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        unsigned long span = static_cast<unsigned long>(hi - lo + 1);
        return lo + static_cast<long>((state >> 33) % span);
    }
    Rational next_rational() {
        long num = next_long(-9, 9);
        long den = next_long(1, 7);
        return Rational(num, den);
    }
    TruncatedSeries next_series(int order, bool zero_constant = false) {
        std::vector<Rational> c(static_cast<size_t>(order));
        for (auto& x : c) x = next_rational();
        if (zero_constant && order > 0) c[0] = 0;
        return TruncatedSeries(Rational(0), std::move(c), false);
    }
};

}  // namespace pe::test
