#pragma once

#include <random>

#include "motdt/spectrum.hpp"

namespace th {

using motdt::FracPoly;
using motdt::FracRat;
using motdt::Rat;

inline FracPoly mono(Rat eu, Rat ev, long long c = 1) { return FracPoly::monomial(eu, ev, motdt::zz(c)); }
inline FracPoly uv(Rat e, long long c = 1) { return mono(e, e, c); }
inline FracPoly k(long long c) { return FracPoly::constant(motdt::zz(c)); }

inline FracPoly random_poly(std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> n(1, max_terms), e(-4, 4), c(-4, 4), d(1, 3);
    FracPoly p;
    while (p.is_zero())
        for (int i = n(rng); i > 0; --i) {
            long long den = d(rng);
            p = p + mono(Rat(e(rng), den), Rat(e(rng), den), c(rng));
        }
    return p;
}

inline FracRat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    FracPoly num = random_poly(rng);
    switch (pick(rng)) {
        case 0: return FracRat(num, k(1) - uv(1));
        case 1: return FracRat(num, k(1) + uv(Rat(1, 2)));
        case 2: return FracRat(num, random_poly(rng, 2));
        default: return FracRat(num);
    }
}

}  // namespace th
