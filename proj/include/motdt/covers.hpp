#pragma once

#include <vector>

#include "motdt/spectrum.hpp"

namespace motdt {

// Local multiplicities m_j of the divisors crossing a rational curve.
using BranchSpec = std::vector<long long>;

// Degree-m cyclic cover of P^1 attached to an exceptional divisor.
struct CoverData {
    long long m = 1;
    long long c = 1;  // connected components
    long long g = 0;  // genus of each component
    // characters of the monodromy on H^1(D, O_D), sorted, with multiplicity
    std::vector<long long> h01_chars;
    bool split_over_affine = false;

    // characters on H^0(D, Omega): the duals m - i
    std::vector<long long> h10_chars() const;
    friend bool operator==(const CoverData&, const CoverData&) = default;
};

CoverData cyclic_cover(long long m, const BranchSpec& branches);

// hsp([mu_n]) = 1 + sum_{a=1}^{n-1} u^{a/n} v^{(n-a)/n}
FracRat hsp_mu(long long n);
FracRat hsp_cover(const CoverData& d);
// removed: gcd(m, m_j) for every branch fibre taken out
FracRat hsp_cover_open(const CoverData& d, const std::vector<long long>& removed);

}  // namespace motdt
