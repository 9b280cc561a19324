#include "motdt/covers.hpp"

#include <algorithm>
#include <numeric>

#include "motdt/error.hpp"

namespace motdt {

std::vector<long long> CoverData::h10_chars() const {
    std::vector<long long> r;
    for (long long i : h01_chars) r.push_back(m - i);
    std::sort(r.begin(), r.end());
    return r;
}

CoverData cyclic_cover(long long m, const BranchSpec& branches) {
    if (m < 1) throw Error(Errc::InvalidParams, "cover degree must be positive");
    for (long long mj : branches)
        if (mj < 1) throw Error(Errc::InvalidParams, "branch multiplicity must be positive");
    CoverData d;
    d.m = m;
    long long c = m;
    for (long long mj : branches) c = std::gcd(c, mj);
    const long long r = static_cast<long long>(branches.size());

    if (c == 1) {
        long long chi = m * (2 - r);
        for (long long mj : branches) chi += std::gcd(m, mj);
        if (chi % 2 != 0 || chi > 2)
            throw Error(Errc::CoverInconsistent, "odd or too large Euler characteristic " + std::to_string(chi));
        d.c = 1;
        d.g = 1 - chi / 2;
        // Steenbrink: deg L_i = -i + sum_j floor(m_j i / m); h^1(L_i) = max(0, -deg - 1)
        for (long long i = 1; i < m; ++i) {
            long long deg = -i;
            for (long long mj : branches) deg += (mj * i) / m;
            for (long long k = 0; k < -deg - 1; ++k) d.h01_chars.push_back(i);
        }
        if (static_cast<long long>(d.h01_chars.size()) != d.g)
            throw Error(Errc::CoverInconsistent, "character count " + std::to_string(d.h01_chars.size()) +
                                                     " differs from genus " + std::to_string(d.g));
        return d;
    }
    if (c == m && r == 1) {
        d.c = m;
        d.g = 0;
        d.split_over_affine = true;
        return d;
    }
    throw Error(Errc::UnsupportedDisconnectedCover,
                "cover of degree " + std::to_string(m) + " with " + std::to_string(c) + " components");
}

FracRat hsp_mu(long long n) {
    if (n < 1) throw Error(Errc::InvalidParams, "mu_n needs n >= 1");
    FracPoly p = FracPoly::constant(1);
    for (long long a = 1; a < n; ++a) p += FracPoly::monomial(Rat(a, n), Rat(n - a, n));
    return FracRat(p);
}

FracRat hsp_cover(const CoverData& d) {
    FracPoly one_plus_L = FracPoly::constant(1) + FracPoly::uv(1);
    if (d.split_over_affine) return hsp_mu(d.c) * FracRat(one_plus_L);
    if (d.c != 1) throw Error(Errc::UnsupportedDisconnectedCover, "hsp of a non-split disconnected cover");
    FracPoly p = one_plus_L;
    const long long m = d.m;
    for (long long i : d.h01_chars) {
        p -= FracPoly::monomial(Rat(i, m), 1 + Rat(m - i, m));  // H^{0,1}, character i
        p -= FracPoly::monomial(1 + Rat(m - i, m), Rat(i, m));  // H^{1,0}, character m - i
    }
    return FracRat(p);
}

FracRat hsp_cover_open(const CoverData& d, const std::vector<long long>& removed) {
    FracRat r = hsp_cover(d);
    for (long long g : removed) r -= hsp_mu(g);
    return r;
}

}  // namespace motdt
