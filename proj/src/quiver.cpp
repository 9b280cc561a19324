#include "motdt/quiver.hpp"

#include <algorithm>

#include "motdt/error.hpp"
#include "zpoly.hpp"

namespace motdt {

std::string StableRay::name() const {
    std::string s;
    switch (kind) {
        case RayKind::Pt: return "O_p";
        case RayKind::Curve: s = "O_C(" + std::to_string(twist) + ")"; break;
        case RayKind::TwoCurve: s = "O_2C(" + std::to_string(twist) + ")"; break;
    }
    return shifted ? s + "[1]" : s;
}

long long euler_pairing(const GVector& g, const DimVector& d) { return g.c0 * d.d0 + g.c1 * d.d1; }

GVector g_vector_T(long long i) {
    if (i % 2 == 0) {
        long long n = i / 2;
        return {1 + 2 * n, -n};
    }
    long long n = detail::floor_div(i + 1, 2);  // i = 2n - 1
    return {4 * n, 1 - 2 * n};
}

GVector g_vector_E(long long i) { return -g_vector_T(i); }

static IntMatrix2 mat_mul(const IntMatrix2& x, const IntMatrix2& y) {
    IntMatrix2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

IntMatrix2 k_matrix_pow(long long n) {
    const IntMatrix2 K{{{-1, -4}, {1, 3}}};
    const IntMatrix2 Kinv{{{3, 4}, {-1, -1}}};
    IntMatrix2 r{{{1, 0}, {0, 1}}};
    const IntMatrix2& b = n >= 0 ? K : Kinv;
    for (long long i = 0; i < (n >= 0 ? n : -n); ++i) r = mat_mul(r, b);
    return r;
}

IntMatrix2 k_matrix_closed_form(long long n) { return {{{1 - 2 * n, -4 * n}, {n, 1 + 2 * n}}}; }

RankDegree rank_degree(const DimVector& d) { return {-2 * d.d0 + d.d1, 3 * d.d0 - d.d1}; }

static StableRay ray(RayKind k, long long twist, bool shifted, DimVector d) {
    StableRay r;
    r.kind = k;
    r.twist = twist;
    r.shifted = shifted;
    r.dim = d;
    return r;
}

static int cross_sign(const StableRay& x, const StableRay& y) {
    // sign of Im(conj(Z_x) Z_y) = re_x im_y - im_x re_y
    Rat c = x.re * Rat(y.im) - Rat(x.im) * y.re;
    return c == 0 ? 0 : (c < 0 ? -1 : 1);
}

bool phase_greater(const StableRay& x, const StableRay& y) { return cross_sign(x, y) < 0; }

std::vector<StableRay> stable_rays(const StabilityParam& v, int order) {
    if (v.v0 == v.v1) throw Error(Errc::NonGenericParameter, "v0 = v1 is not generic");
    // phase(S0) > phase(S1) iff -v0 < -v1
    if (!(v.v1 < v.v0)) throw Error(Errc::WrongSimpleOrdering, "stability must order S0 above S1");
    std::vector<StableRay> rs;
    if (3 <= order) rs.push_back(ray(RayKind::Pt, 0, false, {1, 2}));
    for (long long n = 0; 3 * n + 1 <= order; ++n) rs.push_back(ray(RayKind::Curve, n - 1, false, {n, 2 * n + 1}));
    for (long long m = 1; 3 * m - 1 <= order; ++m)
        rs.push_back(ray(RayKind::Curve, -m - 1, true, {m, 2 * m - 1}));
    for (long long n = 0; 6 * n + 5 <= order; ++n)
        rs.push_back(ray(RayKind::TwoCurve, n, false, {2 * n + 1, 4 * n + 4}));
    for (long long m = 1; 6 * m - 5 <= order; ++m)
        rs.push_back(ray(RayKind::TwoCurve, -m, true, {2 * m - 1, 4 * m - 4}));
    for (auto& r : rs) {
        r.re = -(v.v0 * Rat(r.dim.d0) + v.v1 * Rat(r.dim.d1));
        r.im = r.dim.total();
    }
    std::sort(rs.begin(), rs.end(), phase_greater);
    for (std::size_t i = 1; i < rs.size(); ++i)
        if (!phase_greater(rs[i - 1], rs[i]))
            throw Error(Errc::NonGenericParameter, "two stable rays share a phase");
    return rs;
}

StableRay wall_dual_ray(long long i) {
    if (i >= 0) {
        if (i % 2 == 0) {
            long long n = i / 2;
            return ray(RayKind::Curve, n - 1, false, {n, 1 + 2 * n});
        }
        long long n = (i + 1) / 2;
        return ray(RayKind::TwoCurve, n - 1, false, {2 * n - 1, 4 * n});
    }
    if (i % 2 == 0) {
        long long n = i / 2;  // n < 0
        return ray(RayKind::Curve, n - 1, true, {-n, -1 - 2 * n});
    }
    long long n = detail::floor_div(i + 1, 2);  // i = 2n - 1, n <= 0
    return ray(RayKind::TwoCurve, n - 1, true, {1 - 2 * n, -4 * n});
}

}  // namespace motdt
