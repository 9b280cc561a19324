#include "motdt/report.hpp"

#include <cstdlib>

#include "motdt/error.hpp"

namespace motdt {

namespace {

MotiveExpr Lhalf_pow(long long e) { return MotiveExpr::lefschetz_half().pow(e); }

// L^{-1/2} (1 - [mu_a])
MotiveExpr monomial_route_expr(int a) {
    return Lhalf_pow(-1) * (MotiveExpr::one() - MotiveExpr::mu(a));
}

bool a_le_b(int a, std::optional<int> b) { return !b || a <= *b; }

}  // namespace

FracRat ray_bps(const InvariantsReport& r, const StableRay& ray, long long k) {
    if (k < 1) throw Error(Errc::InvalidParams, "BPS index must be positive");
    switch (ray.kind) {
        case RayKind::Pt: return r.bps_pt.hsp;
        case RayKind::Curve:
            return k <= static_cast<long long>(r.bps_c.size()) ? r.bps_c[k - 1].hsp : FracRat();
        case RayKind::TwoCurve:
            return k <= static_cast<long long>(r.bps_2c.size()) ? r.bps_2c[k - 1].hsp : FracRat();
    }
    return FracRat();
}

InvariantsReport compute_report(int a, std::optional<int> b, int order) {
    FamilyParams p{a, b, true};
    validate_params(p);
    if (order < 3) throw Error(Errc::InvalidParams, "order must be >= 3");
    InvariantsReport r;
    r.a = a;
    r.b = b;
    r.order = order;

    MotiveExpr pt = Lhalf_pow(-3) * MotiveExpr::proj_line();
    r.bps_pt = {pt, realize_hsp(pt)};

    r.graph = build_graph(p);
    FracRat c1 = integrate_local(r.graph);
    const bool le = a_le_b(a, b);
    const long long main_mult = le ? 4LL * a : 2LL * *b + 1;
    auto strata = exceptional_strata(r.graph);
    auto it = strata.find("E" + std::to_string(main_mult));
    if (it == strata.end()) throw Error(Errc::GraphMismatch, "no divisor of multiplicity " + std::to_string(main_mult));
    MotiveExpr D = MotiveExpr::cover_class(it->second.cover, "D_{" + std::to_string(main_mult) + "}");
    MotiveExpr c1_expr = Lhalf_pow(-2) * (MotiveExpr::one() - D) + MotiveExpr::scalar(le ? 2 : 3);
    if (!(realize_hsp(c1_expr) == c1))
        throw Error(Errc::MismatchWithEngine, "resolution integral differs from " + c1_expr.to_string());

    FracRat mono = integrate_local(point_graph(a));
    MotiveExpr mono_expr = monomial_route_expr(a);
    if (!(realize_hsp(mono_expr) == mono))
        throw Error(Errc::MismatchWithEngine, "monomial integral differs from " + mono_expr.to_string());

    r.bps_c.assign(order, BpsEntry{std::nullopt, FracRat()});
    r.bps_2c.assign(order, BpsEntry{std::nullopt, FracRat()});
    r.bps_c[0] = {c1_expr, c1};
    if (order >= 2) r.bps_c[1] = {std::nullopt, mono};
    r.bps_2c[0] = {mono_expr, realize_hsp(mono_expr)};
    if (!(r.bps_2c[0].hsp == r.bps_c[1].hsp))
        throw Error(Errc::MismatchWithEngine, "BPS_1 on the 2C rays differs from BPS_2 on the curve rays");

    r.hsp1 = c1;
    r.hsp2 = mono;
    r.gv1 = euler_realize(r.hsp1).get_si();
    r.gv2 = euler_realize(r.hsp2).get_si();
    r.dim_con = r.gv1 + 4 * r.gv2;
    r.dim_con_ab = r.gv1;

    r.rays = stable_rays(StabilityParam{}, order);
    FracRat w = hsp_lhalf_diff();
    MotSeries Z = MotSeries::one(order);
    for (const auto& ray : r.rays) {
        MotSeries f(order);
        for (long long k = 1; k * ray.dim.total() <= order; ++k) {
            FracRat v = ray_bps(r, ray, k);
            if (!v.is_zero()) f.add(k * ray.dim, v / w);
        }
        Z = Z * sym(f);
    }
    r.partition = Z;
    return r;
}

FracRat hsp1_display(int a, std::optional<int> b) {
    FracPoly p;
    if (a_le_b(a, b)) {
        p = FracPoly::constant(1);
        for (long long j = 1; j <= a; ++j) {
            Rat e(2 * j - 1, 4LL * a);
            p += FracPoly::monomial(e, -e) + FracPoly::monomial(-e, e);
        }
    } else {
        p = FracPoly::constant(2);
        for (long long j = 1; j <= *b; ++j) {
            Rat e(j, 2LL * *b + 1);
            p += FracPoly::monomial(e, -e) + FracPoly::monomial(-e, e);
        }
    }
    return FracRat(p);
}

HspFormulas hsp_formulas(int a, std::optional<int> b) {
    validate_params(FamilyParams{a, b, true});
    HspFormulas h;
    h.hsp1 = hsp1_display(a, b);
    FracRat engine1 = integrate_local(build_graph(FamilyParams{a, b, true}));
    if (!(engine1 == h.hsp1)) throw Error(Errc::MismatchWithEngine, "hsp1 display differs from the resolution integral");
    h.hsp2 = integrate_local(point_graph(a));
    // sum_{j=1}^{a} z1^{j/a} z2^{(a-j)/a} - 1, with the j = a term either the
    // trivial character (1) or literally z1
    FracPoly sum;
    for (long long j = 1; j < a; ++j) sum += FracPoly::monomial(Rat(j, a), Rat(a - j, a));
    h.hsp2_display = FracRat(sum);
    h.hsp2_literal = FracRat(sum + FracPoly::monomial(1, 0) - FracPoly::constant(1));
    auto twist = monomial_ratio(h.hsp2, h.hsp2_display);
    if (!twist) throw Error(Errc::MismatchWithEngine, "hsp2 is not a monomial multiple of the display");
    auto terms = twist->exponent_terms();
    if (std::get<0>(terms[0]) != std::get<1>(terms[0]))
        throw Error(Errc::MismatchWithEngine, "hsp2 twist is not a power of uv");
    h.hsp2_twist = *twist;
    return h;
}

bool reports_equal(const InvariantsReport& x, const InvariantsReport& y) {
    auto same_list = [](const std::vector<BpsEntry>& p, const std::vector<BpsEntry>& q) {
        if (p.size() != q.size()) return false;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!(p[i].hsp == q[i].hsp)) return false;
        return true;
    };
    return x.order == y.order && x.bps_pt.hsp == y.bps_pt.hsp && same_list(x.bps_2c, y.bps_2c) &&
           same_list(x.bps_c, y.bps_c) && x.hsp1 == y.hsp1 && x.hsp2 == y.hsp2 && x.gv1 == y.gv1 &&
           x.gv2 == y.gv2 && x.dim_con == y.dim_con && x.dim_con_ab == y.dim_con_ab && x.partition == y.partition;
}

std::vector<std::vector<bool>> compare_flops(int a, const std::vector<std::optional<int>>& bs, int order) {
    std::vector<InvariantsReport> rs;
    for (const auto& b : bs) rs.push_back(compute_report(a, b, order));
    std::vector<std::vector<bool>> m(bs.size(), std::vector<bool>(bs.size()));
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j) m[i][j] = i == j || reports_equal(rs[i], rs[j]);
    return m;
}

bool strong_rationality_check(const InvariantsReport& r) {
    auto by_rank = [&](long long rank) -> FracRat {
        switch (rank) {
            case 0: return r.bps_pt.hsp;
            case 1: return r.bps_c[0].hsp;
            case 2: return r.bps_c.size() > 1 ? r.bps_c[1].hsp : FracRat();
            default: return FracRat();
        }
    };
    for (const auto& ray : r.rays)
        for (long long k = 1; k * ray.dim.total() <= r.order; ++k) {
            long long rk = std::llabs(rank_degree(k * ray.dim).rank);
            if (k == 1 && rk > 2) return false;
            if (!(ray_bps(r, ray, k) == by_rank(rk))) return false;
        }
    return true;
}

}  // namespace motdt
