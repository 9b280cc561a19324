#include "motdt/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "motdt/blowup.hpp"
#include "motdt/covers.hpp"
#include "motdt/error.hpp"
#include "motdt/motive.hpp"
#include "motdt/quiver.hpp"
#include "motdt/report.hpp"
#include "motdt/series.hpp"
#include "motdt/spectrum.hpp"
#include "motdt/vanishing.hpp"

namespace motdt {

namespace {

using Params = std::pair<int, std::optional<int>>;

const std::vector<Params> kFamilyCases = {{2, std::nullopt}, {2, 2}, {2, 3}, {3, std::nullopt},
                                          {3, 3},            {3, 4}, {4, std::nullopt}};

struct Fail {
    std::string msg;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Fail{msg};
}

std::string pstr(const Params& p) {
    return "(" + std::to_string(p.first) + "," + (p.second ? std::to_string(*p.second) : "inf") + ")";
}

bool le(const Params& p) { return !p.second || p.first <= *p.second; }

// ---- oracles: hand formulas written against FracPoly monomials only ----

FracPoly mono(Rat eu, Rat ev, long long c = 1) { return FracPoly::monomial(eu, ev, zz(c)); }

FracPoly o_uv(Rat e) { return mono(e, e); }

// 1 + sum_{a=1}^{n-1} u^{a/n} v^{(n-a)/n}
FracPoly o_mu(long long n) {
    FracPoly p = FracPoly::constant(1);
    for (long long a = 1; a < n; ++a) p = p + mono(Rat(a, n), Rat(n - a, n));
    return p;
}

// connected cyclic cover of P^1 with H^1(O) characters chars
FracPoly o_cover(long long m, const std::vector<long long>& chars) {
    FracPoly p = FracPoly::constant(1) + o_uv(1);
    for (long long i : chars) {
        p = p - mono(Rat(i, m), Rat(1) + Rat(m - i, m));
        p = p - mono(Rat(1) + Rat(m - i, m), Rat(i, m));
    }
    return p;
}

std::vector<long long> o_chars_D4a(long long a) {
    std::vector<long long> c;
    for (long long j = 1; j <= a; ++j) c.push_back(2 * j - 1 + 2 * a);
    return c;
}

std::vector<long long> o_chars_D2b1(long long b) {
    std::vector<long long> c;
    for (long long j = 1; j <= b; ++j) c.push_back(b + j);
    return c;
}

// L^{-1}(1 - [D]) + 2 or + 3, with hsp(L^{-1}) = (uv)^{-1}
FracRat o_bps_c1(const Params& p) {
    if (le(p)) {
        long long a = p.first;
        return FracRat(o_uv(-1) * (FracPoly::constant(1) - o_cover(4 * a, o_chars_D4a(a))) + FracPoly::constant(2));
    }
    long long b = *p.second;
    return FracRat(o_uv(-1) * (FracPoly::constant(1) - o_cover(2 * b + 1, o_chars_D2b1(b))) + FracPoly::constant(3));
}

// L^{-1/2}(1 - [mu_m]) with hsp(L^{-1/2}) = -(uv)^{-1/2}
FracRat o_monomial(long long m) {
    return FracRat(mono(Rat(-1, 2), Rat(-1, 2), -1) * (FracPoly::constant(1) - o_mu(m)));
}

FracRat o_bps_pt() { return FracRat(mono(Rat(-3, 2), Rat(-3, 2), -1) * (FracPoly::constant(1) + o_uv(1))); }

FracRat o_hsp1_display(const Params& p) {
    FracPoly s;
    if (le(p)) {
        long long a = p.first;
        s = FracPoly::constant(1);
        for (long long j = 1; j <= a; ++j) {
            Rat e(2 * j - 1, 4 * a);
            s = s + mono(e, -e) + mono(-e, e);
        }
    } else {
        long long b = *p.second;
        s = FracPoly::constant(2);
        for (long long j = 1; j <= b; ++j) {
            Rat e(j, 2 * b + 1);
            s = s + mono(e, -e) + mono(-e, e);
        }
    }
    return FracRat(s);
}

// sum_{j=1}^{a-1} u^{j/a} v^{(a-j)/a}: the j = a term read as the trivial character
FracRat o_hsp2_display(long long a) {
    FracPoly s;
    for (long long j = 1; j < a; ++j) s = s + mono(Rat(j, a), Rat(a - j, a));
    return FracRat(s);
}

// resolution data of the two resolution propositions
ResolutionGraph o_family_graph(const Params& p) {
    ResolutionGraph g;
    g.dim = 2;
    auto E = [](long long m) { return "E" + std::to_string(m); };
    auto ex = [&](long long m) { g.divisors.push_back({E(m), DivisorKind::Exceptional, m}); };
    g.divisors.push_back({"L1", DivisorKind::Strict, 1});
    g.divisors.push_back({"L2", DivisorKind::Strict, 1});
    long long top = le(p) ? 2LL * p.first - 1 : 2LL * *p.second + 1;
    for (long long m = 3; m <= top; m += 2) ex(m);
    g.points.emplace_back("L1", E(3));
    for (long long m = 3; m + 2 <= top; m += 2) g.points.emplace_back(E(m), E(m + 2));
    if (le(p)) {
        long long a = p.first;
        if (a == 1) throw Fail{"a >= 2 expected"};
        ex(2 * a);
        ex(4 * a);
        g.points.emplace_back(E(2 * a - 1), E(4 * a));
        g.points.emplace_back(E(4 * a), E(2 * a));
        g.points.emplace_back(E(4 * a), "L2");
    } else {
        g.points.emplace_back(E(top), "L2");
        g.points.emplace_back(E(top), "L2");
    }
    return g;
}

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly xy(int i, int j) { return BiPoly::monomial(i, j); }
BiPoly one() { return BiPoly::constant(1); }

// u(t) evaluated at t = T
BiPoly u_at(const BiPoly& u, const BiPoly& T) { return u.compose(X(), T); }

struct ChartOracle {
    std::vector<Blow> word;
    BiPoly total;
};

// closed forms of the chart equations for y (x^2 - y^k u(y))
std::vector<ChartOracle> o_charts(int k, const BiPoly& u) {
    std::vector<ChartOracle> out;
    const int N = k / 2;
    for (int j = 0; j < N; ++j) {
        std::vector<Blow> w(j, Blow::PiX);
        w.push_back(Blow::PiY);
        out.push_back({w, xy(2 * j + 3, 2 * j + 1) * (one() - xy(k - 2 - 2 * j, k - 2 * j) * u_at(u, xy(1, 1)))});
    }
    if (k % 2 == 0) {
        out.push_back({std::vector<Blow>(N, Blow::PiX), xy(0, 2 * N + 1) * (xy(2, 0) - u_at(u, Y()))});
        return out;
    }
    out.push_back({std::vector<Blow>(N + 1, Blow::PiX), xy(0, 2 * N + 2) * (xy(2, 1) - u_at(u, Y()))});
    std::vector<Blow> w(N, Blow::PiX);
    w.push_back(Blow::PiY);
    auto wx = w, wy = w;
    wx.push_back(Blow::PiX);
    wy.push_back(Blow::PiY);
    out.push_back({wx, xy(2 * N + 2, 4 * N + 4) * (X() - u_at(u, xy(1, 2)))});
    out.push_back({wy, xy(4 * N + 4, 2 * N + 1) * (one() - Y() * u_at(u, xy(2, 1)))});
    return out;
}

BiPoly o_unit(const Params& p) {
    if (!p.second) return one();
    int a = p.first, b = *p.second;
    int e = a <= b ? 2 * (b - a) + 1 : 2 * (a - b) - 1;
    return one() + xy(0, e);
}

int o_k(const Params& p) { return le(p) ? 2 * p.first - 1 : 2 * *p.second; }

// ---- criteria ----

std::string c1() {
    std::ostringstream d;
    double worst = 0;
    for (const auto& p : kFamilyCases) {
        auto t0 = std::chrono::steady_clock::now();
        FracRat engine = integrate_local(build_graph(FamilyParams{p.first, p.second, true}));
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, s);
        require(engine == o_bps_c1(p), pstr(p) + ": integral " + engine.to_string() + " != " + o_bps_c1(p).to_string());
        require(s < 1.0, pstr(p) + " took " + std::to_string(s) + " s");
    }
    d << kFamilyCases.size() << " cases, slowest " << static_cast<int>(worst * 1000) << " ms";
    return d.str();
}

std::string c2() {
    for (const auto& p : kFamilyCases) {
        HspFormulas h = hsp_formulas(p.first, p.second);
        FracRat engine1 = integrate_local(build_graph(FamilyParams{p.first, p.second, true}));
        require(engine1 == o_hsp1_display(p), pstr(p) + ": hsp1 differs from the display");
        require(h.hsp1 == o_hsp1_display(p), pstr(p) + ": hsp_formulas hsp1 differs from the display");
        FracRat engine2 = integrate_local(point_graph(p.first));
        auto m = monomial_ratio(engine2, o_hsp2_display(p.first));
        require(m.has_value(), pstr(p) + ": hsp2 is not a monomial multiple of the display");
        require(*m == o_uv(Rat(-1, 2)), pstr(p) + ": hsp2 twist is " + m->to_string());
        require(h.hsp2_twist == *m, pstr(p) + ": hsp_formulas twist differs");
    }
    return "hsp1 exact; hsp2 = (uv)^(-1/2) * display (j = a term read as the trivial character)";
}

std::string c3() {
    for (const auto& p : kFamilyCases) {
        long long a = p.first;
        long long gv1_expect = p.second ? std::min(2 * a + 1, 2LL * *p.second + 2) : 2 * a + 1;
        InvariantsReport r = compute_report(p.first, p.second, 3);
        auto wt = wt_realize(r.hsp1).constant_value();
        require(wt.has_value() && *wt == zz(gv1_expect), pstr(p) + ": wt(hsp1) is " + wt_realize(r.hsp1).to_string());
        require(euler_realize(o_hsp2_display(a)) == zz(a - 1), pstr(p) + ": euler(display hsp2) != a-1");
        require(r.gv2 == a - 1, pstr(p) + ": gv2 = " + std::to_string(r.gv2));
        require(r.gv1 == gv1_expect, pstr(p) + ": gv1 = " + std::to_string(r.gv1));
        long long dim = le(p) ? 6 * a - 3 : 4 * a + 2LL * *p.second - 2;
        require(r.dim_con == dim, pstr(p) + ": dim_con = " + std::to_string(r.dim_con));
        long long ab = (p.second ? std::min(2 * a, 2LL * *p.second + 1) : 2 * a) + 1;
        require(r.dim_con_ab == ab, pstr(p) + ": dim_con_ab = " + std::to_string(r.dim_con_ab));
    }
    return "gv1, gv2, dim_con, dim_con_ab match the closed forms";
}

std::string c4() {
    for (long long m = 1; m <= 12; ++m) {
        FracRat engine = integrate_local(point_graph(m));
        require(engine == o_monomial(m), "m=" + std::to_string(m) + ": " + engine.to_string());
        MotiveExpr e = MotiveExpr::lefschetz_half().pow(-1) * (MotiveExpr::one() - MotiveExpr::mu(m));
        require(realize_hsp(e) == o_monomial(m), "m=" + std::to_string(m) + ": symbolic realization differs");
    }
    return "m = 1..12";
}

std::string c5() {
    int charts = 0;
    for (int a = 2; a <= 6; ++a)
        for (int bi = 1; bi <= 7; ++bi) {
            Params p{a, bi == 7 ? std::nullopt : std::optional<int>(bi)};
            FamilyParams fp{p.first, p.second, true};
            CurveSpec cs = curve_spec(fp);
            require(cs.k == o_k(p) && cs.u == o_unit(p), pstr(p) + ": curve parameters");
            BiPoly curve = Y() * (xy(2, 0) - xy(0, o_k(p)) * o_unit(p));
            require(family_curve(fp) == curve, pstr(p) + ": family curve " + family_curve(fp).to_string());
            auto oracle = o_charts(o_k(p), o_unit(p));
            auto engine = chart_equations(curve, fp);
            require(engine.size() == oracle.size(), pstr(p) + ": chart count");
            for (const auto& oc : oracle) {
                auto it = std::find_if(engine.begin(), engine.end(), [&](const Chart& c) { return c.word == oc.word; });
                require(it != engine.end(), pstr(p) + ": missing chart " + word_name(oc.word));
                require(it->total == oc.total,
                        pstr(p) + ": chart " + it->name + " is " + it->total.to_string() + ", expected " + oc.total.to_string());
                require(verify_normal_crossing(*it), pstr(p) + ": chart " + it->name + " not normal crossing");
                ++charts;
            }
            ResolutionGraph g = build_graph(fp);
            require(same_graph(g, o_family_graph(p)), pstr(p) + ": resolution graph differs");
        }
    return "35 parameter pairs, " + std::to_string(charts) + " charts";
}

std::string c6() {
    CurveSpec cusp{3, BiPoly::constant(1), false};
    require(curve_polynomial(cusp) == xy(2, 0) - xy(0, 3), "cusp polynomial");
    ResolutionGraph g = build_graph(cusp);
    std::multiset<long long> mults;
    for (const auto& d : g.divisors)
        if (d.kind == DivisorKind::Exceptional) mults.insert(d.mult);
    require(mults == std::multiset<long long>{2, 3, 6}, "exceptional multiplicities of the cusp");
    FracRat engine = integrate_local(g);
    FracRat x2 = integrate_local(point_graph(2));
    require(x2 == FracRat::integer(1), "integral of x^2 is " + x2.to_string());
    require(engine == FracRat::integer(1) * o_monomial(3), "cusp integral " + engine.to_string());
    require(thom_sebastiani_check(point_graph(2), point_graph(3), g), "thom_sebastiani_check");
    return "cusp integral = " + engine.to_string();
}

std::string c7() {
    for (long long a = 2; a <= 8; ++a) {
        CoverData d = cyclic_cover(4 * a, {2 * a - 1, 2 * a, 1});
        require(d.c == 1 && 2 - 2 * d.g == 2 - 2 * a, "chi(D_4a), a=" + std::to_string(a));
        require(d.h01_chars == o_chars_D4a(a), "characters of D_4a, a=" + std::to_string(a));
        auto strata = exceptional_strata(build_graph(FamilyParams{static_cast<int>(a), std::nullopt, true}));
        require(strata.at("E" + std::to_string(4 * a)).cover == d, "graph stratum D_4a, a=" + std::to_string(a));
        require(hsp_cover(d) == FracRat(o_cover(4 * a, o_chars_D4a(a))), "hsp(D_4a), a=" + std::to_string(a));
    }
    for (long long b = 1; b <= 8; ++b) {
        CoverData d = cyclic_cover(2 * b + 1, {2 * b - 1, 1, 1});
        require(d.c == 1 && 2 - 2 * d.g == 2 - 2 * b, "chi(D_2b+1), b=" + std::to_string(b));
        require(d.h01_chars == o_chars_D2b1(b), "characters of D_2b+1, b=" + std::to_string(b));
        auto strata = exceptional_strata(build_graph(FamilyParams{static_cast<int>(b + 1), static_cast<int>(b), true}));
        require(strata.at("E" + std::to_string(2 * b + 1)).cover == d, "graph stratum D_2b+1, b=" + std::to_string(b));
        require(hsp_cover(d) == FracRat(o_cover(2 * b + 1, o_chars_D2b1(b))), "hsp(D_2b+1), b=" + std::to_string(b));
    }
    return "a, b <= 8";
}

// random Laurent or rational coefficient with fractional exponents
FracRat random_coeff(std::mt19937_64& rng, bool allow_den) {
    std::uniform_int_distribution<int> nterms(1, 3), ex(-3, 3), co(-3, 3), den(0, 5);
    FracPoly p;
    while (p.is_zero())
        for (int i = nterms(rng); i > 0; --i) {
            int c = co(rng);
            if (c != 0) p = p + mono(Rat(ex(rng), 2), Rat(ex(rng), 2), c);
        }
    if (!allow_den) return FracRat(p);
    switch (den(rng)) {
        case 0: return FracRat(p, FracPoly::constant(1) - o_uv(1));
        case 1: return FracRat(p, FracPoly::constant(1) + o_uv(Rat(1, 2)));
        default: return FracRat(p);
    }
}

DimVector random_dim(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<int> t(1, order);
    int total = t(rng);
    std::uniform_int_distribution<int> s(0, total);
    int d0 = s(rng);
    return {d0, total - d0};
}

MotSeries random_series(std::mt19937_64& rng, int order, bool with_one) {
    MotSeries f(order);
    if (with_one) f.add({0, 0}, FracRat::integer(1));
    std::uniform_int_distribution<int> n(1, 3);
    for (int i = n(rng); i > 0; --i) f.add(random_dim(rng, order), random_coeff(rng, true));
    return f;
}

std::string c8() {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> ord(3, 8);
    int cases = 0;
    for (int i = 0; i < 60; ++i, ++cases) {
        int order = ord(rng);
        MotSeries f = random_series(rng, order, false);
        require(plog(sym(f)) == f, "plog(sym(f)) != f, case " + std::to_string(i));
    }
    for (int i = 0; i < 60; ++i, ++cases) {
        int order = ord(rng);
        MotSeries F = random_series(rng, order, true);
        require(sym(plog(F)) == F, "sym(plog(F)) != F, case " + std::to_string(i));
    }
    for (int i = 0; i < 50; ++i, ++cases) {
        int order = ord(rng);
        MotSeries x = random_series(rng, order, false), y = random_series(rng, order, false);
        require(sym(x + y) == sym(x) * sym(y), "Sym(a+b) != Sym(a)Sym(b), case " + std::to_string(i));
    }
    const std::vector<DimVector> rays = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 3}};
    for (int i = 0; i < 50; ++i, ++cases) {
        int order = ord(rng);
        DimVector delta = rays[std::uniform_int_distribution<std::size_t>(0, rays.size() - 1)(rng)];
        int kmax = static_cast<int>(order / delta.total());
        std::vector<FracRat> bps;
        for (int k = 0; k < kmax; ++k) bps.push_back(random_coeff(rng, false));
        auto got = extract_bps(bps_ansatz(order, delta, bps), delta, kmax);
        require(static_cast<int>(got.size()) == kmax, "extract_bps length, case " + std::to_string(i));
        for (int k = 0; k < kmax; ++k)
            require(got[k].value == bps[k] && got[k].integral, "extract_bps(ansatz) != bps, case " + std::to_string(i));
    }
    int values = 0;
    for (const auto& p : kFamilyCases) {
        InvariantsReport r = compute_report(p.first, p.second, 6);
        std::vector<FracRat> all = {r.bps_pt.hsp};
        for (const auto& e : r.bps_c) all.push_back(e.hsp);
        for (const auto& e : r.bps_2c) all.push_back(e.hsp);
        for (const auto& v : all) {
            require(is_laurent_polynomial(v).has_value(), pstr(p) + ": non-integral BPS " + v.to_string());
            ++values;
        }
    }
    return std::to_string(cases) + " random cases, " + std::to_string(values) + " BPS values integral";
}

std::string c9() {
    const long long R = 50;
    for (long long n = -R; n <= R; ++n) {
        IntMatrix2 k = k_matrix_pow(n);
        require(k == k_matrix_closed_form(n), "K^n closed form, n=" + std::to_string(n));
        // g-vectors are the columns of K^{-n}
        IntMatrix2 ki = k_matrix_pow(-n);
        require(g_vector_T(2 * n) == GVector{ki[0][0], ki[1][0]}, "[T_2n] from K, n=" + std::to_string(n));
        require(g_vector_T(2 * n - 1) == GVector{ki[0][1], ki[1][1]}, "[T_2n-1] from K, n=" + std::to_string(n));
    }
    // dimension table of the stable objects
    auto dim_curve = [](long long t) { return DimVector{t + 1, 2 * t + 3}; };  // O_C(t)
    auto dim_2c = [](long long t) { return DimVector{2 * t + 1, 4 * t + 4}; };  // O_2C(t)
    auto neg = [](DimVector d) { return DimVector{-d.d0, -d.d1}; };
    for (long long n = 0; n <= R; ++n) {
        require(euler_pairing(g_vector_T(2 * n), dim_curve(n - 1)) == 0, "<T_2n, O_C(n-1)>, n=" + std::to_string(n));
        require(euler_pairing(g_vector_T(2 * n - 1), dim_2c(n - 1)) == 0, "<T_2n-1, O_2C(n-1)>, n=" + std::to_string(n));
    }
    for (long long n = -R; n < 0; ++n) {
        require(euler_pairing(g_vector_E(2 * n), neg(dim_curve(n - 1))) == 0, "<E_2n, O_C(n-1)[1]>, n=" + std::to_string(n));
    }
    for (long long n = -R; n <= 0; ++n)
        require(euler_pairing(g_vector_E(2 * n - 1), neg(dim_2c(n - 1))) == 0,
                "<E_2n-1, O_2C(n-1)[1]>, n=" + std::to_string(n));
    for (long long i = -2 * R; i <= 2 * R; ++i) {
        StableRay r = wall_dual_ray(i);
        GVector g = i >= 0 ? g_vector_T(i) : g_vector_E(i);
        require(euler_pairing(g, r.dim) == 0, "wall_dual_ray orthogonality, i=" + std::to_string(i));
    }
    // rank/degree table
    require(rank_degree({1, 2}).rank == 0 && rank_degree({1, 2}).degree == 1, "O_p rank/degree");
    require(rank_degree({0, 1}).rank == 1 && rank_degree({0, 1}).degree == -1, "O_C(-1) rank/degree");
    for (long long t = -R; t <= R; ++t) {
        RankDegree c = rank_degree(dim_curve(t));
        require(c.rank == 1 && c.degree == t, "O_C(t) rank/degree, t=" + std::to_string(t));
        require(rank_degree(dim_2c(t)).rank == 2, "O_2C(t) rank, t=" + std::to_string(t));
    }
    // phases under v = (2, -1): Z = -<v, d> + i |d|, compared in floating point as an independent check
    const int order = 6 * static_cast<int>(R) + 5;
    auto rays = stable_rays(StabilityParam{}, order);
    std::set<std::pair<long long, long long>> seen;
    double prev = 4;
    for (const auto& r : rays) {
        long long re = -(2 * r.dim.d0 - r.dim.d1);
        long long im = r.dim.total();
        require(r.re == Rat(re) && r.im == im, r.name() + ": central charge");
        double ph = std::atan2(static_cast<double>(im), static_cast<double>(re));
        require(ph < prev, "phase order broken at " + r.name());
        prev = ph;
        long long rk = std::llabs(rank_degree(r.dim).rank);
        long long want = r.kind == RayKind::Pt ? 0 : r.kind == RayKind::Curve ? 1 : 2;
        require(rk == want, r.name() + ": |rank| = " + std::to_string(rk));
        seen.insert({r.dim.d0, r.dim.d1});
    }
    // every table entry within the order appears
    std::set<std::pair<long long, long long>> want{{1, 2}};
    for (long long t = -order; t <= order; ++t) {
        for (DimVector d : {dim_curve(t), dim_2c(t)}) {
            if (d.d0 < 0 || d.d1 < 0) d = neg(d);
            if (d.d0 >= 0 && d.d1 >= 0 && !d.is_zero() && d.total() <= order) want.insert({d.d0, d.d1});
        }
    }
    require(seen == want, "stable ray set differs from the dimension table");
    return std::to_string(rays.size()) + " rays up to total " + std::to_string(order) + ", |n| <= 50";
}

std::string c10() {
    auto m2 = compare_flops(2, {2, 3, std::nullopt}, 6);
    for (const auto& row : m2)
        for (bool x : row) require(x, "a=2 flops differ");
    auto m3 = compare_flops(3, {3, 4, 5, std::nullopt}, 6);
    for (const auto& row : m3)
        for (bool x : row) require(x, "a=3 flops differ");
    InvariantsReport r2 = compute_report(2, std::nullopt, 6), r3 = compute_report(3, std::nullopt, 6);
    require(!reports_equal(r2, r3), "a=2 and a=3 reports compare equal");
    require(r2.gv1 == 5 && r3.gv1 == 7, "cross-a gv1");
    return "a=2 over {2,3,inf} equal, a=3 over {3,4,5,inf} equal, a=2 vs a=3 unequal";
}

std::string c11() {
    const int order = 6;
    InvariantsReport r = compute_report(2, std::nullopt, order);
    MotSeries f = plog(r.partition);
    FracRat w = hsp_lhalf_diff();
    std::map<DimVector, FracRat> expected;
    for (const auto& ray : r.rays) {
        for (long long k = 1; k * ray.dim.total() <= order; ++k) {
            FracRat inp;
            switch (ray.kind) {
                case RayKind::Pt: inp = o_bps_pt(); break;
                case RayKind::Curve: inp = k == 1 ? o_bps_c1({2, std::nullopt}) : k == 2 ? o_monomial(2) : FracRat(); break;
                case RayKind::TwoCurve: inp = k == 1 ? o_monomial(2) : FracRat(); break;
            }
            if (!inp.is_zero()) expected[k * ray.dim] = inp;
        }
    }
    int pt = 0;
    for (const auto& [d, c] : f.coeffs()) {
        auto it = expected.find(d);
        require(it != expected.end(), "unexpected plog entry at (" + std::to_string(d.d0) + "," + std::to_string(d.d1) + ")");
        require(c * w == it->second, "BPS mismatch at (" + std::to_string(d.d0) + "," + std::to_string(d.d1) + ")");
        if (d.d1 == 2 * d.d0) ++pt;
    }
    require(f.coeffs().size() == expected.size(), "missing plog entries");
    require(pt == 2, "point ray multiples recovered: " + std::to_string(pt));
    return std::to_string(expected.size()) + " BPS entries recovered, point ray k = 1, 2";
}

struct Entry {
    const char* name;
    std::function<std::string()> run;
};

const std::vector<Entry>& criteria() {
    static const std::vector<Entry> v = {
        {"BPS_1^C via resolution", c1},
        {"Hodge spectrum displays", c2},
        {"weight/Euler constancy and dimensions", c3},
        {"monomial route", c4},
        {"chart identities and resolution graphs", c5},
        {"Thom-Sebastiani cusp", c6},
        {"cover Hodge data", c7},
        {"plethystic laws and integrality", c8},
        {"lattice identities", c9},
        {"flop indistinguishability", c10},
        {"partition round trip", c11},
    };
    return v;
}

}  // namespace

CriterionResult run_criterion(int id) {
    CriterionResult r;
    r.id = id;
    if (id < 1 || id > kCriterionCount) {
        r.name = "unknown";
        r.detail = "no such criterion";
        return r;
    }
    const Entry& e = criteria()[id - 1];
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = e.run();
        r.pass = true;
    } catch (const Fail& f) {
        r.detail = f.msg;
    } catch (const std::exception& ex) {
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i));
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream o;
    o << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name << "  (" << std::fixed;
    o.precision(2);
    o << r.seconds << " s)  " << r.detail;
    return o.str();
}

}  // namespace motdt
