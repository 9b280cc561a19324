#include "doctest.h"
#include "helpers.hpp"
#include "motdt/error.hpp"
#include "motdt/motive.hpp"
#include "motdt/series.hpp"

using namespace motdt;
using namespace th;

namespace {

MotSeries t(int order, DimVector d, const FracRat& c = FracRat::integer(1)) { return MotSeries::monomial(order, d, c); }

MotSeries random_series(std::mt19937_64& rng, int order, bool with_one) {
    MotSeries f(order);
    if (with_one) f.add({0, 0}, FracRat::integer(1));
    std::uniform_int_distribution<int> n(1, 3), tot(1, order);
    for (int i = n(rng); i > 0; --i) {
        int s = tot(rng);
        int d0 = std::uniform_int_distribution<int>(0, s)(rng);
        f.add({d0, s - d0}, FracRat(random_poly(rng, 2)));
    }
    return f;
}

}  // namespace

TEST_SUITE("series") {
    TEST_CASE("mul examples") {
        const int N = 5;
        MotSeries f = t(N, {1, 2}, FracRat(uv(1))) + t(N, {0, 1});
        CHECK(f * MotSeries::one(N) == f);
        MotSeries lhs = (MotSeries::one(N) + t(N, {1, 0})) * (MotSeries::one(N) + t(N, {0, 1}));
        CHECK(lhs == MotSeries::one(N) + t(N, {1, 0}) + t(N, {0, 1}) + t(N, {1, 1}));
        MotSeries geo(N);
        for (int k = 0; k <= N; ++k) geo.add({0, k}, FracRat::integer(1));
        CHECK((MotSeries::one(N) - t(N, {0, 1})) * geo == MotSeries::one(N));
        CHECK_THROWS_AS(mul(MotSeries(3), MotSeries(4)), Error);
    }

    TEST_CASE("truncation closure") {
        MotSeries f = t(3, {1, 1}) + t(3, {0, 2});
        for (const auto& [d, c] : (f * f * f).coeffs()) CHECK(d.total() <= 3);
        CHECK((f * f).coeff({2, 2}).is_zero());
    }

    TEST_CASE("sym examples") {
        const int N = 6;
        MotSeries geo(N);
        for (int k = 0; k <= N; ++k) geo.add({0, k}, FracRat::integer(1));
        CHECK(sym(t(N, {0, 1})) == geo);
        MotSeries lgeo(N);
        for (int k = 0; k <= N; ++k) lgeo.add({0, k}, FracRat(uv(k)));
        CHECK(sym(t(N, {0, 1}, FracRat(uv(1)))) == lgeo);
        MotSeries a = t(N, {1, 0}, FracRat(uv(Rat(1, 2)))), b = t(N, {1, 2}, FracRat(k(1) + uv(1)));
        CHECK(sym(a + b) == sym(a) * sym(b));
        CHECK(sym(MotSeries(N)) == MotSeries::one(N));
        CHECK_THROWS_AS(sym(MotSeries::one(N)), Error);
    }

    TEST_CASE("plog examples") {
        const int N = 6;
        MotSeries geo(N);
        for (int k = 0; k <= N; ++k) geo.add({0, k}, FracRat::integer(1));
        CHECK(plog(geo) == t(N, {0, 1}));
        CHECK_THROWS_AS(plog(MotSeries(N)), Error);
        CHECK_THROWS_AS(plog(MotSeries::one(N) + MotSeries::one(N)), Error);
        // point ray: L^{-3/2}[P1] at every k
        FracRat pt = realize_hsp(MotiveExpr::lefschetz_half().pow(-3) * MotiveExpr::proj_line());
        MotSeries f(N);
        for (int k = 1; 3 * k <= N; ++k) f.add({k, 2 * k}, pt / hsp_lhalf_diff());
        CHECK(plog(sym(f)) == f);
    }

    TEST_CASE("sym of a single term up to order 3 delta") {
        // Sym(c x) = 1 + c x + (c^2 + psi_2 c)/2 x^2 + (c^3 + 3 c psi_2 c + 2 psi_3 c)/6 x^3
        FracRat c(k(2) + uv(Rat(1, 2)));
        MotSeries s = sym(t(3, {0, 1}, c));
        CHECK(s.coeff({0, 1}) == c);
        CHECK(s.coeff({0, 2}) == (c * c + adams(2, c)).divided(2));
        CHECK(s.coeff({0, 3}) == (c * c * c + FracRat::integer(3) * c * adams(2, c) + FracRat::integer(2) * adams(3, c)).divided(6));
    }

    TEST_CASE("extract_bps examples") {
        const int N = 6;
        FracRat c(uv(Rat(-1, 2)) * mono(Rat(1, 2), Rat(1, 2)) + mono(Rat(1, 3), Rat(-1, 3)));
        auto b = extract_bps(bps_ansatz(N, {0, 1}, {c}), {0, 1}, 3);
        REQUIRE(b.size() == 3);
        CHECK(b[0].value == c);
        CHECK(b[0].integral);
        CHECK(b[1].value.is_zero());
        CHECK(b[2].value.is_zero());
        // 2C ray, a = 3
        FracRat m = realize_hsp(MotiveExpr::lefschetz_half().pow(-1) * (MotiveExpr::one() - MotiveExpr::mu(3)));
        auto b2 = extract_bps(bps_ansatz(N, {1, 0}, {m}), {1, 0}, 6);
        CHECK(b2[0].value == m);
        for (std::size_t k = 1; k < b2.size(); ++k) CHECK(b2[k].value.is_zero());
        for (const auto& v : extract_bps(MotSeries::one(N), {1, 2}, 2)) CHECK(v.value.is_zero());
        CHECK_THROWS_AS(extract_bps(MotSeries::one(N) + t(N, {1, 1}), {0, 1}, 2), Error);
        CHECK_THROWS_AS(extract_bps(MotSeries::one(N), {2, 2}, 2), Error);
    }

    TEST_CASE("extract_bps stops at the truncation order") {
        auto b = extract_bps(bps_ansatz(5, {1, 1}, {FracRat::integer(1), FracRat::integer(2)}), {1, 1}, 10);
        CHECK(b.size() == 2);
        CHECK(b[1].value == FracRat::integer(2));
    }

    TEST_CASE("exponential laws on random series") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> ord(2, 6);
        for (int i = 0; i < 40; ++i) {
            int N = ord(rng);
            MotSeries f = random_series(rng, N, false), g = random_series(rng, N, false);
            CHECK(sym(f + g) == sym(f) * sym(g));
            CHECK(plog(sym(f)) == f);
            MotSeries F = random_series(rng, N, true);
            CHECK(sym(plog(F)) == F);
            CHECK(f * g == g * f);
        }
    }

    TEST_CASE("adams on series") {
        MotSeries f = t(6, {0, 1}, FracRat(uv(Rat(1, 2))));
        MotSeries g = f.adams(2);
        CHECK(g.coeff({0, 2}) == FracRat(uv(1)));
        CHECK(g.coeffs().size() == 1);
    }
}
