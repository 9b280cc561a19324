#include "doctest.h"
#include "helpers.hpp"
#include "motdt/error.hpp"
#include "motdt/report.hpp"

using namespace motdt;
using namespace th;

TEST_SUITE("report") {
    TEST_CASE("closed forms of the invariants") {
        struct Case {
            int a;
            std::optional<int> b;
            long long gv1, gv2, dim;
        };
        // (2,2) is in the a <= b branch: gv1 = min{2a+1, 2b+2} = 5
        for (const Case& c : {Case{2, std::nullopt, 5, 1, 9}, Case{2, 2, 5, 1, 9}, Case{3, std::nullopt, 7, 2, 15},
                              Case{3, 2, 6, 2, 14}, Case{3, 1, 4, 2, 12}, Case{5, 3, 8, 4, 24}}) {
            InvariantsReport r = compute_report(c.a, c.b, 4);
            CHECK(r.gv1 == c.gv1);
            CHECK(r.gv2 == c.gv2);
            CHECK(r.dim_con == c.dim);
            CHECK(r.dim_con_ab == c.gv1);
        }
    }

    TEST_CASE("bps entries") {
        InvariantsReport r = compute_report(2, std::nullopt, 6);
        CHECK(r.bps_pt.hsp == FracRat(uv(Rat(-3, 2), -1) * (k(1) + uv(1))));
        CHECK(euler_realize(r.bps_pt.hsp) == -2);
        REQUIRE(r.bps_c.size() == 6);
        CHECK(r.bps_c[0].expr->to_string() == "L^{-1}(1 - [D_{8}]) + 2");
        CHECK_FALSE(r.bps_c[1].expr.has_value());
        CHECK(r.bps_c[1].hsp == r.bps_2c[0].hsp);
        for (int k = 2; k < 6; ++k) CHECK(r.bps_c[k].hsp.is_zero());
        for (int k = 1; k < 6; ++k) CHECK(r.bps_2c[k].hsp.is_zero());
        CHECK(r.bps_2c[0].expr->to_string() == "L^{-1/2}(1 - [μ_2])");
        CHECK(compute_report(3, 1, 3).bps_c[0].expr->to_string() == "L^{-1}(1 - [D_{3}]) + 3");
    }

    TEST_CASE("hsp formulas") {
        HspFormulas h = hsp_formulas(2, std::nullopt);
        FracPoly want = k(1);
        for (Rat e : {Rat(1, 8), Rat(3, 8)}) want = want + mono(e, -e) + mono(-e, e);
        CHECK(h.hsp1 == FracRat(want));
        HspFormulas g = hsp_formulas(3, 2);
        FracPoly want2 = k(2);
        for (Rat e : {Rat(1, 5), Rat(2, 5)}) want2 = want2 + mono(e, -e) + mono(-e, e);
        CHECK(g.hsp1 == FracRat(want2));
        CHECK(g.hsp2_twist == uv(Rat(-1, 2)));
        // the literal reading of the display differs from the engine by more than a monomial
        CHECK_FALSE(monomial_ratio(g.hsp2, g.hsp2_literal).has_value());
        for (int a = 2; a <= 5; ++a)
            for (int b = 1; b <= 6; ++b) {
                auto c = wt_realize(hsp_formulas(a, b).hsp1).constant_value();
                REQUIRE(c.has_value());
                CHECK(*c == std::min(2 * a + 1, 2 * b + 2));
            }
    }

    TEST_CASE("partition coefficients") {
        InvariantsReport r = compute_report(2, std::nullopt, 6);
        CHECK(r.partition.coeff({0, 0}) == FracRat::integer(1));
        CHECK(r.partition.coeff({0, 1}) == r.bps_c[0].hsp / hsp_lhalf_diff());
        CHECK(r.partition.coeff({1, 0}) == r.bps_2c[0].hsp / hsp_lhalf_diff());
        FracRat w = hsp_lhalf_diff();
        MotSeries f = plog(r.partition);
        for (const auto& ray : r.rays) {
            for (long long k = 1; k * ray.dim.total() <= r.order; ++k) CHECK(f.coeff(k * ray.dim) * w == ray_bps(r, ray, k));
        }
    }

    TEST_CASE("order increase agrees on the common truncation") {
        InvariantsReport r4 = compute_report(2, 3, 4), r6 = compute_report(2, 3, 6);
        CHECK(r6.partition.truncated(4) == r4.partition);
    }

    TEST_CASE("flops") {
        auto m = compare_flops(2, {2, 3, std::nullopt}, 4);
        for (const auto& row : m)
            for (bool x : row) CHECK(x);
        auto n = compare_flops(3, {1, 2, 3}, 4);
        CHECK_FALSE(n[0][1]);
        CHECK_FALSE(n[1][2]);
        CHECK(n[0][0]);
        CHECK_FALSE(reports_equal(compute_report(2, std::nullopt, 4), compute_report(3, std::nullopt, 4)));
    }

    TEST_CASE("strong rationality") {
        for (int a = 2; a <= 4; ++a)
            for (int b = 1; b <= 5; ++b) CHECK(strong_rationality_check(compute_report(a, b, 5)));
        InvariantsReport r = compute_report(2, std::nullopt, 5);
        r.bps_2c[0].hsp = r.bps_pt.hsp;
        CHECK_FALSE(strong_rationality_check(r));
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(compute_report(1, std::nullopt, 6), Error);
        CHECK_THROWS_AS(compute_report(2, 0, 6), Error);
        CHECK_THROWS_AS(compute_report(2, std::nullopt, 2), Error);
    }
}
