#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "motdt/blowup.hpp"
#include "motdt/error.hpp"
#include "motdt/motive.hpp"
#include "motdt/vanishing.hpp"

using namespace motdt;
using namespace th;

namespace {

ResolutionGraph nodal() {
    ResolutionGraph g;
    g.dim = 2;
    g.divisors = {{"E", DivisorKind::Exceptional, 2}, {"S1", DivisorKind::Strict, 1}, {"S2", DivisorKind::Strict, 1}};
    g.points = {{"E", "S1"}, {"E", "S2"}};
    return g;
}

MotiveExpr Lh(long long e) { return MotiveExpr::lefschetz_half().pow(e); }

}  // namespace

TEST_SUITE("vanishing") {
    TEST_CASE("one-variable monomials") {
        for (long long m = 1; m <= 12; ++m) {
            FracRat v = integrate_local(point_graph(m));
            CHECK(v == realize_hsp(Lh(-1) * (MotiveExpr::one() - MotiveExpr::mu(m))));
            CHECK(is_laurent_polynomial(v * FracRat(uv(Rat(1, 2), -1))).has_value());
        }
        CHECK(integrate_local(point_graph(1)).is_zero());
        CHECK(integrate_local(point_graph(2)) == FracRat::integer(1));
    }

    TEST_CASE("family graphs") {
        for (int a = 2; a <= 4; ++a) {
            ResolutionGraph g = build_graph(FamilyParams{a, std::nullopt, true});
            auto strata = exceptional_strata(g);
            MotiveExpr D = MotiveExpr::cover_class(strata.at("E" + std::to_string(4 * a)).cover);
            CHECK(integrate_local(g) == realize_hsp(Lh(-2) * (MotiveExpr::one() - D) + MotiveExpr::scalar(2)));
        }
        for (int b = 1; b <= 4; ++b) {
            ResolutionGraph g = build_graph(FamilyParams{b + 2, b, true});
            auto strata = exceptional_strata(g);
            MotiveExpr D = MotiveExpr::cover_class(strata.at("E" + std::to_string(2 * b + 1)).cover);
            CHECK(integrate_local(g) == realize_hsp(Lh(-2) * (MotiveExpr::one() - D) + MotiveExpr::scalar(3)));
        }
    }

    TEST_CASE("thom-sebastiani") {
        ResolutionGraph cusp = build_graph(CurveSpec{3, BiPoly::constant(1), false});
        CHECK(thom_sebastiani_check(point_graph(2), point_graph(3), cusp));
        CHECK_FALSE(thom_sebastiani_check(point_graph(2), point_graph(4), cusp));
        // x^2 - y^2 is the join of two quadratic points; one blowup resolves it
        CHECK(integrate_local(nodal()) == FracRat::integer(1));
        CHECK(thom_sebastiani_check(point_graph(2), point_graph(2), nodal()));
        CHECK(thom_sebastiani_check(point_graph(3), point_graph(1), point_graph(3)) == false);
        CHECK(thom_sebastiani_check(cusp, point_graph(2), cusp));
    }

    TEST_CASE("label invariance") {
        ResolutionGraph g = build_graph(FamilyParams{3, std::nullopt, true});
        FracRat v = integrate_local(g);
        ResolutionGraph h = g;
        for (auto& d : h.divisors) d.id = "z" + d.id;
        for (auto& [x, y] : h.points) {
            x = "z" + x;
            y = "z" + y;
            std::swap(x, y);
        }
        std::reverse(h.divisors.begin(), h.divisors.end());
        std::reverse(h.points.begin(), h.points.end());
        CHECK(integrate_local(h) == v);
        ResolutionGraph r = g;
        std::reverse(r.divisors.begin(), r.divisors.end());
        CHECK(same_graph(r, g));
        CHECK_FALSE(same_graph(h, g));
    }

    TEST_CASE("validation") {
        ResolutionGraph g = nodal();
        CHECK_NOTHROW(validate(g));
        auto bad = [&](auto edit) {
            ResolutionGraph h = nodal();
            edit(h);
            CHECK_THROWS_AS(validate(h), Error);
            CHECK_THROWS_AS(integrate_local(h), Error);
        };
        bad([](ResolutionGraph& h) { h.dim = 3; });
        bad([](ResolutionGraph& h) { h.points.push_back({"E", "E"}); });
        bad([](ResolutionGraph& h) { h.points.push_back({"S1", "S2"}); });
        bad([](ResolutionGraph& h) { h.points.push_back({"E", "Q"}); });
        bad([](ResolutionGraph& h) { h.divisors[0].mult = 0; });
        bad([](ResolutionGraph& h) { h.divisors.push_back({"E", DivisorKind::Exceptional, 1}); });
        bad([](ResolutionGraph& h) { h.divisors.push_back({"S3", DivisorKind::Strict, 1}); });
        bad([](ResolutionGraph& h) { h.divisors.push_back({"F", DivisorKind::Exceptional, 3}); });
        bad([](ResolutionGraph& h) {
            for (auto& d : h.divisors) d.kind = DivisorKind::Strict;
        });
        ResolutionGraph one = point_graph(3);
        one.divisors.push_back({"Q", DivisorKind::Exceptional, 1});
        CHECK_THROWS_AS(validate(one), Error);
    }
}
