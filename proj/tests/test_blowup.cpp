#include <set>

#include "doctest.h"
#include "motdt/blowup.hpp"
#include "motdt/error.hpp"

using namespace motdt;

namespace {

BiPoly P(const std::string& s) { return BiPoly::parse(s); }
BiPoly xy(int i, int j) { return BiPoly::monomial(i, j); }

const Chart& find_chart(const std::vector<Chart>& cs, const std::vector<Blow>& w) {
    for (const auto& c : cs)
        if (c.word == w) return c;
    FAIL("missing chart " << word_name(w));
    return cs.front();
}

const auto X = Blow::PiX;
const auto Y = Blow::PiY;

}  // namespace

TEST_SUITE("blowup") {
    TEST_CASE("bipoly parser round trip") {
        for (const char* s : {"x^2*y - y^5 - y^4", "1/2*x*y^3 + 3", "-x", "0", "-2/3*x^4*y + x - 7/5"}) {
            BiPoly p = P(s);
            CHECK(P(p.to_string()) == p);
        }
        CHECK(P("x^2*y - y^4") == xy(2, 1) - xy(0, 4));
        CHECK(P("2*x + x") == BiPoly::monomial(1, 0, 3));
        CHECK_THROWS_AS(P("x^"), Error);
        CHECK_THROWS_AS(P("x*z"), Error);
        CHECK_THROWS_AS(P("1/0*x"), Error);
    }

    TEST_CASE("bipoly substitutions") {
        BiPoly p = xy(2, 1) - xy(0, 4);
        CHECK(p.substitute_monomial(1, 1, 0, 1) == xy(2, 3) - xy(0, 4));
        CHECK(p.substitute_monomial(1, 0, 1, 1) == xy(3, 1) - xy(4, 4));
        CHECK(p.compose(BiPoly::x() + BiPoly::constant(1), BiPoly::y()) == (BiPoly::x() + BiPoly::constant(1)).pow(2) * BiPoly::y() - xy(0, 4));
        CHECK(p.min_exponents() == BiPoly::Key{0, 1});
        CHECK(p.divide_monomial(0, 1) == xy(2, 0) - xy(0, 3));
        CHECK(p.dx() == BiPoly::monomial(1, 1, 2));
    }

    TEST_CASE("family curves") {
        CHECK(family_curve({2, std::nullopt, true}) == P("x^2*y - y^4"));
        CHECK(family_curve({2, 2, true}) == P("x^2*y - y^4 - y^5"));
        CHECK(family_curve({3, 2, true}) == P("x^2*y - y^5 - y^6"));
        CHECK(curve_polynomial(CurveSpec{3, BiPoly::constant(1), false}) == P("x^2 - y^3"));
        CHECK_THROWS_AS(validate_params({1, std::nullopt, true}), Error);
        CHECK_THROWS_AS(validate_params({2, 0, true}), Error);
    }

    TEST_CASE("chart examples") {
        auto cs = chart_equations(family_curve({2, std::nullopt, true}), {2, std::nullopt, true});
        const Chart& c0 = find_chart(cs, {Y});
        CHECK(c0.total == xy(3, 1) * (BiPoly::constant(1) - xy(1, 3)));
        CHECK(c0.alt_name == "pi_y");
        const Chart& c1 = find_chart(cs, {X, X});
        CHECK(c1.total == xy(0, 4) * (xy(2, 1) - BiPoly::constant(1)));
        CHECK(c1.alt_name == "pi_x o pi_y");
        CHECK(c1.p == 0);
        CHECK(c1.q == 4);
        CHECK(verify_normal_crossing(c1));
        // (3,2) has k = 2b = 4, N = 2 and u = 1 + y
        auto ce = chart_equations(family_curve({3, 2, true}), {3, 2, true});
        const Chart& c2 = find_chart(ce, {X, X});
        CHECK(c2.total == xy(0, 5) * (xy(2, 0) - BiPoly::constant(1) - xy(0, 1)));
        CHECK_THROWS_AS(chart_equations(P("x^2*y - y^5"), {2, std::nullopt, true}), Error);
    }

    TEST_CASE("normal crossing decisions") {
        CurveSpec odd{3, BiPoly::constant(1), true};
        CHECK_FALSE(verify_normal_crossing(make_chart(odd, {X})));
        CHECK(verify_normal_crossing(make_chart(odd, {X, Y, X})));
        CHECK(verify_normal_crossing(make_chart(odd, {X, Y, Y})));
        CHECK_FALSE(verify_normal_crossing(make_chart(CurveSpec{3, BiPoly::constant(1), false}, {})));
        // the node x^2 - y^2 is already normal crossing
        CHECK(verify_normal_crossing(make_chart(CurveSpec{2, BiPoly::constant(1), false}, {})));
    }

    TEST_CASE("charts factor exactly") {
        for (int a = 2; a <= 6; ++a)
            for (int b = 1; b <= 7; ++b) {
                FamilyParams p{a, b == 7 ? std::nullopt : std::optional<int>(b), true};
                for (const auto& c : chart_equations(curve_spec(p))) {
                    CHECK(c.total == xy(c.p, c.q) * c.residual);
                    auto m = c.residual.min_exponents();
                    CHECK((m.first == 0 && m.second == 0));
                }
            }
    }

    TEST_CASE("family graphs") {
        ResolutionGraph g = build_graph(FamilyParams{2, std::nullopt, true});
        ResolutionGraph want;
        want.divisors = {{"L1", DivisorKind::Strict, 1},      {"E3", DivisorKind::Exceptional, 3},
                         {"E4", DivisorKind::Exceptional, 4}, {"E8", DivisorKind::Exceptional, 8},
                         {"L2", DivisorKind::Strict, 1}};
        want.points = {{"L1", "E3"}, {"E3", "E8"}, {"E8", "E4"}, {"E8", "L2"}};
        CHECK(same_graph(g, want));
        ResolutionGraph h = build_graph(FamilyParams{3, 2, true});
        ResolutionGraph want2;
        want2.divisors = {{"L1", DivisorKind::Strict, 1},
                          {"E3", DivisorKind::Exceptional, 3},
                          {"E5", DivisorKind::Exceptional, 5},
                          {"L2", DivisorKind::Strict, 1}};
        want2.points = {{"L1", "E3"}, {"E3", "E5"}, {"E5", "L2"}, {"E5", "L2"}};
        CHECK(same_graph(h, want2));
        for (int a = 2; a <= 6; ++a)
            for (int b = 1; b <= 7; ++b) {
                FamilyParams p{a, b == 7 ? std::nullopt : std::optional<int>(b), true};
                CHECK(same_graph(build_graph(p), expected_family_graph(p)));
            }
    }

    TEST_CASE("curves without the line") {
        ResolutionGraph cusp = build_graph(CurveSpec{3, BiPoly::constant(1), false});
        std::multiset<long long> exc, str;
        for (const auto& d : cusp.divisors) (d.kind == DivisorKind::Exceptional ? exc : str).insert(d.mult);
        CHECK(exc == std::multiset<long long>{2, 3, 6});
        CHECK(str == std::multiset<long long>{1});
        CHECK(cusp.points.size() == 3);
        // x^2 - y^4 splits into two smooth branches over Q
        ResolutionGraph tac = build_graph(CurveSpec{4, BiPoly::constant(1), false});
        int strict = 0;
        for (const auto& d : tac.divisors) strict += d.kind == DivisorKind::Strict;
        CHECK(strict == 2);
        for (int k = 3; k <= 9; ++k) {
            for (const auto& u : {BiPoly::constant(1), BiPoly::constant(1) + BiPoly::y()}) {
                CurveSpec c{k, u, false};
                auto g = build_graph(c);
                CHECK_NOTHROW(validate(g));
                for (const auto& ch : chart_equations(c)) CHECK(verify_normal_crossing(ch));
            }
        }
    }

    TEST_CASE("word names") {
        CHECK(word_name({Y}) == "pi_y");
        CHECK(word_name({X, X, Y}) == "pi_x^2 o pi_y");
        CHECK(word_name({X, Y, X}) == "pi_x o pi_y o pi_x");
        CHECK(chart_schedule(4).size() == 3);
        CHECK(chart_schedule(5).size() == 5);
    }
}
