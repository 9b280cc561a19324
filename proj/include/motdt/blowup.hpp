#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motdt/bipoly.hpp"
#include "motdt/vanishing.hpp"

namespace motdt {

enum class Blow { PiX, PiY };  // pi_x(x,y) = (xy, y), pi_y(x,y) = (x, xy)

// b = nullopt means b = infinity.
struct FamilyParams {
    int a = 2;
    std::optional<int> b;
    bool include_line = true;
};

void validate_params(const FamilyParams& p);

// The curve y^e (x^2 - y^k u(y)) with e = 1 if include_line, else 0.
struct CurveSpec {
    int k = 3;
    BiPoly u = BiPoly::constant(1);  // polynomial in y with u(0) != 0
    bool include_line = true;
};

CurveSpec curve_spec(const FamilyParams& p);
BiPoly curve_polynomial(const CurveSpec& c);
BiPoly family_curve(const FamilyParams& p);

struct Chart {
    // word[0] is the first blowup; the chart map is word[0] o word[1] o ...
    std::vector<Blow> word;
    std::string name;
    std::string alt_name;  // alternative label for this chart
    BiPoly total;
    int p = 0, q = 0;  // total = x^p y^q residual
    BiPoly residual;
    std::string x_axis, y_axis;  // divisors {x = 0} and {y = 0}
    std::vector<std::string> branch_ids;
    std::vector<BiPoly> branch_residuals;
};

std::string word_name(const std::vector<Blow>& w);
std::vector<std::vector<Blow>> chart_schedule(int k);
Chart make_chart(const CurveSpec& c, const std::vector<Blow>& word);
std::vector<Chart> chart_equations(const CurveSpec& c);
// curve must be family_curve(p)
std::vector<Chart> chart_equations(const BiPoly& curve, const FamilyParams& p);

bool verify_normal_crossing(const Chart& c);

ResolutionGraph build_graph(const CurveSpec& c);
// names: chart divisor label -> graph divisor id
ResolutionGraph build_graph(const CurveSpec& c, std::map<std::string, std::string>* names);
// also checks the result against expected_family_graph (GraphMismatch)
ResolutionGraph build_graph(const FamilyParams& p);
ResolutionGraph expected_family_graph(const FamilyParams& p);

}  // namespace motdt
