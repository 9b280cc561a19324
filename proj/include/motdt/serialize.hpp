#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "motdt/blowup.hpp"
#include "motdt/covers.hpp"
#include "motdt/motive.hpp"
#include "motdt/quiver.hpp"
#include "motdt/report.hpp"
#include "motdt/series.hpp"
#include "motdt/spectrum.hpp"
#include "motdt/vanishing.hpp"

namespace motdt {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "motdt.report/1";

// integer when it fits in 64 bits, decimal string otherwise
json to_json(const mpz_class& z);
json to_json(const FracPoly& p);  // [{eu, ev, c}]
json to_json(const FracRat& r);   // {num, den}
json to_json(const MotSeries& s);  // {order, entries: [{d0, d1, coeff}]}
json to_json(const CoverData& d);  // {m, c, g, chars}
json to_json(const ResolutionGraph& g);  // {dim, divisors, points}
json to_json(const MotiveExpr& e);
json to_json(const Chart& c);
json to_json(const StableRay& r);
json to_json(const InvariantsReport& r);

FracPoly frac_poly_from_json(const json& j);
FracRat frac_rat_from_json(const json& j);
ResolutionGraph graph_from_json(const json& j);  // ParseError, then validate

json resolve_json(const FamilyParams& p);
// walls i in [lo, hi]: g-vector of T_i (i >= 0) or E_i (i < 0) and its dual stable ray
json walls_json(long long lo, long long hi);
std::string walls_tsv(long long lo, long long hi);

std::string b_string(const std::optional<int>& b);
std::string report_text(const InvariantsReport& r);
std::string resolve_text(const FamilyParams& p);

}  // namespace motdt
