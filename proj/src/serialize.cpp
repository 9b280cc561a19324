#include "motdt/serialize.hpp"

#include <sstream>

#include "motdt/error.hpp"

namespace motdt {

json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

static json rat_json(const Rat& r) { return rat_string(r); }

static Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw Error(Errc::ParseError, "exponent must be an integer or a \"p/q\" string");
}

static mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return zz(j.get<long long>());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(Errc::ParseError, "bad integer " + j.dump());
        return z;
    }
    throw Error(Errc::ParseError, "coefficient must be an integer");
}

json to_json(const FracPoly& p) {
    json a = json::array();
    for (const auto& [eu, ev, c] : p.exponent_terms()) a.push_back({{"eu", rat_json(eu)}, {"ev", rat_json(ev)}, {"c", to_json(c)}});
    return a;
}

json to_json(const FracRat& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

FracPoly frac_poly_from_json(const json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a list of terms");
    FracPoly p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("eu") || !t.contains("ev") || !t.contains("c"))
            throw Error(Errc::ParseError, "term needs eu, ev, c");
        p += FracPoly::monomial(rat_from_json(t["eu"]), rat_from_json(t["ev"]), mpz_from_json(t["c"]));
    }
    return p;
}

FracRat frac_rat_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw Error(Errc::ParseError, "fraction needs num, den");
    return FracRat(frac_poly_from_json(j["num"]), frac_poly_from_json(j["den"]));
}

json to_json(const MotSeries& s) {
    json e = json::array();
    for (const auto& [d, c] : s.coeffs()) e.push_back({{"d0", d.d0}, {"d1", d.d1}, {"coeff", to_json(c)}});
    return {{"order", s.order()}, {"entries", e}};
}

json to_json(const CoverData& d) { return {{"m", d.m}, {"c", d.c}, {"g", d.g}, {"chars", d.h01_chars}}; }

static const char* kind_name(DivisorKind k) { return k == DivisorKind::Exceptional ? "exceptional" : "strict"; }

json to_json(const ResolutionGraph& g) {
    json ds = json::array();
    for (const auto& d : g.divisors) ds.push_back({{"id", d.id}, {"kind", kind_name(d.kind)}, {"mult", d.mult}});
    json ps = json::array();
    for (const auto& [x, y] : g.points) ps.push_back({x, y});
    return {{"dim", g.dim}, {"divisors", ds}, {"points", ps}};
}

ResolutionGraph graph_from_json(const json& j) {
    ResolutionGraph g;
    try {
        g.dim = j.at("dim").get<int>();
        for (const auto& d : j.at("divisors")) {
            Divisor v;
            v.id = d.at("id").get<std::string>();
            std::string k = d.at("kind").get<std::string>();
            if (k == "exceptional") v.kind = DivisorKind::Exceptional;
            else if (k == "strict") v.kind = DivisorKind::Strict;
            else throw Error(Errc::ParseError, "unknown divisor kind " + k);
            v.mult = d.at("mult").get<long long>();
            g.divisors.push_back(v);
        }
        if (j.contains("points"))
            for (const auto& p : j.at("points")) {
                if (!p.is_array() || p.size() != 2) throw Error(Errc::ParseError, "point must be a pair of ids");
                g.points.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
            }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("graph JSON: ") + e.what());
    }
    validate(g);
    return g;
}

json to_json(const MotiveExpr& e) {
    using K = MotiveExpr::Kind;
    auto children = [&] {
        json a = json::array();
        for (const auto& c : e.children()) a.push_back(to_json(c));
        return a;
    };
    switch (e.kind()) {
        case K::One: return {{"kind", "one"}};
        case K::Scalar: return {{"kind", "scalar"}, {"value", e.value()}};
        case K::LefschetzHalf: return {{"kind", "lefschetz_half"}};
        case K::Mu: return {{"kind", "mu"}, {"n", e.value()}};
        case K::ProjLine: return {{"kind", "proj_line"}};
        case K::Affine: return {{"kind", "affine"}, {"n", e.value()}};
        case K::GL: return {{"kind", "gl"}, {"n", e.value()}};
        case K::Cover: return {{"kind", "cover"}, {"label", e.label()}, {"cover", to_json(e.cover())}};
        case K::Sum: return {{"kind", "sum"}, {"terms", children()}};
        case K::Product: return {{"kind", "product"}, {"factors", children()}};
        case K::Power: return {{"kind", "power"}, {"exp", e.value()}, {"base", to_json(e.children().at(0))}};
    }
    return {};
}

json to_json(const Chart& c) {
    json word = json::array();
    for (Blow b : c.word) word.push_back(b == Blow::PiX ? "pi_x" : "pi_y");
    json br = json::array();
    for (std::size_t i = 0; i < c.branch_ids.size(); ++i)
        br.push_back({{"id", c.branch_ids[i]}, {"residual", c.branch_residuals[i].to_string()}});
    return {{"name", c.name},          {"alt_name", c.alt_name},
            {"word", word},            {"total", c.total.to_string()},
            {"p", c.p},                {"q", c.q},
            {"residual", c.residual.to_string()},
            {"x_axis", c.x_axis},      {"y_axis", c.y_axis},
            {"branches", br},          {"normal_crossing", verify_normal_crossing(c)}};
}

static const char* ray_kind_name(RayKind k) {
    switch (k) {
        case RayKind::Pt: return "pt";
        case RayKind::Curve: return "curve";
        case RayKind::TwoCurve: return "two_curve";
    }
    return "";
}

json to_json(const StableRay& r) {
    RankDegree rd = rank_degree(r.dim);
    return {{"name", r.name()},
            {"kind", ray_kind_name(r.kind)},
            {"dim", {r.dim.d0, r.dim.d1}},
            {"z", {{"re", rat_json(r.re)}, {"im", r.im}}},
            {"rank", rd.rank},
            {"degree", rd.degree}};
}

std::string b_string(const std::optional<int>& b) { return b ? std::to_string(*b) : "inf"; }

static json b_json(const std::optional<int>& b) {
    if (b) return *b;
    return "inf";
}

static json bps_json(const BpsEntry& e, long long k) {
    json j;
    if (k > 0) j["k"] = k;
    if (e.expr) {
        j["expr"] = e.expr->to_string();
        j["tree"] = to_json(*e.expr);
    }
    j["hsp"] = to_json(e.hsp);
    j["hsp_text"] = e.hsp.to_string();
    return j;
}

json to_json(const InvariantsReport& r) {
    json c = json::array(), c2 = json::array();
    for (std::size_t k = 0; k < r.bps_c.size(); ++k) c.push_back(bps_json(r.bps_c[k], k + 1));
    for (std::size_t k = 0; k < r.bps_2c.size(); ++k) c2.push_back(bps_json(r.bps_2c[k], k + 1));
    json rays = json::array();
    for (const auto& ray : r.rays) rays.push_back(to_json(ray));
    return {{"schema", kReportSchema},
            {"params", {{"a", r.a}, {"b", b_json(r.b)}, {"order", r.order}}},
            {"bps", {{"pt", bps_json(r.bps_pt, 0)}, {"two_curve", c2}, {"curve", c}}},
            {"hsp1", to_json(r.hsp1)},
            {"hsp2", to_json(r.hsp2)},
            {"gv1", r.gv1},
            {"gv2", r.gv2},
            {"dim_con", r.dim_con},
            {"dim_con_ab", r.dim_con_ab},
            {"graph", to_json(r.graph)},
            {"rays", rays},
            {"partition", to_json(r.partition)}};
}

// charts with their axis labels replaced by graph divisor ids
static std::vector<Chart> named_charts(const BiPoly& curve, const FamilyParams& p) {
    std::map<std::string, std::string> names;
    build_graph(curve_spec(p), &names);
    std::vector<Chart> cs = chart_equations(curve, p);
    for (auto& c : cs)
        for (std::string* l : {&c.x_axis, &c.y_axis}) {
            auto it = names.find(*l);
            if (it != names.end()) *l = it->second;
        }
    return cs;
}

json resolve_json(const FamilyParams& p) {
    BiPoly curve = family_curve(p);
    json charts = json::array();
    for (const auto& c : named_charts(curve, p)) charts.push_back(to_json(c));
    return {{"params", {{"a", p.a}, {"b", b_json(p.b)}, {"include_line", p.include_line}}},
            {"curve", curve.to_string()},
            {"charts", charts},
            {"graph", to_json(build_graph(p))}};
}

static const char* wall_name(long long i) { return i >= 0 ? "T" : "E"; }

json walls_json(long long lo, long long hi) {
    if (lo > hi) throw Error(Errc::InvalidParams, "empty wall range");
    json a = json::array();
    for (long long i = lo; i <= hi; ++i) {
        GVector g = i >= 0 ? g_vector_T(i) : g_vector_E(i);
        StableRay r = wall_dual_ray(i);
        a.push_back({{"i", i},
                     {"wall", std::string(wall_name(i)) + "_" + std::to_string(i)},
                     {"g", {g.c0, g.c1}},
                     {"dual", r.name()},
                     {"dim", {r.dim.d0, r.dim.d1}},
                     {"pairing", euler_pairing(g, r.dim)}});
    }
    return a;
}

std::string walls_tsv(long long lo, long long hi) {
    std::ostringstream o;
    o << "i\twall\tg0\tg1\tdual\td0\td1\tpairing\n";
    for (const auto& w : walls_json(lo, hi))
        o << w["i"].get<long long>() << '\t' << w["wall"].get<std::string>() << '\t' << w["g"][0] << '\t' << w["g"][1]
          << '\t' << w["dual"].get<std::string>() << '\t' << w["dim"][0] << '\t' << w["dim"][1] << '\t' << w["pairing"]
          << '\n';
    return o.str();
}

static std::string show(const BpsEntry& e) {
    return e.expr ? e.expr->to_string() : "hsp " + e.hsp.to_string();
}

std::string report_text(const InvariantsReport& r) {
    std::ostringstream o;
    o << "Invariants for (a, b) = (" << r.a << ", " << b_string(r.b) << "), order " << r.order << "\n\n";
    o << "BPS^p_k     = " << show(r.bps_pt) << "   (all k)\n";
    o << "BPS^2C_1    = " << show(r.bps_2c[0]) << "\n";
    o << "BPS^2C_k    = 0   (k > 1)\n";
    o << "BPS^C_1     = " << show(r.bps_c[0]) << "\n";
    if (r.bps_c.size() > 1) o << "BPS^C_2     = " << show(r.bps_c[1]) << "\n";
    o << "BPS^C_k     = 0   (k > 2)\n\n";
    o << "hsp(BPS^C_1) = " << r.hsp1.to_string() << "\n";
    o << "hsp(BPS^C_2) = " << r.hsp2.to_string() << "\n\n";
    o << "gv1 = " << r.gv1 << "\n";
    o << "gv2 = " << r.gv2 << "\n";
    o << "dim_con = " << r.dim_con << "\n";
    o << "dim_con_ab = " << r.dim_con_ab << "\n\n";
    o << "stable rays (descending phase):\n";
    for (const auto& ray : r.rays) o << "  " << ray.name() << "  (" << ray.dim.d0 << ", " << ray.dim.d1 << ")\n";
    return o.str();
}

std::string resolve_text(const FamilyParams& p) {
    std::ostringstream o;
    BiPoly curve = family_curve(p);
    o << "curve: " << curve.to_string() << "\n\n";
    for (const auto& c : named_charts(curve, p)) {
        o << c.name << "  [" << c.alt_name << "]\n";
        o << "  total    = " << c.total.to_string() << "\n";
        o << "  x^" << c.p << " y^" << c.q << " * (" << c.residual.to_string() << ")\n";
        o << "  x = 0: " << c.x_axis << ",  y = 0: " << c.y_axis << "\n";
    }
    ResolutionGraph g = build_graph(p);
    o << "\ndivisors:\n";
    for (const auto& d : g.divisors) o << "  " << d.id << "  " << kind_name(d.kind) << "  mult " << d.mult << "\n";
    o << "points:\n";
    for (const auto& [x, y] : g.points) o << "  " << x << " - " << y << "\n";
    return o.str();
}

}  // namespace motdt
