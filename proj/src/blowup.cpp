#include "motdt/blowup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "motdt/error.hpp"

namespace motdt {

void validate_params(const FamilyParams& p) {
    if (p.a < 2) throw Error(Errc::InvalidParams, "a must be >= 2");
    if (p.b && *p.b < 1) throw Error(Errc::InvalidParams, "b must be >= 1 or inf");
}

CurveSpec curve_spec(const FamilyParams& p) {
    validate_params(p);
    CurveSpec c;
    c.include_line = p.include_line;
    if (!p.b || p.a <= *p.b) {
        c.k = 2 * p.a - 1;
        c.u = BiPoly::constant(1);
        if (p.b) c.u = c.u + BiPoly::monomial(0, 2 * (*p.b - p.a) + 1);
    } else {
        c.k = 2 * *p.b;
        c.u = BiPoly::constant(1) + BiPoly::monomial(0, 2 * (p.a - *p.b) - 1);
    }
    return c;
}

static void check_spec(const CurveSpec& c) {
    if (c.k < 2) throw Error(Errc::InvalidParams, "k must be >= 2");
    if (c.u.deg_x() > 0) throw Error(Errc::InvalidParams, "u must be a polynomial in y");
    if (c.u.coeff(0, 0) == 0) throw Error(Errc::InvalidParams, "u(0) must be nonzero");
}

BiPoly curve_polynomial(const CurveSpec& c) {
    check_spec(c);
    BiPoly g = BiPoly::monomial(2, 0) - BiPoly::monomial(0, c.k) * c.u;
    return c.include_line ? BiPoly::y() * g : g;
}

BiPoly family_curve(const FamilyParams& p) { return curve_polynomial(curve_spec(p)); }

namespace {

// square root of a polynomial in y over Q, if it is a perfect square
std::optional<BiPoly> sqrt_in_y(const BiPoly& u) {
    std::vector<mpq_class> a = u.on_x_axis_zero();
    int d = uniq::degree(a);
    if (d < 0 || d % 2 != 0) return std::nullopt;
    auto qsqrt = [](const mpq_class& q) -> std::optional<mpq_class> {
        if (q < 0) return std::nullopt;
        if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
            return std::nullopt;
        mpz_class n, m;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(m.get_mpz_t(), q.get_den_mpz_t());
        return mpq_class(n, m);
    };
    auto s0 = qsqrt(a[0]);
    if (!s0) return std::nullopt;
    // s_n = (a_n - sum_{0<i<n} s_i s_{n-i}) / (2 s_0)
    std::vector<mpq_class> s{*s0};
    for (int n = 1; n <= d / 2; ++n) {
        mpq_class acc = a[n];
        for (int i = 1; i < n; ++i) acc -= s[i] * s[n - i];
        s.push_back(acc / (2 * s[0]));
    }
    BiPoly r;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) r = r + BiPoly::monomial(0, i, s[i]);
    if (!(r * r == u)) return std::nullopt;
    return r;
}

struct Branch {
    std::string id;
    BiPoly poly;
};

std::vector<Branch> strict_branches(const CurveSpec& c) {
    std::vector<Branch> r;
    std::string base = c.include_line ? "L" : "S";
    if (c.k % 2 == 0)
        if (auto s = sqrt_in_y(c.u)) {
            BiPoly t = BiPoly::monomial(0, c.k / 2) * *s;
            r.push_back({c.include_line ? "L2" : "S1", BiPoly::x() - t});
            r.push_back({c.include_line ? "L3" : "S2", BiPoly::x() + t});
            return r;
        }
    r.push_back({c.include_line ? "L2" : "S", BiPoly::monomial(2, 0) - BiPoly::monomial(0, c.k) * c.u});
    return r;
}

BiPoly pull_back(const BiPoly& p, Blow b) {
    return b == Blow::PiX ? p.substitute_monomial(1, 1, 0, 1) : p.substitute_monomial(1, 0, 1, 1);
}

std::string prefix_label(const std::vector<Blow>& w, std::size_t len) {
    std::string s = "e";
    for (std::size_t i = 0; i < len; ++i) s += w[i] == Blow::PiX ? 'X' : 'Y';
    return s;
}

bool axis_ok(const BiPoly& r, bool x_axis) {
    std::vector<mpq_class> on = x_axis ? r.on_x_axis_zero() : r.on_y_axis_zero();
    if (on.empty() || !uniq::squarefree(on)) return false;
    // gcd(R, R_x, R_y) restricted to the axis: no singular point of R on it
    std::vector<mpq_class> rx = x_axis ? r.dx().on_x_axis_zero() : r.dx().on_y_axis_zero();
    std::vector<mpq_class> ry = x_axis ? r.dy().on_x_axis_zero() : r.dy().on_y_axis_zero();
    std::vector<mpq_class> g = uniq::gcd(uniq::gcd(on, rx), ry);
    return uniq::degree(g) <= 0;
}

std::string exceptional_name(long long mult, const std::set<std::string>& taken, const std::string& label) {
    std::string n = "E" + std::to_string(mult);
    return taken.count(n) ? n + "_" + label : n;
}

}  // namespace

std::string word_name(const std::vector<Blow>& w) {
    if (w.empty()) return "id";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += " o ";
        s += w[i] == Blow::PiX ? "pi_x" : "pi_y";
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::vector<std::vector<Blow>> chart_schedule(int k) {
    const int N = k / 2;
    std::vector<std::vector<Blow>> r;
    for (int j = 0; j < N; ++j) {
        std::vector<Blow> w(j, Blow::PiX);
        w.push_back(Blow::PiY);
        r.push_back(w);
    }
    std::vector<Blow> xs(N, Blow::PiX);
    if (k % 2 == 0) {
        r.push_back(xs);
        return r;
    }
    std::vector<Blow> w = xs;
    w.push_back(Blow::PiX);
    r.push_back(w);
    w = xs;
    w.push_back(Blow::PiY);
    w.push_back(Blow::PiX);
    r.push_back(w);
    w.back() = Blow::PiY;
    r.push_back(w);
    return r;
}

Chart make_chart(const CurveSpec& c, const std::vector<Blow>& word) {
    Chart ch;
    ch.word = word;
    ch.name = word_name(word);
    ch.alt_name = ch.name;
    ch.total = curve_polynomial(c);
    ch.x_axis = "X0";
    ch.y_axis = c.include_line ? "L1" : "Y0";
    std::vector<Branch> br = strict_branches(c);
    for (std::size_t i = 0; i < word.size(); ++i) {
        std::string e = prefix_label(word, i);
        ch.total = pull_back(ch.total, word[i]);
        for (auto& b : br) b.poly = pull_back(b.poly, word[i]);
        if (word[i] == Blow::PiX)
            ch.y_axis = e;
        else
            ch.x_axis = e;
    }
    auto [p, q] = ch.total.min_exponents();
    ch.p = p;
    ch.q = q;
    ch.residual = ch.total.divide_monomial(p, q);
    for (auto& b : br) {
        auto [bp, bq] = b.poly.min_exponents();
        ch.branch_ids.push_back(b.id);
        ch.branch_residuals.push_back(b.poly.divide_monomial(bp, bq));
    }
    return ch;
}

std::vector<Chart> chart_equations(const CurveSpec& c) {
    check_spec(c);
    std::vector<Chart> r;
    const int N = c.k / 2;
    for (const auto& w : chart_schedule(c.k)) {
        Chart ch = make_chart(c, w);
        if (c.k % 2 == 1 && w.size() > static_cast<std::size_t>(N)) {
            // the three extra odd-case charts also carry shifted-word labels
            std::vector<Blow> alt(N, Blow::PiX);
            if (w.size() == static_cast<std::size_t>(N) + 1) {
                alt.push_back(Blow::PiY);
            } else if (w.back() == Blow::PiY) {
                alt.push_back(Blow::PiX);
                alt.push_back(Blow::PiY);
            } else {
                alt.push_back(Blow::PiX);
                alt.push_back(Blow::PiX);
            }
            ch.alt_name = word_name(alt);
        }
        r.push_back(std::move(ch));
    }
    return r;
}

std::vector<Chart> chart_equations(const BiPoly& curve, const FamilyParams& p) {
    CurveSpec c = curve_spec(p);
    if (!(curve == curve_polynomial(c)))
        throw Error(Errc::InvalidParams, "curve is not the family curve for these parameters");
    return chart_equations(c);
}

bool verify_normal_crossing(const Chart& c) {
    const BiPoly& R = c.residual;
    if (R.is_zero()) return false;
    if (!(c.total == BiPoly::monomial(c.p, c.q) * R)) return false;
    auto [mi, mj] = R.min_exponents();
    if (mi > 0 || mj > 0) return false;
    if (c.p > 0 && !axis_ok(R, true)) return false;
    if (c.q > 0 && !axis_ok(R, false)) return false;
    // at the origin: at most two smooth components, meeting transversally
    std::vector<std::pair<mpq_class, mpq_class>> lin;
    if (c.p > 0) lin.emplace_back(1, 0);
    if (c.q > 0) lin.emplace_back(0, 1);
    for (const auto& b : c.branch_residuals) {
        if (b.coeff(0, 0) != 0) continue;
        mpq_class bx = b.coeff(1, 0), by = b.coeff(0, 1);
        if (bx == 0 && by == 0) return false;
        lin.emplace_back(bx, by);
    }
    if (lin.size() > 2) return false;
    if (lin.size() == 2 && lin[0].first * lin[1].second - lin[0].second * lin[1].first == 0) return false;
    return true;
}

ResolutionGraph build_graph(const CurveSpec& c) { return build_graph(c, nullptr); }

ResolutionGraph build_graph(const CurveSpec& c, std::map<std::string, std::string>* names) {
    std::vector<Chart> charts = chart_equations(c);
    std::map<std::string, long long> mult;
    std::map<std::string, int> appearances;
    std::map<std::string, std::size_t> first_chart;
    std::map<std::pair<std::string, std::string>, int> nonzero_count;
    std::vector<std::pair<std::string, std::string>> points;

    for (std::size_t idx = 0; idx < charts.size(); ++idx) {
        const Chart& ch = charts[idx];
        if (!verify_normal_crossing(ch))
            throw Error(Errc::NormalCrossingFailure, "chart " + ch.name + " is not normal crossing");
        for (auto [label, e] : {std::pair{ch.x_axis, ch.p}, std::pair{ch.y_axis, ch.q}}) {
            auto it = mult.find(label);
            if (it != mult.end() && it->second != e)
                throw Error(Errc::GraphMismatch, "divisor " + label + " has inconsistent multiplicity");
            mult[label] = e;
            if (e > 0) ++appearances[label];
        }
        if (ch.p > 0 && ch.q > 0) points.emplace_back(ch.x_axis, ch.y_axis);
        for (int axis = 0; axis < 2; ++axis) {
            const std::string& label = axis == 0 ? ch.x_axis : ch.y_axis;
            if ((axis == 0 ? ch.p : ch.q) == 0) continue;
            bool first = !first_chart.count(label);
            if (first) first_chart[label] = idx;
            for (std::size_t b = 0; b < ch.branch_ids.size(); ++b) {
                const BiPoly& r = ch.branch_residuals[b];
                std::vector<mpq_class> on = axis == 0 ? r.on_x_axis_zero() : r.on_y_axis_zero();
                int ord = std::max(0, uniq::order_at_zero(on));
                int nz = uniq::degree(on) - ord;
                if (ord > 0) points.emplace_back(label, ch.branch_ids[b]);
                auto key = std::make_pair(label, ch.branch_ids[b]);
                if (first) {
                    nonzero_count[key] = nz;
                    for (int i = 0; i < nz; ++i) points.emplace_back(label, ch.branch_ids[b]);
                } else if (nonzero_count[key] != nz) {
                    throw Error(Errc::GraphMismatch, "charts disagree on the points of " + label);
                }
            }
        }
    }

    ResolutionGraph g;
    g.dim = 2;
    std::map<std::string, std::string> name;
    std::vector<std::pair<long long, std::string>> exc;
    for (const auto& [label, m] : mult) {
        if (m == 0) continue;
        if (label == "X0" || label == "Y0")
            throw Error(Errc::GraphMismatch, "an original axis acquired multiplicity");
        if (label == "L1") continue;
        if (appearances[label] != 2)
            throw Error(Errc::GraphMismatch, "exceptional divisor " + label + " seen in " +
                                                 std::to_string(appearances[label]) + " charts");
        exc.emplace_back(m, label);
    }
    std::sort(exc.begin(), exc.end());
    if (mult.count("L1") && mult["L1"] > 0) {
        g.divisors.push_back({"L1", DivisorKind::Strict, mult["L1"]});
        name["L1"] = "L1";
    }
    std::set<std::string> taken;
    for (const auto& [m, label] : exc) {
        std::string n = exceptional_name(m, taken, label);
        taken.insert(n);
        name[label] = n;
        g.divisors.push_back({n, DivisorKind::Exceptional, m});
    }
    for (const auto& id : charts.front().branch_ids) {
        g.divisors.push_back({id, DivisorKind::Strict, 1});
        name[id] = id;
    }
    for (const auto& [p, q] : points) {
        if (!name.count(p) || !name.count(q))
            throw Error(Errc::GraphMismatch, "intersection with a divisor of multiplicity 0");
        g.points.emplace_back(name[p], name[q]);
    }
    validate(g);
    if (names) *names = name;
    return g;
}

ResolutionGraph expected_family_graph(const FamilyParams& p) {
    CurveSpec c = curve_spec(p);
    std::vector<Branch> br = strict_branches(c);
    const int N = c.k / 2;
    const bool line = c.include_line;
    // step s (1-based) of the common chain has multiplicity 2s + 1 with the line, 2s without
    auto chain_mult = [&](int s) { return line ? 2 * s + 1 : 2 * s; };
    auto E = [](long long m) { return "E" + std::to_string(m); };
    ResolutionGraph g;
    g.dim = 2;
    if (line) g.divisors.push_back({"L1", DivisorKind::Strict, 1});
    for (int s = 1; s <= N; ++s) g.divisors.push_back({E(chain_mult(s)), DivisorKind::Exceptional, chain_mult(s)});
    if (line) g.points.emplace_back("L1", E(3));
    for (int s = 1; s < N; ++s) g.points.emplace_back(E(chain_mult(s)), E(chain_mult(s + 1)));
    std::string tip = E(chain_mult(N));
    if (c.k % 2 == 1) {
        long long mid = line ? 2 * N + 2 : 2 * N + 1;
        long long top = 2 * mid;
        g.divisors.push_back({E(mid), DivisorKind::Exceptional, mid});
        g.divisors.push_back({E(top), DivisorKind::Exceptional, top});
        g.points.emplace_back(tip, E(top));
        g.points.emplace_back(E(mid), E(top));
        tip = E(top);
    }
    for (const auto& b : br) g.divisors.push_back({b.id, DivisorKind::Strict, 1});
    for (const auto& b : br) {
        g.points.emplace_back(b.id, tip);
        if (c.k % 2 == 0 && br.size() == 1) g.points.emplace_back(b.id, tip);
    }
    return g;
}

ResolutionGraph build_graph(const FamilyParams& p) {
    ResolutionGraph g = build_graph(curve_spec(p));
    if (!same_graph(g, expected_family_graph(p)))
        throw Error(Errc::GraphMismatch, "assembled graph differs from the closed form");
    return g;
}

}  // namespace motdt
