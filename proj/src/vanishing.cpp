#include "motdt/vanishing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "motdt/error.hpp"

namespace motdt {

const Divisor* ResolutionGraph::find(const std::string& id) const {
    for (const auto& d : divisors)
        if (d.id == id) return &d;
    return nullptr;
}

ResolutionGraph point_graph(long long m) {
    ResolutionGraph g;
    g.dim = 1;
    g.divisors.push_back({"P", DivisorKind::Exceptional, m});
    return g;
}

void validate(const ResolutionGraph& g) {
    if (g.dim != 1 && g.dim != 2) throw Error(Errc::InvalidGraph, "ambient dimension must be 1 or 2");
    std::set<std::string> ids;
    for (const auto& d : g.divisors) {
        if (d.mult < 1) throw Error(Errc::InvalidGraph, "divisor " + d.id + " has multiplicity < 1");
        if (!ids.insert(d.id).second) throw Error(Errc::InvalidGraph, "duplicate divisor id " + d.id);
    }
    if (g.dim == 1) {
        if (g.divisors.size() != 1 || !g.points.empty())
            throw Error(Errc::InvalidGraph, "a one-dimensional graph is a single point");
        return;
    }
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [p, q] : g.points) {
        const Divisor* a = g.find(p);
        const Divisor* b = g.find(q);
        if (!a || !b) throw Error(Errc::InvalidGraph, "point references unknown divisor " + (a ? q : p));
        if (p == q) throw Error(Errc::InvalidGraph, "divisor " + p + " meets itself");
        if (a->kind == DivisorKind::Strict && b->kind == DivisorKind::Strict)
            throw Error(Errc::InvalidGraph, "strict branches " + p + " and " + q + " meet away from the exceptional locus");
        adj[p].push_back(q);
        adj[q].push_back(p);
    }
    std::vector<std::string> exc;
    for (const auto& d : g.divisors)
        if (d.kind == DivisorKind::Exceptional) exc.push_back(d.id);
    if (exc.empty()) throw Error(Errc::InvalidGraph, "no exceptional divisor");
    std::set<std::string> seen{exc.front()};
    std::vector<std::string> stack{exc.front()};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (const auto& nb : adj[cur])
            if (g.find(nb)->kind == DivisorKind::Exceptional && seen.insert(nb).second) stack.push_back(nb);
    }
    if (seen.size() != exc.size()) throw Error(Errc::InvalidGraph, "exceptional locus is not connected");
    for (const auto& d : g.divisors)
        if (d.kind == DivisorKind::Strict && adj[d.id].empty())
            throw Error(Errc::InvalidGraph, "strict branch " + d.id + " misses the exceptional locus");
}

static std::pair<std::vector<std::tuple<std::string, int, long long>>,
                 std::vector<std::pair<std::string, std::string>>>
canonical(const ResolutionGraph& g) {
    std::vector<std::tuple<std::string, int, long long>> d;
    for (const auto& x : g.divisors) d.emplace_back(x.id, static_cast<int>(x.kind), x.mult);
    std::sort(d.begin(), d.end());
    auto p = g.points;
    for (auto& [a, b] : p)
        if (b < a) std::swap(a, b);
    std::sort(p.begin(), p.end());
    return {d, p};
}

bool same_graph(const ResolutionGraph& x, const ResolutionGraph& y) {
    return x.dim == y.dim && canonical(x) == canonical(y);
}

std::map<std::string, ExceptionalStratum> exceptional_strata(const ResolutionGraph& g) {
    std::map<std::string, ExceptionalStratum> r;
    for (const auto& d : g.divisors) {
        if (d.kind != DivisorKind::Exceptional) continue;
        ExceptionalStratum s;
        for (const auto& [p, q] : g.points) {
            const std::string* other = nullptr;
            if (p == d.id) other = &q;
            if (q == d.id) other = &p;
            if (!other) continue;
            long long mj = g.find(*other)->mult;
            s.branches.push_back(mj);
            s.removed.push_back(std::gcd(d.mult, mj));
        }
        s.cover = cyclic_cover(d.mult, s.branches);
        r.emplace(d.id, std::move(s));
    }
    return r;
}

FracRat integrate_local(const ResolutionGraph& g) {
    validate(g);
    FracPoly one = FracPoly::constant(1);
    if (g.dim == 1) {
        // L^{-1/2} (1 - [mu_m])
        FracRat lhalf_inv(FracPoly::uv(Rat(-1, 2), -1));
        return lhalf_inv * (FracRat::integer(1) - hsp_mu(g.divisors.front().mult));
    }
    FracRat total = FracRat::integer(1);  // strict-transform bookkeeping B = 1
    for (const auto& [id, s] : exceptional_strata(g)) total -= hsp_cover_open(s.cover, s.removed);
    FracRat one_minus_L(one - FracPoly::uv(1));
    for (const auto& [p, q] : g.points) {
        const Divisor* a = g.find(p);
        const Divisor* b = g.find(q);
        total -= one_minus_L * hsp_mu(std::gcd(a->mult, b->mult));
    }
    // hsp(L^{-1}) = (uv)^{-1}
    return total * FracRat(FracPoly::uv(-1));
}

bool thom_sebastiani_check(const ResolutionGraph& g1, const ResolutionGraph& g2, const ResolutionGraph& g12) {
    return integrate_local(g12) == integrate_local(g1) * integrate_local(g2);
}

}  // namespace motdt
