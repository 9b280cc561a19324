#include "zpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace motdt::detail {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive(const ZPoly& p) {
    ZPoly r = p;
    trim(r);
    if (r.empty()) return r;
    mpz_class g = content(r);
    if (r.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

ZPoly derivative(const ZPoly& p) {
    ZPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

// pseudo-remainder of a by b (b nonzero)
static ZPoly prem(ZPoly a, const ZPoly& b) {
    const int db = degree(b);
    const mpz_class& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        mpz_class la = a.back();
        int shift = degree(a) - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive(a0), b = primitive(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        if (degree(b) == 0) return ZPoly{1};
        ZPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ZPoly exact_div(const ZPoly& a0, const ZPoly& b) {
    ZPoly a = a0;
    trim(a);
    if (b.empty()) throw std::domain_error("exact_div by zero polynomial");
    if (a.empty()) return a;
    const int db = degree(b);
    if (degree(a) < db) throw std::domain_error("exact_div: not divisible");
    ZPoly q(degree(a) - db + 1);
    for (int k = degree(a) - db; k >= 0; --k) {
        const mpz_class& lead = a[k + db];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), b.back().get_mpz_t()))
            throw std::domain_error("exact_div: not divisible");
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
        for (int i = 0; i <= db; ++i) a[k + i] -= t * b[i];
        q[k] = t;
    }
    trim(a);
    if (!a.empty()) throw std::domain_error("exact_div: not divisible");
    trim(q);
    return q;
}

bool divides(const ZPoly& b, const ZPoly& a) {
    try {
        exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

mpz_class eval(const ZPoly& p, const mpz_class& t) {
    mpz_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace motdt::detail
