#include "motdt/spectrum.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "motdt/error.hpp"
#include "zpoly.hpp"

namespace motdt {

using detail::floor_div;
using detail::gcd_ll;
using detail::lcm_ll;
using detail::ZPoly;

Rat::Rat(long long n, long long d) {
    if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n, d);
    n_ = n / g;
    d_ = d / g;
}

Rat operator+(const Rat& x, const Rat& y) {
    long long l = std::lcm(x.d_, y.d_);
    return Rat(x.n_ * (l / x.d_) + y.n_ * (l / y.d_), l);
}
Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }
Rat operator*(const Rat& x, const Rat& y) { return Rat(x.n_ * y.n_, x.d_ * y.d_); }
Rat operator/(const Rat& x, const Rat& y) { return Rat(x.n_ * y.d_, x.d_ * y.n_); }
bool operator<(const Rat& x, const Rat& y) {
    return static_cast<__int128>(x.n_) * y.d_ < static_cast<__int128>(y.n_) * x.d_;
}

std::string rat_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat parse_rat(const std::string& s) {
    try {
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long d = std::stoll(s.substr(slash + 1));
        if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
        return Rat(std::stoll(s.substr(0, slash)), d);
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad rational '" + s + "'");
    }
}

// ---------------------------------------------------------------- FracPoly

static bool term_less(const FracPoly::Term& x, const FracPoly::Term& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
}

static void merge_sorted(std::vector<FracPoly::Term>& v) {
    std::sort(v.begin(), v.end(), term_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        mpz_class c = v[i].c;
        while (j < v.size() && v[j].a == v[i].a && v[j].b == v[i].b) c += v[j++].c;
        if (c != 0) {
            v[out].a = v[i].a;
            v[out].b = v[i].b;
            v[out].c = c;
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

void FracPoly::canonicalize() {
    if (t_.empty()) {
        K_ = 1;
        return;
    }
    long long g = K_;
    for (const auto& t : t_) {
        g = gcd_ll(g, gcd_ll(t.a, t.b));
        if (g == 1) break;
    }
    if (g > 1) {
        K_ /= g;
        for (auto& t : t_) {
            t.a /= g;
            t.b /= g;
        }
    }
}

FracPoly FracPoly::constant(const mpz_class& c) {
    FracPoly p;
    if (c != 0) p.t_.push_back({0, 0, c});
    return p;
}

FracPoly FracPoly::monomial(const Rat& eu, const Rat& ev, const mpz_class& c) {
    FracPoly p;
    if (c == 0) return p;
    p.K_ = lcm_ll(eu.denominator(), ev.denominator());
    p.t_.push_back({eu.numerator() * (p.K_ / eu.denominator()),
                    ev.numerator() * (p.K_ / ev.denominator()), c});
    p.canonicalize();
    return p;
}

FracPoly FracPoly::uv(const Rat& e, const mpz_class& c) { return monomial(e, e, c); }

FracPoly FracPoly::from_terms(const std::vector<std::tuple<Rat, Rat, mpz_class>>& terms) {
    long long L = 1;
    for (const auto& [eu, ev, c] : terms) L = lcm_ll(L, lcm_ll(eu.denominator(), ev.denominator()));
    std::vector<Term> v;
    for (const auto& [eu, ev, c] : terms)
        v.push_back({eu.numerator() * (L / eu.denominator()), ev.numerator() * (L / ev.denominator()), c});
    return from_level(L, std::move(v));
}

FracPoly FracPoly::from_level(long long L, std::vector<Term> terms) {
    FracPoly p;
    p.K_ = L;
    p.t_ = std::move(terms);
    merge_sorted(p.t_);
    p.canonicalize();
    return p;
}

std::vector<FracPoly::Term> FracPoly::at_level(long long L) const {
    long long f = L / K_;
    std::vector<Term> v = t_;
    if (f != 1)
        for (auto& t : v) {
            t.a *= f;
            t.b *= f;
        }
    return v;
}

std::vector<std::tuple<Rat, Rat, mpz_class>> FracPoly::exponent_terms() const {
    std::vector<std::tuple<Rat, Rat, mpz_class>> r;
    for (const auto& t : t_) r.emplace_back(Rat(t.a, K_), Rat(t.b, K_), t.c);
    return r;
}

mpz_class FracPoly::coeff(const Rat& eu, const Rat& ev) const {
    long long L = lcm_ll(K_, lcm_ll(eu.denominator(), ev.denominator()));
    if (L != K_) return 0;
    Term key{eu.numerator() * (K_ / eu.denominator()), ev.numerator() * (K_ / ev.denominator()), 0};
    auto it = std::lower_bound(t_.begin(), t_.end(), key, term_less);
    if (it != t_.end() && it->a == key.a && it->b == key.b) return it->c;
    return 0;
}

FracPoly FracPoly::operator-() const {
    FracPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long long L = lcm_ll(K_, o.K_);
    std::vector<Term> x = at_level(L), y = o.at_level(L), r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && term_less(x[i], y[j]))) {
            r.push_back(std::move(x[i++]));
        } else if (i == x.size() || term_less(y[j], x[i])) {
            r.push_back(std::move(y[j++]));
        } else {
            mpz_class c = x[i].c + y[j].c;
            if (c != 0) r.push_back({x[i].a, x[i].b, c});
            ++i;
            ++j;
        }
    }
    K_ = L;
    t_ = std::move(r);
    canonicalize();
    return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) { return *this += -o; }

FracPoly operator*(const FracPoly& x, const FracPoly& y) {
    if (x.is_zero() || y.is_zero()) return FracPoly();
    long long L = lcm_ll(x.K_, y.K_);
    std::vector<FracPoly::Term> xs = x.at_level(L), ys = y.at_level(L), r;
    r.reserve(xs.size() * ys.size());
    for (const auto& s : xs)
        for (const auto& t : ys) r.push_back({s.a + t.a, s.b + t.b, s.c * t.c});
    return FracPoly::from_level(L, std::move(r));
}

bool operator==(const FracPoly& x, const FracPoly& y) {
    if (x.K_ != y.K_ || x.t_.size() != y.t_.size()) return false;
    for (std::size_t i = 0; i < x.t_.size(); ++i)
        if (x.t_[i].a != y.t_[i].a || x.t_[i].b != y.t_[i].b || x.t_[i].c != y.t_[i].c) return false;
    return true;
}

FracPoly FracPoly::scaled(const mpz_class& c) const {
    if (c == 0) return FracPoly();
    FracPoly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

FracPoly FracPoly::divided(const mpz_class& c) const {
    FracPoly r = *this;
    for (auto& t : r.t_) {
        if (!mpz_divisible_p(t.c.get_mpz_t(), c.get_mpz_t()))
            throw std::domain_error("FracPoly::divided: not exact");
        mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

FracPoly FracPoly::shifted(const Rat& du, const Rat& dv) const {
    if (is_zero()) return *this;
    long long L = lcm_ll(K_, lcm_ll(du.denominator(), dv.denominator()));
    std::vector<Term> v = at_level(L);
    long long sa = du.numerator() * (L / du.denominator()), sb = dv.numerator() * (L / dv.denominator());
    for (auto& t : v) {
        t.a += sa;
        t.b += sb;
    }
    FracPoly r;
    r.K_ = L;
    r.t_ = std::move(v);  // shifting preserves the order
    r.canonicalize();
    return r;
}

FracPoly FracPoly::adams(long long n) const {
    FracPoly r = *this;
    for (auto& t : r.t_) {
        t.a *= n;
        t.b *= n;
    }
    r.canonicalize();
    return r;
}

FracPoly FracPoly::pow(unsigned n) const {
    FracPoly r = constant(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

mpz_class FracPoly::content() const {
    mpz_class g = 0;
    for (const auto& t : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class FracPoly::value_at_one() const {
    mpz_class s = 0;
    for (const auto& t : t_) s += t.c;
    return s;
}

static void append_var(std::ostringstream& os, char var, const Rat& e, bool& first) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << var;
    if (e == 1) return;
    if (e.denominator() == 1 && e > 0)
        os << '^' << e.numerator();
    else
        os << "^(" << rat_string(e) << ')';
}

std::string FracPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& t : t_) {
        Rat eu(t.a, K_), ev(t.b, K_);
        mpz_class c = t.c;
        if (lead) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        lead = false;
        bool mono = eu != 0 || ev != 0;
        bool first = true;
        if (c != 1 || !mono) {
            os << c.get_str();
            first = false;
        }
        append_var(os, 'u', eu, first);
        append_var(os, 'v', ev, first);
    }
    return os.str();
}

// ---------------------------------------------------------------- helpers

namespace {

// Exact quotient num/den as Laurent polynomials, if it exists.
std::optional<FracPoly> exact_quotient(const FracPoly& num, const FracPoly& den) {
    if (num.is_zero()) return FracPoly();
    long long L = lcm_ll(num.level(), den.level());
    auto N = num.at_level(L), D = den.at_level(L);
    auto bounds = [](const std::vector<FracPoly::Term>& v) {
        long long minA = v[0].a, maxA = v[0].a, minB = v[0].b, maxB = v[0].b;
        for (const auto& t : v) {
            minA = std::min(minA, t.a);
            maxA = std::max(maxA, t.a);
            minB = std::min(minB, t.b);
            maxB = std::max(maxB, t.b);
        }
        return std::array<long long, 4>{minA, maxA, minB, maxB};
    };
    auto bn = bounds(N), bd = bounds(D);
    // the quotient's exponents are confined to this box
    long long qa0 = bn[0] - bd[0], qa1 = bn[1] - bd[1], qb0 = bn[2] - bd[2], qb1 = bn[3] - bd[3];
    if (qa0 > qa1 || qb0 > qb1) return std::nullopt;
    std::map<std::pair<long long, long long>, mpz_class> R;
    for (const auto& t : N) R[{t.a, t.b}] = t.c;
    const auto& lt = D.back();  // lex-largest
    std::vector<FracPoly::Term> q;
    while (!R.empty()) {
        auto it = std::prev(R.end());
        long long qa = it->first.first - lt.a, qb = it->first.second - lt.b;
        if (qa < qa0 || qa > qa1 || qb < qb0 || qb > qb1) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lt.c.get_mpz_t())) return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lt.c.get_mpz_t());
        for (const auto& d : D) {
            auto key = std::make_pair(d.a + qa, d.b + qb);
            auto f = R.find(key);
            if (f == R.end()) {
                R.emplace(key, -c * d.c);
            } else {
                f->second -= c * d.c;
                if (f->second == 0) R.erase(f);
            }
        }
        q.push_back({qa, qb, c});
    }
    return FracPoly::from_level(L, std::move(q));
}

// Cancels the common factor of num and den when den is supported on a line
// through the origin (den's lex-least term at (0,0)). Returns true if
// anything changed.
bool reduce_common_factor(FracPoly& num, FracPoly& den) {
    long long L = lcm_ll(num.level(), den.level());
    auto D = den.at_level(L);
    const auto& ref = D.back();
    long long g = gcd_ll(ref.a, ref.b);
    long long p = ref.a / g, q = ref.b / g;  // lex-positive primitive direction
    for (const auto& t : D)
        if (t.a * q - t.b * p != 0) {
            auto quo = exact_quotient(num, den);
            if (!quo) return false;
            num = *quo;
            den = FracPoly::constant(1);
            return true;
        }
    auto step = [&](long long A, long long B) { return p != 0 ? floor_div(A, p) : floor_div(B, q); };

    std::map<std::pair<long long, long long>, std::vector<std::pair<long long, mpz_class>>> classes;
    for (const auto& t : num.at_level(L)) {
        long long n = step(t.a, t.b);
        classes[{t.a - n * p, t.b - n * q}].emplace_back(n, t.c);
    }
    long long h = 0;
    for (const auto& t : D) h = gcd_ll(h, step(t.a, t.b));
    std::map<std::pair<long long, long long>, long long> base;
    for (auto& [c, v] : classes) {
        long long mn = v.front().first;
        for (const auto& [n, _] : v) mn = std::min(mn, n);
        base[c] = mn;
        for (const auto& [n, _] : v) h = gcd_ll(h, n - mn);
    }
    auto dense = [&](const std::vector<std::pair<long long, mpz_class>>& v, long long mn) {
        ZPoly z;
        for (const auto& [n, c] : v) {
            std::size_t i = static_cast<std::size_t>((n - mn) / h);
            if (z.size() <= i) z.resize(i + 1);
            z[i] += c;
        }
        detail::trim(z);
        return z;
    };
    std::vector<std::pair<long long, mpz_class>> dv;
    for (const auto& t : D) dv.emplace_back(step(t.a, t.b), t.c);
    ZPoly Dz = dense(dv, 0);
    ZPoly G = Dz;
    for (const auto& [c, v] : classes) {
        G = detail::gcd(G, dense(v, base[c]));
        if (detail::degree(G) <= 0) return false;
    }
    std::vector<FracPoly::Term> nt, dt;
    auto emit = [&](std::vector<FracPoly::Term>& out, const ZPoly& z, std::pair<long long, long long> c,
                    long long mn) {
        for (std::size_t i = 0; i < z.size(); ++i)
            if (z[i] != 0) {
                long long n = mn + static_cast<long long>(i) * h;
                out.push_back({c.first + n * p, c.second + n * q, z[i]});
            }
    };
    emit(dt, detail::exact_div(Dz, G), {0, 0}, 0);
    for (const auto& [c, v] : classes) emit(nt, detail::exact_div(dense(v, base[c]), G), c, base[c]);
    num = FracPoly::from_level(L, std::move(nt));
    den = FracPoly::from_level(L, std::move(dt));
    return true;
}

}  // namespace

// ---------------------------------------------------------------- FracRat

FracRat::FracRat(const FracPoly& p) : num_(p), den_(FracPoly::constant(1)) {}

FracRat::FracRat(const FracPoly& num, const FracPoly& den) : num_(num), den_(den) { normalize(); }

FracRat FracRat::integer(long long n) { return FracRat(FracPoly::constant(zz(n))); }

void FracRat::normalize() {
    if (den_.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = FracPoly::constant(1);
        return;
    }
    for (int pass = 0; pass < 2; ++pass) {
        const auto& lt = den_.terms().front();
        Rat su(-lt.a, den_.level()), sv(-lt.b, den_.level());
        bool neg = lt.c < 0;
        if (su != 0 || sv != 0) {
            num_ = num_.shifted(su, sv);
            den_ = den_.shifted(su, sv);
        }
        if (neg) {
            num_ = -num_;
            den_ = -den_;
        }
        mpz_class g;
        mpz_class cn = num_.content(), cd = den_.content();
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (g != 1) {
            num_ = num_.divided(g);
            den_ = den_.divided(g);
        }
        if (den_.size() == 1 || pass == 1) return;
        if (!reduce_common_factor(num_, den_)) return;
    }
}

FracRat FracRat::operator-() const {
    FracRat r = *this;
    r.num_ = -r.num_;
    return r;
}

FracRat operator+(const FracRat& x, const FracRat& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return FracRat(x.num_ + y.num_, x.den_);
    return FracRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

FracRat operator-(const FracRat& x, const FracRat& y) { return x + (-y); }

FracRat operator*(const FracRat& x, const FracRat& y) {
    if (x.is_zero() || y.is_zero()) return FracRat();
    return FracRat(x.num_ * y.num_, x.den_ * y.den_);
}

FracRat operator/(const FracRat& x, const FracRat& y) {
    if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero fraction");
    return FracRat(x.num_ * y.den_, x.den_ * y.num_);
}

bool operator==(const FracRat& x, const FracRat& y) {
    if (x.den_ == y.den_) return x.num_ == y.num_;
    return x.num_ * y.den_ == y.num_ * x.den_;
}

FracRat FracRat::inverse() const { return FracRat(den_, num_); }

FracRat FracRat::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    return FracRat(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

FracRat FracRat::divided(long long n) const {
    if (n == 0) throw Error(Errc::DivisionByZero, "division by integer zero");
    return FracRat(num_, den_.scaled(zz(n)));
}

std::string FracRat::to_string() const {
    if (den_ == FracPoly::constant(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

FracRat adams(long long n, const FracRat& x) {
    if (n < 1) throw Error(Errc::InvalidParams, "adams index must be positive");
    if (n == 1) return x;
    return FracRat(x.num().adams(n), x.den().adams(n));
}

std::optional<FracPoly> is_laurent_polynomial(const FracRat& x) {
    if (x.den() == FracPoly::constant(1)) return x.num();
    return std::nullopt;
}

std::optional<FracPoly> monomial_ratio(const FracRat& x, const FracRat& y) {
    if (x.is_zero() || y.is_zero()) return std::nullopt;
    auto p = is_laurent_polynomial(x / y);
    if (p && p->size() == 1) return p;
    return std::nullopt;
}

// ---------------------------------------------------------------- WeightPoly

WeightPoly::WeightPoly(long long K, std::map<long long, mpz_class> num, std::map<long long, mpz_class> den)
    : K_(K), num_(std::move(num)), den_(std::move(den)) {
    std::erase_if(num_, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
    if (den_.empty()) throw Error(Errc::DenominatorVanishes, "weight realization of denominator is zero");
    reduce();
}

void WeightPoly::reduce() {
    if (num_.empty()) {
        K_ = 1;
        den_ = {{0, 1}};
        return;
    }
    long long s0 = den_.begin()->first;
    bool neg = den_.begin()->second < 0;
    long long n0 = num_.begin()->first;
    long long h = 0;
    for (const auto& [e, c] : den_) h = gcd_ll(h, e - s0);
    for (const auto& [e, c] : num_) h = gcd_ll(h, e - n0);
    auto dense = [&](const std::map<long long, mpz_class>& m, long long base) {
        ZPoly z;
        for (const auto& [e, c] : m) {
            std::size_t i = h == 0 ? 0 : static_cast<std::size_t>((e - base) / h);
            if (z.size() <= i) z.resize(i + 1);
            z[i] = neg ? mpz_class(-c) : c;
        }
        return z;
    };
    ZPoly N = dense(num_, n0), D = dense(den_, s0);
    ZPoly G = detail::gcd(N, D);
    if (detail::degree(G) > 0) {
        N = detail::exact_div(N, G);
        D = detail::exact_div(D, G);
    }
    if (D.front() < 0) {
        for (auto& c : N) c = -c;
        for (auto& c : D) c = -c;
    }
    mpz_class g;
    mpz_class cn = detail::content(N), cd = detail::content(D);
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    num_.clear();
    den_.clear();
    long long step = h == 0 ? 1 : h;
    for (std::size_t i = 0; i < N.size(); ++i)
        if (N[i] != 0) num_[n0 - s0 + static_cast<long long>(i) * step] = N[i] / g;
    for (std::size_t i = 0; i < D.size(); ++i)
        if (D[i] != 0) den_[static_cast<long long>(i) * step] = D[i] / g;
    long long k = K_;
    for (const auto& [e, c] : num_) k = gcd_ll(k, e);
    for (const auto& [e, c] : den_) k = gcd_ll(k, e);
    if (k > 1) {
        auto rescale = [k](std::map<long long, mpz_class>& m) {
            std::map<long long, mpz_class> r;
            for (auto& [e, c] : m) r[e / k] = c;
            m = std::move(r);
        };
        rescale(num_);
        rescale(den_);
        K_ /= k;
    }
}

bool WeightPoly::is_laurent() const { return den_.size() == 1 && den_.begin()->second == 1; }

std::optional<mpz_class> WeightPoly::constant_value() const {
    if (!is_laurent()) return std::nullopt;
    if (num_.empty()) return mpz_class(0);
    if (num_.size() == 1 && num_.begin()->first == 0) return num_.begin()->second;
    return std::nullopt;
}

mpq_class WeightPoly::value_at_one() const {
    mpz_class n = 0, d = 0;
    for (const auto& [e, c] : num_) n += c;
    for (const auto& [e, c] : den_) d += c;
    if (d == 0) throw Error(Errc::PoleAtOne, "weight polynomial has a pole at s = 1");
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

bool operator==(const WeightPoly& x, const WeightPoly& y) {
    return x.K_ == y.K_ && x.num_ == y.num_ && x.den_ == y.den_;
}

WeightPoly operator*(const WeightPoly& x, const WeightPoly& y) {
    long long L = lcm_ll(x.K_, y.K_);
    auto prod = [&](const auto& a, const auto& b) {
        std::map<long long, mpz_class> r;
        for (const auto& [e, c] : a)
            for (const auto& [f, d] : b) r[e * (L / x.K_) + f * (L / y.K_)] += c * d;
        return r;
    };
    return WeightPoly(L, prod(x.num_, y.num_), prod(x.den_, y.den_));
}

static std::string uni_string(long long K, const std::map<long long, mpz_class>& m) {
    if (m.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [e, c0] : m) {
        mpz_class c = c0;
        if (lead) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (c < 0) c = -c;
        lead = false;
        Rat ex(e, K);
        if (ex == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << '*';
        os << 's';
        if (ex == 1) continue;
        if (ex.denominator() == 1 && ex > 0)
            os << '^' << ex.numerator();
        else
            os << "^(" << rat_string(ex) << ')';
    }
    return os.str();
}

std::string WeightPoly::to_string() const {
    if (is_laurent()) return uni_string(K_, num_);
    return "(" + uni_string(K_, num_) + ")/(" + uni_string(K_, den_) + ")";
}

WeightPoly wt_realize(const FracRat& x) {
    long long L = lcm_ll(x.num().level(), x.den().level());
    auto sub = [L](const FracPoly& p) {
        std::map<long long, mpz_class> m;
        for (const auto& t : p.at_level(L)) m[t.a + t.b] += t.c;
        return m;
    };
    return WeightPoly(L, sub(x.num()), sub(x.den()));
}

mpz_class euler_realize(const FracRat& x) {
    mpq_class v = wt_realize(x).value_at_one();
    if (v.get_den() != 1)
        throw Error(Errc::NonIntegerValue, "Euler realization " + v.get_str() + " is not an integer");
    return v.get_num();
}

}  // namespace motdt
