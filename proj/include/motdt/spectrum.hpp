#pragma once

#include <gmpxx.h>

#include <numeric>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace motdt {

// Exponent rationals: small, always reduced, positive denominator.
class Rat {
public:
    Rat(long long n = 0, long long d = 1);  // NOLINT(implicit)
    long long numerator() const { return n_; }
    long long denominator() const { return d_; }
    friend Rat operator+(const Rat& x, const Rat& y);
    friend Rat operator-(const Rat& x, const Rat& y);
    friend Rat operator*(const Rat& x, const Rat& y);
    friend Rat operator/(const Rat& x, const Rat& y);
    Rat operator-() const { return Rat(-n_, d_); }
    friend bool operator==(const Rat& x, const Rat& y) { return x.n_ == y.n_ && x.d_ == y.d_; }
    friend bool operator<(const Rat& x, const Rat& y);
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }

private:
    long long n_, d_;
};

inline mpz_class zz(long long n) { return mpz_class(static_cast<long>(n)); }

std::string rat_string(const Rat& r);
Rat parse_rat(const std::string& s);

// Laurent polynomial in u, v with rational exponents and integer coefficients.
// Exponents are stored as integer numerators over a common level K, which is
// kept minimal so that equal polynomials are structurally equal.
class FracPoly {
public:
    struct Term {
        long long a;  // exponent of u is a / K
        long long b;  // exponent of v is b / K
        mpz_class c;
    };

    FracPoly() = default;
    static FracPoly constant(const mpz_class& c);
    static FracPoly monomial(const Rat& eu, const Rat& ev, const mpz_class& c = 1);
    // (uv)^e
    static FracPoly uv(const Rat& e, const mpz_class& c = 1);
    static FracPoly from_terms(const std::vector<std::tuple<Rat, Rat, mpz_class>>& terms);

    long long level() const { return K_; }
    // sorted lexicographically by (a, b), no zero coefficients
    const std::vector<Term>& terms() const { return t_; }
    std::vector<std::tuple<Rat, Rat, mpz_class>> exponent_terms() const;
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    // coefficient at u^eu v^ev
    mpz_class coeff(const Rat& eu, const Rat& ev) const;

    FracPoly operator-() const;
    FracPoly& operator+=(const FracPoly& o);
    FracPoly& operator-=(const FracPoly& o);
    friend FracPoly operator+(FracPoly x, const FracPoly& y) { return x += y; }
    friend FracPoly operator-(FracPoly x, const FracPoly& y) { return x -= y; }
    friend FracPoly operator*(const FracPoly& x, const FracPoly& y);
    friend bool operator==(const FracPoly& x, const FracPoly& y);

    FracPoly scaled(const mpz_class& c) const;
    // exact division of every coefficient; throws if not exact
    FracPoly divided(const mpz_class& c) const;
    // multiply by u^du v^dv
    FracPoly shifted(const Rat& du, const Rat& dv) const;
    FracPoly adams(long long n) const;
    FracPoly pow(unsigned n) const;
    // positive gcd of the coefficients (0 for the zero polynomial)
    mpz_class content() const;
    // substitute u = v = 1
    mpz_class value_at_one() const;

    // numerators rescaled to level L (L must be a multiple of level())
    std::vector<Term> at_level(long long L) const;
    static FracPoly from_level(long long L, std::vector<Term> terms);

    std::string to_string() const;

private:
    long long K_ = 1;
    std::vector<Term> t_;
    void canonicalize();
};

// Univariate reduced fraction in s = q^{1/2}; exponents of s may be fractional
// (level-tracked like FracPoly).
class WeightPoly {
public:
    WeightPoly() = default;
    // num and den map s-exponent numerators (over level K) to coefficients
    WeightPoly(long long K, std::map<long long, mpz_class> num, std::map<long long, mpz_class> den);

    long long level() const { return K_; }
    const std::map<long long, mpz_class>& num() const { return num_; }
    const std::map<long long, mpz_class>& den() const { return den_; }
    bool is_laurent() const;
    // the value when the fraction is an integer constant
    std::optional<mpz_class> constant_value() const;
    // value at s = 1 as an exact rational; throws PoleAtOne
    mpq_class value_at_one() const;

    friend bool operator==(const WeightPoly& x, const WeightPoly& y);
    friend WeightPoly operator*(const WeightPoly& x, const WeightPoly& y);
    std::string to_string() const;

private:
    long long K_ = 1;
    std::map<long long, mpz_class> num_;
    std::map<long long, mpz_class> den_{{0, 1}};
    void reduce();
};

// Fraction of FracPolys. Denominators supported on a line through the origin
// (the only kind the engine produces) are kept fully gcd-reduced; other
// denominators are only cancelled when the division is exact.
class FracRat {
public:
    FracRat() : den_(FracPoly::constant(1)) {}
    FracRat(const FracPoly& p);  // NOLINT(implicit)
    FracRat(const FracPoly& num, const FracPoly& den);
    static FracRat integer(long long n);

    const FracPoly& num() const { return num_; }
    const FracPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    FracRat operator-() const;
    friend FracRat operator+(const FracRat& x, const FracRat& y);
    friend FracRat operator-(const FracRat& x, const FracRat& y);
    friend FracRat operator*(const FracRat& x, const FracRat& y);
    friend FracRat operator/(const FracRat& x, const FracRat& y);
    FracRat& operator+=(const FracRat& o) { return *this = *this + o; }
    FracRat& operator-=(const FracRat& o) { return *this = *this - o; }
    FracRat& operator*=(const FracRat& o) { return *this = *this * o; }
    friend bool operator==(const FracRat& x, const FracRat& y);

    FracRat inverse() const;
    FracRat pow(long long n) const;
    FracRat divided(long long n) const;

    std::string to_string() const;

private:
    FracPoly num_, den_;
    void normalize();
};

FracRat adams(long long n, const FracRat& x);
WeightPoly wt_realize(const FracRat& x);
mpz_class euler_realize(const FracRat& x);
std::optional<FracPoly> is_laurent_polynomial(const FracRat& x);

// Returns the monomial m with x = m * y when one exists (x, y nonzero).
std::optional<FracPoly> monomial_ratio(const FracRat& x, const FracRat& y);

}  // namespace motdt
