#pragma once

// Dense univariate polynomials over Z, used for gcd reductions.

#include <gmpxx.h>

#include <vector>

namespace motdt::detail {

// coefficient of t^i at index i, no trailing zeros; empty means zero
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p);
inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
mpz_class content(const ZPoly& p);
// content removed, leading coefficient positive
ZPoly primitive(const ZPoly& p);
ZPoly derivative(const ZPoly& p);
ZPoly gcd(const ZPoly& a, const ZPoly& b);
// a / b, requires exact divisibility over Z
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
bool divides(const ZPoly& b, const ZPoly& a);
mpz_class eval(const ZPoly& p, const mpz_class& t);

long long floor_div(long long a, long long b);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace motdt::detail
