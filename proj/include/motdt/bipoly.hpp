#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace motdt {

// Polynomial in x, y with exact rational coefficients.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (deg_x, deg_y)

    BiPoly() = default;
    static BiPoly constant(const mpq_class& c);
    static BiPoly monomial(int i, int j, const mpq_class& c = 1);
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }
    // text grammar: c*x^i*y^j +- ..., c an exact rational
    static BiPoly parse(const std::string& s);

    const std::map<Key, mpq_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    mpq_class coeff(int i, int j) const;
    int deg_x() const;
    int deg_y() const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
    friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.t_ == q.t_; }
    BiPoly pow(unsigned n) const;

    // p(x^a y^b, x^c y^d)
    BiPoly substitute_monomial(int a, int b, int c, int d) const;
    // p(X, Y)
    BiPoly compose(const BiPoly& X, const BiPoly& Y) const;
    // smallest exponents of x and y over all terms
    Key min_exponents() const;
    // exact division by x^p y^q (requires p, q <= min_exponents)
    BiPoly divide_monomial(int p, int q) const;
    BiPoly dx() const;
    BiPoly dy() const;
    // restriction to {x = 0} as a polynomial in y (index = power), and to {y = 0} in x
    std::vector<mpq_class> on_x_axis_zero() const;
    std::vector<mpq_class> on_y_axis_zero() const;

    std::string to_string() const;

private:
    std::map<Key, mpq_class> t_;
    void add(Key k, const mpq_class& c);
};

// univariate helpers over Q (coefficient of t^i at index i)
namespace uniq {
void trim(std::vector<mpq_class>& p);
std::vector<mpq_class> gcd(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);
bool squarefree(const std::vector<mpq_class>& p);
int order_at_zero(const std::vector<mpq_class>& p);
int degree(const std::vector<mpq_class>& p);
}  // namespace uniq

}  // namespace motdt
