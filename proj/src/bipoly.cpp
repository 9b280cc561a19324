#include "motdt/bipoly.hpp"

#include <cctype>
#include <sstream>

#include "motdt/error.hpp"
#include "zpoly.hpp"

namespace motdt {

void BiPoly::add(Key k, const mpq_class& c) {
    if (c == 0) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

BiPoly BiPoly::constant(const mpq_class& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int i, int j, const mpq_class& c) {
    BiPoly p;
    p.add({i, j}, c);
    return p;
}

mpq_class BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? mpq_class(0) : it->second;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
    BiPoly r = p;
    for (const auto& [k, c] : q.t_) r.add(k, c);
    return r;
}

BiPoly operator-(const BiPoly& p, const BiPoly& q) { return p + (-q); }

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
    BiPoly r;
    for (const auto& [k1, c1] : p.t_)
        for (const auto& [k2, c2] : q.t_) r.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

BiPoly BiPoly::pow(unsigned n) const {
    BiPoly r = constant(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

BiPoly BiPoly::substitute_monomial(int a, int b, int c, int d) const {
    BiPoly r;
    for (const auto& [k, v] : t_) r.add({a * k.first + c * k.second, b * k.first + d * k.second}, v);
    return r;
}

BiPoly BiPoly::compose(const BiPoly& X, const BiPoly& Y) const {
    std::vector<BiPoly> xp{constant(1)}, yp{constant(1)};
    BiPoly r;
    for (const auto& [k, v] : t_) {
        while (static_cast<int>(xp.size()) <= k.first) xp.push_back(xp.back() * X);
        while (static_cast<int>(yp.size()) <= k.second) yp.push_back(yp.back() * Y);
        r = r + xp[k.first] * yp[k.second] * constant(v);
    }
    return r;
}

BiPoly::Key BiPoly::min_exponents() const {
    if (t_.empty()) return {0, 0};
    int mi = t_.begin()->first.first, mj = t_.begin()->first.second;
    for (const auto& [k, c] : t_) {
        mi = std::min(mi, k.first);
        mj = std::min(mj, k.second);
    }
    return {mi, mj};
}

BiPoly BiPoly::divide_monomial(int p, int q) const {
    BiPoly r;
    for (const auto& [k, c] : t_) {
        if (k.first < p || k.second < q) throw std::domain_error("divide_monomial: not divisible");
        r.add({k.first - p, k.second - q}, c);
    }
    return r;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [k, c] : t_)
        if (k.first > 0) r.add({k.first - 1, k.second}, c * k.first);
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    for (const auto& [k, c] : t_)
        if (k.second > 0) r.add({k.first, k.second - 1}, c * k.second);
    return r;
}

std::vector<mpq_class> BiPoly::on_x_axis_zero() const {
    std::vector<mpq_class> r;
    for (const auto& [k, c] : t_)
        if (k.first == 0) {
            if (static_cast<int>(r.size()) <= k.second) r.resize(k.second + 1);
            r[k.second] += c;
        }
    uniq::trim(r);
    return r;
}

std::vector<mpq_class> BiPoly::on_y_axis_zero() const {
    std::vector<mpq_class> r;
    for (const auto& [k, c] : t_)
        if (k.second == 0) {
            if (static_cast<int>(r.size()) <= k.first) r.resize(k.first + 1);
            r[k.first] += c;
        }
    uniq::trim(r);
    return r;
}

std::string BiPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto [i, j] = it->first;
        mpq_class c = it->second;
        if (lead) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        lead = false;
        if (c < 0) c = -c;
        bool mono = i > 0 || j > 0;
        bool need_star = false;
        if (c != 1 || !mono) {
            os << c.get_str();
            need_star = true;
        }
        if (i > 0) {
            os << (need_star ? "*" : "") << 'x';
            if (i > 1) os << '^' << i;
            need_star = true;
        }
        if (j > 0) {
            os << (need_star ? "*" : "") << 'y';
            if (j > 1) os << '^' << j;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BiPoly poly() {
        BiPoly r;
        skip();
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            BiPoly t = term();
            r = r + (sign < 0 ? -t : t);
            first = false;
            skip();
            if (pos_ == s_.size()) break;
        }
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw Error(Errc::ParseError, m + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        return s_[pos_++];
    }
    std::string digits() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return s_.substr(b, pos_ - b);
    }
    BiPoly term() {
        BiPoly t = factor();
        while (peek() == '*') {
            get();
            t = t * factor();
        }
        return t;
    }
    BiPoly factor() {
        char c = peek();
        if (c == 'x' || c == 'y') {
            get();
            int e = 1;
            if (peek() == '^') {
                get();
                std::string d = digits();
                if (d.size() > 6) fail("exponent too large");
                e = std::stoi(d);
            }
            return c == 'x' ? BiPoly::monomial(e, 0) : BiPoly::monomial(0, e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n(digits());
            mpz_class d = 1;
            if (peek() == '/') {
                get();
                d = mpz_class(digits());
                if (d == 0) fail("zero denominator");
            }
            mpq_class q(n, d);
            q.canonicalize();
            return BiPoly::constant(q);
        }
        fail("expected a number, x or y");
    }
};

}  // namespace

BiPoly BiPoly::parse(const std::string& s) {
    Parser p(s);
    return p.poly();
}

namespace uniq {

void trim(std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const std::vector<mpq_class>& p) {
    std::vector<mpq_class> q = p;
    trim(q);
    return static_cast<int>(q.size()) - 1;
}

int order_at_zero(const std::vector<mpq_class>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

static detail::ZPoly to_z(const std::vector<mpq_class>& p) {
    mpz_class l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    detail::ZPoly z;
    for (const auto& c : p) {
        mpq_class s = c * l;
        z.push_back(s.get_num());
    }
    detail::trim(z);
    return z;
}

std::vector<mpq_class> gcd(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    detail::ZPoly g = detail::gcd(to_z(a), to_z(b));
    std::vector<mpq_class> r;
    for (const auto& c : g) r.emplace_back(c);
    return r;
}

bool squarefree(const std::vector<mpq_class>& p) {
    detail::ZPoly z = to_z(p);
    if (z.empty()) return false;
    return detail::degree(detail::gcd(z, detail::derivative(z))) == 0;
}

}  // namespace uniq

}  // namespace motdt
