#include "motdt/motive.hpp"

#include <sstream>

#include "motdt/error.hpp"

namespace motdt {

struct MotiveExpr::Node {
    Kind kind;
    long long value = 0;
    std::vector<MotiveExpr> children;
    CoverData cover;
    std::string label;
};

namespace {
std::shared_ptr<MotiveExpr::Node> make(MotiveExpr::Kind k, long long v = 0) {
    auto n = std::make_shared<MotiveExpr::Node>();
    n->kind = k;
    n->value = v;
    return n;
}
}  // namespace

MotiveExpr::MotiveExpr() : n_(make(Kind::One)) {}
MotiveExpr MotiveExpr::one() { return MotiveExpr(); }
MotiveExpr MotiveExpr::scalar(long long n) { return MotiveExpr(make(Kind::Scalar, n)); }
MotiveExpr MotiveExpr::lefschetz_half() { return MotiveExpr(make(Kind::LefschetzHalf)); }
MotiveExpr MotiveExpr::lefschetz() { return lefschetz_half().pow(2); }

MotiveExpr MotiveExpr::mu(long long n) {
    if (n < 1) throw Error(Errc::InvalidExpression, "mu_n needs n >= 1");
    return MotiveExpr(make(Kind::Mu, n));
}

MotiveExpr MotiveExpr::proj_line() { return MotiveExpr(make(Kind::ProjLine)); }

MotiveExpr MotiveExpr::affine(long long n) {
    if (n < 0) throw Error(Errc::InvalidExpression, "affine space dimension must be >= 0");
    return MotiveExpr(make(Kind::Affine, n));
}

MotiveExpr MotiveExpr::gl(long long n) {
    if (n < 1) throw Error(Errc::InvalidExpression, "GL_n needs n >= 1");
    return MotiveExpr(make(Kind::GL, n));
}

MotiveExpr MotiveExpr::cover_class(const CoverData& d, const std::string& label) {
    auto n = make(Kind::Cover);
    n->cover = d;
    n->label = label.empty() ? "D_{" + std::to_string(d.m) + "}" : label;
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::sum(std::vector<MotiveExpr> terms) {
    if (terms.empty()) return scalar(0);
    if (terms.size() == 1) return terms.front();
    auto n = make(Kind::Sum);
    n->children = std::move(terms);
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::product(std::vector<MotiveExpr> factors) {
    if (factors.empty()) return one();
    if (factors.size() == 1) return factors.front();
    auto n = make(Kind::Product);
    n->children = std::move(factors);
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::pow(long long e) const {
    if (e < 0 && kind() != Kind::LefschetzHalf && kind() != Kind::GL)
        throw Error(Errc::InvalidExpression, "negative powers are only allowed for L^{1/2} and [GL_n]");
    if (e == 1) return *this;
    auto n = make(Kind::Power, e);
    n->children = {*this};
    return MotiveExpr(n);
}

MotiveExpr::Kind MotiveExpr::kind() const { return n_->kind; }
long long MotiveExpr::value() const { return n_->value; }
const std::vector<MotiveExpr>& MotiveExpr::children() const { return n_->children; }
const CoverData& MotiveExpr::cover() const { return n_->cover; }
const std::string& MotiveExpr::label() const { return n_->label; }

MotiveExpr operator+(const MotiveExpr& x, const MotiveExpr& y) {
    std::vector<MotiveExpr> t;
    for (const auto* e : {&x, &y}) {
        if (e->kind() == MotiveExpr::Kind::Sum)
            t.insert(t.end(), e->children().begin(), e->children().end());
        else
            t.push_back(*e);
    }
    return MotiveExpr::sum(std::move(t));
}

MotiveExpr MotiveExpr::operator-() const {
    if (kind() == Kind::Scalar) return scalar(-value());
    if (kind() == Kind::Product && children().front().kind() == Kind::Scalar) {
        std::vector<MotiveExpr> f = children();
        long long c = -f.front().value();
        if (c == 1)
            f.erase(f.begin());
        else
            f.front() = scalar(c);
        return product(std::move(f));
    }
    return product({scalar(-1), *this});
}

MotiveExpr operator-(const MotiveExpr& x, const MotiveExpr& y) { return x + (-y); }

MotiveExpr operator*(const MotiveExpr& x, const MotiveExpr& y) {
    std::vector<MotiveExpr> f;
    for (const auto* e : {&x, &y}) {
        if (e->kind() == MotiveExpr::Kind::Product)
            f.insert(f.end(), e->children().begin(), e->children().end());
        else
            f.push_back(*e);
    }
    return MotiveExpr::product(std::move(f));
}

bool MotiveExpr::structurally_equal(const MotiveExpr& o) const {
    if (kind() != o.kind() || value() != o.value()) return false;
    if (kind() == Kind::Cover && !(cover() == o.cover())) return false;
    if (children().size() != o.children().size()) return false;
    for (std::size_t i = 0; i < children().size(); ++i)
        if (!children()[i].structurally_equal(o.children()[i])) return false;
    return true;
}

namespace {

std::string lefschetz_power(long long half_exp) {
    if (half_exp == 2) return "L";
    if (half_exp % 2 == 0) return "L^{" + std::to_string(half_exp / 2) + "}";
    return "L^{" + std::to_string(half_exp) + "/2}";
}

std::string print(const MotiveExpr& x);

std::string print_factor(const MotiveExpr& x) {
    if (x.kind() == MotiveExpr::Kind::Sum) return "(" + print(x) + ")";
    if (x.kind() == MotiveExpr::Kind::Scalar && x.value() < 0) return "(" + print(x) + ")";
    return print(x);
}

std::string print(const MotiveExpr& x) {
    using K = MotiveExpr::Kind;
    switch (x.kind()) {
        case K::One: return "1";
        case K::Scalar: return std::to_string(x.value());
        case K::LefschetzHalf: return "L^{1/2}";
        case K::Mu: return "[μ_" + std::to_string(x.value()) + "]";
        case K::ProjLine: return "[P¹]";
        case K::Affine: return "[A^" + std::to_string(x.value()) + "]";
        case K::GL: return "[GL_" + std::to_string(x.value()) + "]";
        case K::Cover: return "[" + x.label() + "]";
        case K::Power: {
            const auto& b = x.children().front();
            if (b.kind() == K::LefschetzHalf) return lefschetz_power(x.value());
            return print_factor(b) + "^{" + std::to_string(x.value()) + "}";
        }
        case K::Product: {
            std::string s;
            for (std::size_t i = 0; i < x.children().size(); ++i) {
                const auto& f = x.children()[i];
                if (i == 0 && f.kind() == K::Scalar && f.value() == -1)
                    s += "-";
                else
                    s += (i == 0 ? print(f) : print_factor(f));
            }
            return s;
        }
        case K::Sum: {
            std::string s;
            for (std::size_t i = 0; i < x.children().size(); ++i) {
                std::string t = print(x.children()[i]);
                if (i == 0)
                    s = t;
                else if (!t.empty() && t[0] == '-')
                    s += " - " + t.substr(1);
                else
                    s += " + " + t;
            }
            return s;
        }
    }
    return "?";
}

FracRat hsp_gl(long long n) {
    FracPoly p = FracPoly::constant(1);
    for (long long k = 0; k < n; ++k) p = p * (FracPoly::uv(n) - FracPoly::uv(k));
    return FracRat(p);
}

}  // namespace

std::string MotiveExpr::to_string() const { return print(*this); }

FracRat realize_hsp(const MotiveExpr& x) {
    using K = MotiveExpr::Kind;
    switch (x.kind()) {
        case K::One: return FracRat::integer(1);
        case K::Scalar: return FracRat::integer(x.value());
        case K::LefschetzHalf: return FracRat(FracPoly::uv(Rat(1, 2), -1));
        case K::Mu: return hsp_mu(x.value());
        case K::ProjLine: return FracRat(FracPoly::constant(1) + FracPoly::uv(1));
        case K::Affine: return FracRat(FracPoly::uv(x.value()));
        case K::GL: return hsp_gl(x.value());
        case K::Cover: return hsp_cover(x.cover());
        case K::Sum: {
            FracRat r;
            for (const auto& c : x.children()) r += realize_hsp(c);
            return r;
        }
        case K::Product: {
            FracRat r = FracRat::integer(1);
            for (const auto& c : x.children()) r *= realize_hsp(c);
            return r;
        }
        case K::Power: return realize_hsp(x.children().front()).pow(x.value());
    }
    throw Error(Errc::InvalidExpression, "unknown motive node");
}

RealizationChain realize_chain(const MotiveExpr& x) {
    FracRat h = realize_hsp(x);
    WeightPoly w = wt_realize(h);
    mpq_class e = w.value_at_one();
    if (e.get_den() != 1) throw Error(Errc::NonIntegerValue, "Euler realization " + e.get_str() + " is not an integer");
    return {h, w, e.get_num()};
}

bool equivalent(const MotiveExpr& x, const MotiveExpr& y) { return realize_hsp(x) == realize_hsp(y); }

}  // namespace motdt
