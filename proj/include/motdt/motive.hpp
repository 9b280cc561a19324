#pragma once

#include <memory>
#include <string>
#include <vector>

#include "motdt/covers.hpp"
#include "motdt/spectrum.hpp"

namespace motdt {

// Symbolic motive expressions. Products are only ever evaluated after
// realization, where the join product becomes ordinary multiplication.
class MotiveExpr {
public:
    enum class Kind { One, Scalar, LefschetzHalf, Mu, ProjLine, Affine, GL, Cover, Sum, Product, Power };

    MotiveExpr();  // one
    static MotiveExpr one();
    static MotiveExpr scalar(long long n);
    static MotiveExpr lefschetz_half();
    static MotiveExpr lefschetz();  // L = (L^{1/2})^2
    static MotiveExpr mu(long long n);
    static MotiveExpr proj_line();
    static MotiveExpr affine(long long n);
    static MotiveExpr gl(long long n);
    // label is used for display, e.g. "D_{8}"
    static MotiveExpr cover_class(const CoverData& d, const std::string& label = "");
    static MotiveExpr sum(std::vector<MotiveExpr> terms);
    static MotiveExpr product(std::vector<MotiveExpr> factors);
    MotiveExpr pow(long long e) const;

    Kind kind() const;
    long long value() const;  // scalar value, or the n of mu/affine/gl, or the exponent of a power
    const std::vector<MotiveExpr>& children() const;
    const CoverData& cover() const;
    const std::string& label() const;

    friend MotiveExpr operator+(const MotiveExpr& x, const MotiveExpr& y);
    friend MotiveExpr operator-(const MotiveExpr& x, const MotiveExpr& y);
    friend MotiveExpr operator*(const MotiveExpr& x, const MotiveExpr& y);
    MotiveExpr operator-() const;

    // stricter than equality of realizations
    bool structurally_equal(const MotiveExpr& o) const;
    std::string to_string() const;

    struct Node;

private:
    std::shared_ptr<const Node> n_;
    explicit MotiveExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
};

FracRat realize_hsp(const MotiveExpr& x);

struct RealizationChain {
    FracRat hsp;
    WeightPoly wt;
    mpz_class euler;
};
RealizationChain realize_chain(const MotiveExpr& x);

// equality of motive expressions is equality of Hodge spectra
bool equivalent(const MotiveExpr& x, const MotiveExpr& y);

}  // namespace motdt
