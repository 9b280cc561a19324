#pragma once

#include <compare>
#include <map>
#include <vector>

#include "motdt/spectrum.hpp"

namespace motdt {

struct DimVector {
    long long d0 = 0, d1 = 0;
    long long total() const { return d0 + d1; }
    bool is_zero() const { return d0 == 0 && d1 == 0; }
    friend DimVector operator+(DimVector x, DimVector y) { return {x.d0 + y.d0, x.d1 + y.d1}; }
    friend DimVector operator*(long long k, DimVector x) { return {k * x.d0, k * x.d1}; }
    friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

// Truncated power series in t^delta, graded by total degree d0 + d1 <= order.
// Only nonzero coefficients are stored.
class MotSeries {
public:
    explicit MotSeries(int order);
    static MotSeries one(int order);
    static MotSeries monomial(int order, DimVector d, const FracRat& c);

    int order() const { return order_; }
    const std::map<DimVector, FracRat>& coeffs() const { return c_; }
    FracRat coeff(DimVector d) const;
    void add(DimVector d, const FracRat& c);
    MotSeries truncated(int order) const;
    // psi_n on coefficients and t^delta -> t^{n delta}
    MotSeries adams(long long n) const;

    friend MotSeries operator+(const MotSeries& f, const MotSeries& g);
    friend MotSeries operator-(const MotSeries& f, const MotSeries& g);
    friend MotSeries operator*(const MotSeries& f, const MotSeries& g);
    friend bool operator==(const MotSeries& f, const MotSeries& g);

private:
    int order_;
    std::map<DimVector, FracRat> c_;
};

MotSeries mul(const MotSeries& f, const MotSeries& g);
MotSeries sym(const MotSeries& f);
MotSeries plog(const MotSeries& F);

// hsp(L^{1/2} - L^{-1/2}) = -(uv)^{1/2} + (uv)^{-1/2}
FracRat hsp_lhalf_diff();

struct BpsValue {
    FracRat value;
    bool integral = false;  // is a Laurent polynomial
};

// BPS_k for k = 1..kmax, stopping at the truncation order.
std::vector<BpsValue> extract_bps(const MotSeries& F, DimVector delta, int kmax);
// the multiple-cover ansatz Sym(sum_k BPS_k / (L^{1/2} - L^{-1/2}) t^{k delta})
MotSeries bps_ansatz(int order, DimVector delta, const std::vector<FracRat>& bps);

}  // namespace motdt
