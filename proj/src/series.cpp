#include "motdt/series.hpp"

#include <numeric>

#include "motdt/error.hpp"

namespace motdt {

MotSeries::MotSeries(int order) : order_(order) {
    if (order < 0) throw Error(Errc::InvalidParams, "series order must be nonnegative");
}

MotSeries MotSeries::one(int order) { return monomial(order, {0, 0}, FracRat::integer(1)); }

MotSeries MotSeries::monomial(int order, DimVector d, const FracRat& c) {
    MotSeries s(order);
    s.add(d, c);
    return s;
}

FracRat MotSeries::coeff(DimVector d) const {
    auto it = c_.find(d);
    return it == c_.end() ? FracRat() : it->second;
}

void MotSeries::add(DimVector d, const FracRat& c) {
    if (d.d0 < 0 || d.d1 < 0) throw Error(Errc::InvalidParams, "negative dimension vector");
    if (d.total() > order_ || c.is_zero()) return;
    auto it = c_.find(d);
    if (it == c_.end()) {
        c_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

MotSeries MotSeries::truncated(int order) const {
    MotSeries s(order);
    for (const auto& [d, c] : c_) s.add(d, c);
    return s;
}

MotSeries MotSeries::adams(long long n) const {
    MotSeries s(order_);
    for (const auto& [d, c] : c_)
        if (n * d.total() <= order_) s.add(n * d, motdt::adams(n, c));
    return s;
}

MotSeries operator+(const MotSeries& f, const MotSeries& g) {
    if (f.order_ != g.order_) throw Error(Errc::OrderMismatch, "series orders differ");
    MotSeries s = f;
    for (const auto& [d, c] : g.c_) s.add(d, c);
    return s;
}

MotSeries operator-(const MotSeries& f, const MotSeries& g) {
    if (f.order_ != g.order_) throw Error(Errc::OrderMismatch, "series orders differ");
    MotSeries s = f;
    for (const auto& [d, c] : g.c_) s.add(d, -c);
    return s;
}

MotSeries operator*(const MotSeries& f, const MotSeries& g) {
    if (f.order_ != g.order_) throw Error(Errc::OrderMismatch, "series orders differ");
    MotSeries s(f.order_);
    for (const auto& [d, c] : f.c_)
        for (const auto& [e, k] : g.c_)
            if (d.total() + e.total() <= f.order_) s.add(d + e, c * k);
    return s;
}

bool operator==(const MotSeries& f, const MotSeries& g) {
    if (f.order_ != g.order_ || f.c_.size() != g.c_.size()) return false;
    auto it = g.c_.begin();
    for (const auto& [d, c] : f.c_) {
        if (!(d == it->first) || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

MotSeries mul(const MotSeries& f, const MotSeries& g) { return f * g; }

namespace {

// dimension vectors of total degree 1..N, by increasing degree
std::vector<DimVector> graded_vectors(int N) {
    std::vector<DimVector> v;
    for (long long t = 1; t <= N; ++t)
        for (long long d0 = 0; d0 <= t; ++d0) v.push_back({d0, t - d0});
    return v;
}

bool fits(DimVector e, DimVector d) { return e.d0 <= d.d0 && e.d1 <= d.d1; }

}  // namespace

MotSeries sym(const MotSeries& f) {
    if (!f.coeff({0, 0}).is_zero()) throw Error(Errc::NonzeroConstantTerm, "sym needs zero constant term");
    const int N = f.order();
    // G = sum_n psi_n(f) / n
    MotSeries G(N);
    for (const auto& [d, c] : f.coeffs())
        for (long long n = 1; n * d.total() <= N; ++n) G.add(n * d, adams(n, c).divided(n));
    // F = exp(G) via the Euler-operator recursion |d| F_d = sum_e |e| G_e F_{d-e}
    MotSeries F = MotSeries::one(N);
    for (DimVector d : graded_vectors(N)) {
        FracRat acc;
        for (const auto& [e, g] : G.coeffs()) {
            if (!fits(e, d)) continue;
            FracRat r = F.coeff({d.d0 - e.d0, d.d1 - e.d1});
            if (r.is_zero()) continue;
            acc += g * r * FracRat::integer(e.total());
        }
        if (!acc.is_zero()) F.add(d, acc.divided(d.total()));
    }
    return F;
}

MotSeries plog(const MotSeries& F) {
    if (!(F.coeff({0, 0}) == FracRat::integer(1)))
        throw Error(Errc::ConstantTermNotOne, "plog needs constant term 1");
    const int N = F.order();
    MotSeries G(N);  // log F
    for (DimVector d : graded_vectors(N)) {
        FracRat acc;
        for (const auto& [e, g] : G.coeffs()) {
            if (!fits(e, d) || e == d) continue;
            FracRat r = F.coeff({d.d0 - e.d0, d.d1 - e.d1});
            if (r.is_zero()) continue;
            acc += g * r * FracRat::integer(e.total());
        }
        FracRat gd = F.coeff(d) - acc.divided(d.total());
        G.add(d, gd);
    }
    // invert G = sum_n psi_n(f) / n degree by degree
    MotSeries f(N);
    for (DimVector d : graded_vectors(N)) {
        FracRat v = G.coeff(d);
        long long g = std::gcd(d.d0, d.d1);
        for (long long n = 2; n <= g; ++n) {
            if (g % n != 0) continue;
            FracRat base = f.coeff({d.d0 / n, d.d1 / n});
            if (!base.is_zero()) v -= adams(n, base).divided(n);
        }
        f.add(d, v);
    }
    return f;
}

FracRat hsp_lhalf_diff() { return FracRat(FracPoly::uv(Rat(-1, 2)) - FracPoly::uv(Rat(1, 2))); }

std::vector<BpsValue> extract_bps(const MotSeries& F, DimVector delta, int kmax) {
    if (delta.is_zero() || std::gcd(delta.d0, delta.d1) != 1)
        throw Error(Errc::InvalidParams, "extract_bps needs a primitive dimension vector");
    for (const auto& [d, c] : F.coeffs()) {
        if (d.is_zero()) continue;
        // d must be a positive multiple of delta
        bool ok = d.d0 * delta.d1 == d.d1 * delta.d0;
        if (!ok) throw Error(Errc::SupportViolation, "coefficient off the ray of delta");
    }
    MotSeries f = plog(F);
    FracRat w = hsp_lhalf_diff();
    std::vector<BpsValue> out;
    for (long long k = 1; k <= kmax && k * delta.total() <= F.order(); ++k) {
        FracRat v = f.coeff(k * delta) * w;
        out.push_back({v, is_laurent_polynomial(v).has_value()});
    }
    return out;
}

MotSeries bps_ansatz(int order, DimVector delta, const std::vector<FracRat>& bps) {
    MotSeries f(order);
    FracRat w = hsp_lhalf_diff();
    for (std::size_t k = 1; k <= bps.size(); ++k) f.add(static_cast<long long>(k) * delta, bps[k - 1] / w);
    return sym(f);
}

}  // namespace motdt
