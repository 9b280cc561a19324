#pragma once

#include <array>
#include <string>
#include <vector>

#include "motdt/series.hpp"
#include "motdt/spectrum.hpp"

namespace motdt {

// class in the basis [P0], [P1]
struct GVector {
    long long c0 = 0, c1 = 0;
    GVector operator-() const { return {-c0, -c1}; }
    friend bool operator==(const GVector&, const GVector&) = default;
};

struct StabilityParam {
    Rat v0 = 2, v1 = -1;
};

using IntMatrix2 = std::array<std::array<long long, 2>, 2>;

enum class RayKind { Pt, Curve, TwoCurve };

// Stable objects: O_p, O_C(twist)[shift], O_2C(twist)[shift].
struct StableRay {
    RayKind kind = RayKind::Pt;
    long long twist = 0;
    bool shifted = false;
    DimVector dim;
    // Z_v(dim) = re + i*im with re = -<v, dim>; phases compare by cross products
    Rat re = 0;
    long long im = 0;
    std::string name() const;
};

long long euler_pairing(const GVector& g, const DimVector& d);
GVector g_vector_T(long long i);
GVector g_vector_E(long long i);
IntMatrix2 k_matrix_pow(long long n);
IntMatrix2 k_matrix_closed_form(long long n);

// rays with dim total <= order, by strictly descending phase
std::vector<StableRay> stable_rays(const StabilityParam& v, int order);
// true if x has strictly larger phase than y
bool phase_greater(const StableRay& x, const StableRay& y);

struct RankDegree {
    long long rank, degree;
};
RankDegree rank_degree(const DimVector& d);

// The stable object whose dimension vector is orthogonal to the wall [T_i]
// (i >= 0) or [E_i] (i < 0).
StableRay wall_dual_ray(long long i);

}  // namespace motdt
