#pragma once

#include <optional>
#include <vector>

#include "motdt/blowup.hpp"
#include "motdt/motive.hpp"
#include "motdt/quiver.hpp"
#include "motdt/series.hpp"
#include "motdt/vanishing.hpp"

namespace motdt {

struct BpsEntry {
    std::optional<MotiveExpr> expr;  // symbolic class when the engine has one
    FracRat hsp;
};

struct InvariantsReport {
    int a = 2;
    std::optional<int> b;
    int order = 6;
    BpsEntry bps_pt;               // the same for every k
    std::vector<BpsEntry> bps_2c;  // index k - 1, k = 1..order
    std::vector<BpsEntry> bps_c;   // index k - 1, k = 1..order
    FracRat hsp1, hsp2;
    long long gv1 = 0, gv2 = 0;
    long long dim_con = 0, dim_con_ab = 0;
    ResolutionGraph graph;
    std::vector<StableRay> rays;  // by descending phase
    MotSeries partition{0};
};

constexpr int kDefaultOrder = 6;

InvariantsReport compute_report(int a, std::optional<int> b, int order);

// BPS value the assembly attaches to k * ray.dim
FracRat ray_bps(const InvariantsReport& r, const StableRay& ray, long long k);

struct HspFormulas {
    FracRat hsp1;              // closed-form display, equal to the engine value
    FracRat hsp2;              // engine value
    FracRat hsp2_display;      // display, trivial-character reading of the j = a term
    FracRat hsp2_literal;      // display read literally (j = a gives u)
    FracPoly hsp2_twist;       // hsp2 = hsp2_twist * hsp2_display
};
HspFormulas hsp_formulas(int a, std::optional<int> b);
FracRat hsp1_display(int a, std::optional<int> b);

// all hsp-level fields and the partition series
bool reports_equal(const InvariantsReport& x, const InvariantsReport& y);
std::vector<std::vector<bool>> compare_flops(int a, const std::vector<std::optional<int>>& bs, int order);
bool strong_rationality_check(const InvariantsReport& r);

}  // namespace motdt
