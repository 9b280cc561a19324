#include "doctest.h"
#include "motdt/error.hpp"
#include "motdt/quiver.hpp"

using namespace motdt;

TEST_SUITE("quiver") {
    TEST_CASE("euler pairing examples") {
        CHECK(euler_pairing({1, 0}, {1, 0}) == 1);
        CHECK(euler_pairing({3, -1}, {1, 3}) == 0);
        CHECK(euler_pairing({2, -1}, {1, 2}) == 0);
    }

    TEST_CASE("g-vector examples") {
        CHECK(g_vector_T(0) == GVector{1, 0});
        CHECK(g_vector_T(2) == GVector{3, -1});
        CHECK(g_vector_T(-1) == GVector{0, 1});
        CHECK(g_vector_T(1) == GVector{4, -1});
        CHECK(g_vector_E(3) == GVector{-8, 3});
    }

    TEST_CASE("k matrix") {
        CHECK(k_matrix_pow(0) == IntMatrix2{{{1, 0}, {0, 1}}});
        CHECK(k_matrix_pow(1) == IntMatrix2{{{-1, -4}, {1, 3}}});
        CHECK(k_matrix_pow(2) == IntMatrix2{{{-3, -8}, {2, 5}}});
        CHECK(k_matrix_pow(-1) == IntMatrix2{{{3, 4}, {-1, -1}}});
        for (long long n = -50; n <= 50; ++n) CHECK(k_matrix_pow(n) == k_matrix_closed_form(n));
    }

    TEST_CASE("orthogonality of walls and dual rays") {
        for (long long n = 0; n <= 50; ++n) {
            CHECK(euler_pairing(g_vector_T(2 * n), DimVector{n, 1 + 2 * n}) == 0);
            CHECK(euler_pairing(g_vector_T(2 * n - 1), DimVector{2 * n - 1, 4 * n}) == 0);
        }
        for (long long i = -100; i <= 100; ++i) {
            StableRay r = wall_dual_ray(i);
            CHECK(euler_pairing(i >= 0 ? g_vector_T(i) : g_vector_E(i), r.dim) == 0);
            CHECK(r.shifted == (i < 0));
        }
        CHECK(wall_dual_ray(-1).name() == "O_2C(-1)[1]");
        CHECK(wall_dual_ray(-1).dim == DimVector{1, 0});
        CHECK(wall_dual_ray(0).name() == "O_C(-1)");
    }

    TEST_CASE("rank and degree") {
        auto rd = rank_degree({1, 2});
        CHECK(rd.rank == 0);
        CHECK(rd.degree == 1);
        rd = rank_degree({0, 1});
        CHECK(rd.rank == 1);
        CHECK(rd.degree == -1);
        rd = rank_degree({0, 0});
        CHECK(rd.rank == 0);
        CHECK(rd.degree == 0);
    }

    TEST_CASE("stable rays under the default parameter") {
        auto rays = stable_rays(StabilityParam{}, 3);
        bool pt = false;
        for (const auto& r : rays) {
            if (r.kind == RayKind::Pt) {
                pt = true;
                CHECK(r.dim == DimVector{1, 2});
                CHECK(r.re == Rat(0));
                CHECK(r.im == 3);
            }
            if (r.dim == DimVector{0, 1}) {
                CHECK(r.name() == "O_C(-1)");
                CHECK(r.re == Rat(1));
                CHECK(r.im == 1);
            }
            if (r.dim == DimVector{1, 0}) {
                CHECK(r.name() == "O_2C(-1)[1]");
                CHECK(r.re == Rat(-2));
            }
        }
        CHECK(pt);
        auto big = stable_rays(StabilityParam{}, 60);
        for (std::size_t i = 0; i + 1 < big.size(); ++i) {
            CHECK(phase_greater(big[i], big[i + 1]));
            CHECK_FALSE(phase_greater(big[i + 1], big[i]));
        }
        for (const auto& r : big) {
            long long rk = std::llabs(rank_degree(r.dim).rank);
            CHECK(rk == (r.kind == RayKind::Pt ? 0 : r.kind == RayKind::Curve ? 1 : 2));
        }
    }

    TEST_CASE("stability parameter checks") {
        CHECK_THROWS_AS(stable_rays(StabilityParam{1, 1}, 4), Error);
        CHECK_THROWS_AS(stable_rays(StabilityParam{-1, 2}, 4), Error);
        CHECK_NOTHROW(stable_rays(StabilityParam{Rat(5, 2), Rat(1, 3)}, 4));
    }
}
