#include <cmath>

#include "doctest.h"

#include "conehull/closed_forms.hpp"
#include "conehull/errors.hpp"
#include "conehull/estimators.hpp"
#include "conehull/special.hpp"

using namespace conehull;

TEST_CASE("poisson f-vector estimator hits the oracle, d = 2") {
    PoissonParams p{2, 2.0, 2.0};
    auto f = estimate_f_vector_poisson(p, 600, 1001, 2);
    REQUIRE(f.size() == 2);
    CHECK(std::fabs(f[0].z_against(6.0)) < 4.0);
    CHECK(std::fabs(f[1].z_against(6.0)) < 4.0);

    PoissonParams limit{2, 1.0, 2.0};
    auto g = estimate_f_vector_poisson(limit, 600, 1002, 2);
    CHECK(std::fabs(g[1].z_against(PI * PI / 2.0)) < 4.0);
}

TEST_CASE("icosahedral means in three dimensions") {
    PoissonParams p{3, 2.0, 2.0};
    auto f = estimate_f_vector_poisson(p, 400, 1003, 2);
    REQUIRE(f.size() == 3);
    CHECK(std::fabs(f[0].z_against(12.0)) < 4.0);
    CHECK(std::fabs(f[1].z_against(30.0)) < 4.0);
    CHECK(std::fabs(f[2].z_against(20.0)) < 4.0);
}

TEST_CASE("T estimator: facet identity and oracle values") {
    PoissonParams p{2, 2.0, 2.0};
    // a = b = 0 is the facet count, replicate for replicate
    auto t00 = estimate_T(p, 0, 0, 300, 777, 2);
    auto f = estimate_f_vector_poisson(p, 300, 777, 2);
    CHECK(t00.est.mean == f[1].mean);
    CHECK(t00.est.stderr_ == f[1].stderr_);

    // T_{1,1} = d * volume: mean 2 * 0.5 = 1 at d=2, gamma=2, c=2
    auto t11 = estimate_T(p, 1, 1, 500, 778, 2);
    CHECK(std::fabs(t11.est.z_against(1.0)) < 4.0);

    // T_{1,0} at gamma = 1: c pi/4
    PoissonParams q{2, 1.0, 1.0};
    auto t10 = estimate_T(q, 1, 0, 800, 779, 2);
    CHECK(std::fabs(t10.est.z_against(PI / 4.0)) < 4.0);
    CHECK(t10.heavy_tail); // (gamma-b)d + b - a = 1 <= 2 gamma
}

TEST_CASE("volume estimator") {
    PoissonParams p{2, 2.0, 2.0};
    auto v = estimate_volume(p, 600, 888, 2);
    CHECK(std::fabs(v.est.z_against(0.5)) < 4.0);
    CHECK(!v.heavy_tail);
    PoissonParams q{2, 1.2, 2.0};
    CHECK(estimate_volume(q, 10, 1, 1).heavy_tail);
}

TEST_CASE("intrinsic volume estimator") {
    PoissonParams p{2, 2.0, 2.0};
    // k = d degenerates to the volume estimator, equal per replicate
    auto vk = estimate_intrinsic_volume(p, 2, 4, 200, 999, 2);
    auto vol = estimate_volume(p, 200, 999, 2);
    CHECK(vk.est.mean == vol.est.mean);
    CHECK(vk.est.stderr_ == vol.est.stderr_);

    // k = 1 against the projection-identity oracle (pi/2 at c = 2)
    auto v1 = estimate_intrinsic_volume(p, 1, 8, 500, 1000, 2);
    const double oracle = expected_intrinsic_volume(2, 2.0, 2.0, 1).value;
    CHECK(oracle == doctest::Approx(PI / 2.0).epsilon(1e-12));
    CHECK(std::fabs(v1.est.z_against(oracle)) < 4.0);

    CHECK_THROWS_AS(estimate_intrinsic_volume(p, 0, 4, 10, 1, 1), InvalidParams);
}

TEST_CASE("symmetric hull T matches the doubled-intensity oracle") {
    PoissonParams p{2, 2.0, 1.0};
    auto sym00 = estimate_T_symmetric(p, 0, 0, 500, 555, 2);
    CHECK(std::fabs(sym00.est.z_against(expected_T_symmetric(2, 2.0, 1.0, 0, 0).value)) < 4.0);
    auto sym11 = estimate_T_symmetric(p, 1, 1, 500, 556, 2);
    CHECK(std::fabs(sym11.est.z_against(expected_T_symmetric(2, 2.0, 1.0, 1, 1).value)) < 4.0);
    // cross-check against the asymmetric estimator at 2c
    PoissonParams doubled{2, 2.0, 2.0};
    auto asym11 = estimate_T(doubled, 1, 1, 500, 557, 2);
    const double se = std::sqrt(sym11.est.stderr_ * sym11.est.stderr_ +
                                asym11.est.stderr_ * asym11.est.stderr_);
    CHECK(std::fabs(sym11.est.mean - asym11.est.mean) < 4.0 * se);
}

TEST_CASE("B constant estimator, k = d = 2") {
    Estimate b22 = estimate_B(2, 2, 400, 60, 4242, 2);
    CHECK(std::fabs(b22.z_against(PI * PI / 2.0)) < 4.0);
}

TEST_CASE("cone section limit table") {
    auto table1 = estimate_cone_section_limit(1, {2, 5, 9}, 150, 31337, 2);
    REQUIRE(table1.size() == 4);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(table1[r].f[0].mean == 2.0); // forced geometry in one dimension
        CHECK(table1[r].f[0].stderr_ == 0.0);
    }

    auto table2 = estimate_cone_section_limit(2, {5, 20, 80}, 300, 31338, 2);
    REQUIRE(table2.size() == 4);
    // facet column tracks the exact quadrature values per n
    const std::vector<int> grid{5, 20, 80};
    for (std::size_t r = 0; r < 3; ++r) {
        const double oracle = exact_facets_halfsphere(2, grid[r]);
        CHECK(std::fabs(table2[r].f[1].z_against(oracle)) < 4.0);
    }
    // reference row is the poisson estimator, reproducibly
    auto ref = estimate_f_vector_poisson(PoissonParams{2, 1.0, 2.0}, 300, 31338, 2);
    CHECK(table2[3].f[1].mean == ref[1].mean);
}

TEST_CASE("worker count does not change the numbers") {
    PoissonParams p{2, 1.5, 2.0};
    auto a = estimate_T(p, 0.5, 0.5, 160, 2024, 1);
    auto b = estimate_T(p, 0.5, 0.5, 160, 2024, 4);
    CHECK(a.est.mean == b.est.mean);
    CHECK(a.est.stderr_ == b.est.stderr_);
    auto ea = estimate_B(1, 2, 60, 40, 77, 1);
    auto eb = estimate_B(1, 2, 60, 40, 77, 4);
    CHECK(ea.mean == eb.mean);
    CHECK(ea.stderr_ == eb.stderr_);
}

TEST_CASE("seed changes change the stream") {
    PoissonParams p{2, 2.0, 2.0};
    auto a = estimate_volume(p, 50, 1, 1);
    auto b = estimate_volume(p, 50, 2, 1);
    CHECK(a.est.mean != b.est.mean);
}
