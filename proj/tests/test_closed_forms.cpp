#include <cmath>

#include "doctest.h"

#include "conehull/closed_forms.hpp"
#include "conehull/errors.hpp"
#include "conehull/quadrature.hpp"
#include "conehull/special.hpp"
#include "conehull/tolerances.hpp"

using namespace conehull;

TEST_CASE("kappa and omega") {
    CHECK(kappa(2) == doctest::Approx(PI).epsilon(1e-14));
    CHECK(kappa(3) == doctest::Approx(4.0 * PI / 3.0).epsilon(1e-14));
    CHECK(omega(2) == doctest::Approx(2.0 * PI).epsilon(1e-14));
    CHECK(omega(3) == doctest::Approx(4.0 * PI).epsilon(1e-14));
    CHECK(omega(1) == doctest::Approx(2.0).epsilon(1e-14));
    for (int s = 1; s <= 8; ++s)
        CHECK(omega(s) == doctest::Approx(s * kappa(s)).epsilon(1e-13));
    CHECK_THROWS_AS(omega(0.0), InvalidParams);
    CHECK_THROWS_AS(kappa(-1.0), InvalidParams);
}

TEST_CASE("exact facet formula quadrature") {
    for (int n : {2, 5, 17, 100}) CHECK(exact_facets_halfsphere(1, n) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(exact_facets_halfsphere(2, 3) == doctest::Approx(3.0).epsilon(1e-12));
    // frozen quadrature values (30-digit arithmetic)
    CHECK(exact_facets_halfsphere(2, 5) == doctest::Approx(3.92072898145973371).epsilon(1e-12));
    CHECK(exact_facets_halfsphere(2, 10) == doctest::Approx(4.58504033364516963).epsilon(1e-12));
    CHECK(exact_facets_halfsphere(2, 20) == doctest::Approx(4.83123775491628381).epsilon(1e-12));
    CHECK(exact_facets_halfsphere(2, 100) == doctest::Approx(4.93007887392135467).epsilon(1e-12));
    CHECK(exact_facets_halfsphere(3, 10) == doctest::Approx(9.95342104982798764).epsilon(1e-12));
    CHECK(exact_facets_halfsphere(3, 50) == doctest::Approx(12.9662448835250105).epsilon(1e-12));
    CHECK_THROWS_AS(exact_facets_halfsphere(3, 2), InvalidParams);
}

TEST_CASE("exact facet formula is increasing and converges to the limit") {
    for (int d : {2, 3}) {
        double prev = 0.0;
        double value = 0.0;
        for (int n = std::max(4, d + 1); n <= (1 << 14); n *= 2) {
            value = exact_facets_halfsphere(d, n);
            CHECK(value > prev);
            prev = value;
        }
        CHECK(std::fabs(value - limit_facets_halfsphere(d)) < 5e-3);
    }
    CHECK(limit_facets_halfsphere(1) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(limit_facets_halfsphere(2) == doctest::Approx(PI * PI / 2.0).epsilon(1e-13));
    CHECK(limit_facets_halfsphere(3) == doctest::Approx(4.0 * PI * PI / 3.0).epsilon(1e-13));
}

TEST_CASE("expected facets of the Poisson hull") {
    CHECK(expected_facets_poisson(2, 2.0) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(expected_facets_poisson(3, 2.0) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(expected_facets_poisson(2, 1.0) == doctest::Approx(PI * PI / 2.0).epsilon(1e-12));
    // gamma = 2 gives central binomials
    for (int d = 1; d <= 6; ++d)
        CHECK(expected_facets_poisson(d, 2.0) ==
              doctest::Approx(choose(2 * d, d)).epsilon(1e-10));
    // gamma = 1 matches the half-sphere limit
    for (int d = 1; d <= 6; ++d)
        CHECK(expected_facets_poisson(d, 1.0) ==
              doctest::Approx(limit_facets_halfsphere(d)).epsilon(1e-12));
    // frozen values
    CHECK(expected_facets_poisson(2, 0.5) == doctest::Approx(4.37687923045295328).epsilon(1e-12));
    CHECK(expected_facets_poisson(4, 3.0) == doctest::Approx(111.243988179761939).epsilon(1e-12));
}

TEST_CASE("expected facets, d = 2, arbitrary gamma: beta-function form") {
    // 4 pi B(1/2, g+1/2) / B(1/2, (g+1)/2)^2
    auto beta_fn = [](double x, double y) {
        return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
    };
    for (double g : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.5}) {
        const double reference =
            4.0 * PI * beta_fn(0.5, g + 0.5) / std::pow(beta_fn(0.5, (g + 1.0) / 2.0), 2);
        CHECK(expected_facets_poisson(2, g) == doctest::Approx(reference).epsilon(1e-12));
    }
}

TEST_CASE("expected T functional") {
    // a = b = 0 reduces to the facet count, on a parameter grid, c-free
    for (int d = 1; d <= 5; ++d)
        for (double g : {0.5, 1.0, 2.0, 3.0})
            for (double c : {0.1, 1.0, 10.0})
                CHECK(expected_T(d, g, c, 0, 0).value ==
                      doctest::Approx(expected_facets_poisson(d, g)).epsilon(tol::oracle_relative));
    // d=2, gamma=1, a=1, b=0: c pi / 4
    for (double c : {0.5, 1.0, 2.0, 7.0})
        CHECK(expected_T(2, 1.0, c, 1, 0).value == doctest::Approx(c * PI / 4.0).epsilon(1e-12));
    // frozen spot checks
    CHECK(expected_T(4, 0.5, 7.0, 0, 0).value == doctest::Approx(23.6340900161542315).epsilon(1e-12));
    CHECK(expected_T(5, 3.0, 7.0, 0, 0).value == doctest::Approx(470.833312746171221).epsilon(1e-12));
    // infinity branches
    CHECK(expected_T(2, 1.0, 1.0, 0, 1).is_infinite());  // gamma <= b
    CHECK(expected_T(2, 1.0, 1.0, 2, 0).is_infinite());  // (g-b)d + b - a = 0
    CHECK(expected_T(2, 1.0, 1.0, 2.5, 0).is_infinite());
    CHECK(!expected_T(2, 1.0, 1.0, 1.99, 0).is_infinite());
}

TEST_CASE("expected volume") {
    // gamma = 2: (1/d!) (c/2)^{d/2}
    for (int d = 1; d <= 4; ++d)
        for (double c : {0.5, 2.0, 8.0})
            CHECK(expected_volume_poisson(d, 2.0, c).value ==
                  doctest::Approx(std::exp(-log_factorial(d)) * std::pow(0.5 * c, 0.5 * d))
                      .epsilon(1e-12));
    CHECK(expected_volume_poisson(2, 2.0, 2.0).value == doctest::Approx(0.5).epsilon(1e-12));
    // gamma <= 1 is infinite
    CHECK(expected_volume_poisson(2, 1.0, 1.0).is_infinite());
    CHECK(expected_volume_poisson(3, 0.5, 1.0).is_infinite());
    // T route: T_{1,1}/d equals the volume for gamma > 1
    for (int d = 1; d <= 5; ++d)
        for (double g : {1.5, 2.0, 3.0})
            CHECK(expected_T(d, g, 2.0, 1, 1).value / d ==
                  doctest::Approx(expected_volume_poisson(d, g, 2.0).value)
                      .epsilon(tol::oracle_relative));
    // frozen values
    CHECK(expected_volume_poisson(3, 2.0, 1.0).value ==
          doctest::Approx(0.0589255650988789604).epsilon(1e-12));
    CHECK(expected_volume_poisson(2, 3.0, 1.0).value ==
          doctest::Approx(0.276980139182545102).epsilon(1e-12));
    CHECK(expected_volume_poisson(2, 1.5, 1.0).value ==
          doctest::Approx(0.383952591543923274).epsilon(1e-12));
}

TEST_CASE("expected intrinsic volumes") {
    // k = d degenerates to the volume
    for (int d = 1; d <= 4; ++d)
        CHECK(expected_intrinsic_volume(d, 2.0, 2.0, d).value ==
              doctest::Approx(expected_volume_poisson(d, 2.0, 2.0).value)
                  .epsilon(tol::oracle_relative));
    // two-route value: d=3, gamma=2, k=2 equals c/2
    for (double c : {1.0, 2.0, 5.0})
        CHECK(expected_intrinsic_volume(3, 2.0, c, 2).value ==
              doctest::Approx(0.5 * c).epsilon(1e-12));
    // V_1 of the planar hull at gamma=2, c=2 is pi/2
    CHECK(expected_intrinsic_volume(2, 2.0, 2.0, 1).value ==
          doctest::Approx(PI / 2.0).epsilon(1e-12));
    CHECK(expected_intrinsic_volume(2, 1.0, 2.0, 1).is_infinite());
    CHECK_THROWS_AS(expected_intrinsic_volume(2, 2.0, 1.0, 0), InvalidParams);
    CHECK_THROWS_AS(expected_intrinsic_volume(2, 2.0, 1.0, 3), InvalidParams);
}

TEST_CASE("symmetric hull oracle") {
    for (double c : {0.5, 1.0, 3.0}) {
        CHECK(expected_T_symmetric(2, 2.0, c, 1, 1).value ==
              doctest::Approx(expected_T(2, 2.0, 2.0 * c, 1, 1).value).epsilon(1e-15));
        // facet count does not depend on c at all
        CHECK(expected_T_symmetric(3, 2.0, c, 0, 0).value ==
              doctest::Approx(expected_facets_poisson(3, 2.0)).epsilon(1e-12));
    }
    CHECK(expected_T_symmetric(2, 1.0, 1.0, 0, 2).is_infinite());
}

TEST_CASE("B constants") {
    CHECK(constant_B(2, 2)->value == doctest::Approx(PI * PI / 2.0).epsilon(1e-13));
    CHECK(constant_B(3, 3)->value == doctest::Approx(4.0 * PI * PI).epsilon(1e-13));
    CHECK(constant_B(2, 3)->value == doctest::Approx(2.0 * PI * PI).epsilon(1e-13));
    CHECK(constant_B(1, 1)->value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(constant_B(4, 3)->value == 0.0); // B_{d+1,d}
    CHECK(!constant_B(1, 2).has_value());  // no closed form
    CHECK(!constant_B(3, 5).has_value());
}

TEST_CASE("limit f-vector") {
    auto f2 = limit_f_vector(2);
    REQUIRE(f2.size() == 2);
    CHECK(*f2[0] == doctest::Approx(PI * PI / 2.0).epsilon(1e-12));
    CHECK(*f2[1] == doctest::Approx(PI * PI / 2.0).epsilon(1e-12));

    auto f3 = limit_f_vector(3);
    REQUIRE(f3.size() == 3);
    CHECK(*f3[0] == doctest::Approx(2.0 + 2.0 * PI * PI / 3.0).epsilon(1e-12));
    CHECK(*f3[1] == doctest::Approx(2.0 * PI * PI).epsilon(1e-12));
    CHECK(*f3[2] == doctest::Approx(4.0 * PI * PI / 3.0).epsilon(1e-12));
    // internal relations: 3 f_2 = 2 f_1 and Euler
    CHECK(3.0 * *f3[2] == doctest::Approx(2.0 * *f3[1]).epsilon(1e-12));
    CHECK(*f3[0] - *f3[1] + *f3[2] == doctest::Approx(2.0).epsilon(1e-12));

    auto f1 = limit_f_vector(1);
    CHECK(*f1[0] == doctest::Approx(2.0).epsilon(1e-12));

    // d = 5: entries without a closed form stay unknown
    auto f5 = limit_f_vector(5);
    CHECK(!f5[0].has_value());
    CHECK(!f5[2].has_value());
    CHECK(f5[1].has_value());
    CHECK(f5[3].has_value());
    CHECK(f5[4].has_value());
}

TEST_CASE("simplex moments of beta-prime points") {
    CHECK(simplex_moment_betaprime(3, 1.0, 3, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    // frozen values, cross-checked against 2-d quadrature of the defining
    // integral at 30 digits
    CHECK(simplex_moment_betaprime(2, 1.0, 2, 1.0) == doctest::Approx(PI / 2.0).epsilon(1e-12));
    CHECK(simplex_moment_betaprime(3, 2.0, 2, 1.5) ==
          doctest::Approx(0.805685838049262441).epsilon(1e-12));
    CHECK(simplex_moment_betaprime(2, 2.0, 2, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(simplex_moment_betaprime(2, 1.0, 2, 2.0), InfiniteMoment);

    // independent oracle at runtime: k = 2 pairs in one dimension, numeric
    // double integral with the tangent substitution
    const int d = 2;
    const double g = 1.0, beta = 1.0;
    const double cnorm = omega(d - 1 + g) / omega(d + g);
    GaussLegendre rule(60);
    auto inner = [&](double u) {
        const double x = std::tan(u);
        const double fu = cnorm * std::pow(1.0 + x * x, -0.5 * (d + g)) / std::pow(std::cos(u), 2);
        auto f = [&](double v) {
            const double y = std::tan(v);
            return std::fabs(x - y) *
                   cnorm * std::pow(1.0 + y * y, -0.5 * (d + g)) / std::pow(std::cos(v), 2);
        };
        return fu * rule.integrate(f, -PI / 2 + 1e-12, PI / 2 - 1e-12);
    };
    const double quad = rule.integrate(inner, -PI / 2 + 1e-12, PI / 2 - 1e-12);
    CHECK(simplex_moment_betaprime(d, g, 2, beta) == doctest::Approx(quad).epsilon(1e-3));
}
