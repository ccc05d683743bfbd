#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"

#include "conehull/closed_forms.hpp"
#include "conehull/errors.hpp"
#include "conehull/samplers.hpp"
#include "conehull/special.hpp"
#include "conehull/stats.hpp"
#include "conehull/subspace.hpp"
#include "conehull/tolerances.hpp"

using namespace conehull;

TEST_CASE("half-sphere points: unit norm, nonnegative first coordinate") {
    Rng rng(101);
    for (int i = 0; i < 2000; ++i) {
        Point u = sample_halfsphere(3, rng);
        REQUIRE(u.size() == 4);
        CHECK(std::fabs(norm(u) - 1.0) < 10 * tol::orthonormal);
        CHECK(u[0] >= 0.0);
    }
}

TEST_CASE("xi_0 is uniform on [0,1] for d = 2") {
    Rng rng(102);
    std::vector<double> u(10000);
    for (double& v : u) v = sample_halfsphere(2, rng)[0];
    CHECK(ks_p_value(u) > 0.01);
}

TEST_CASE("xi_0 density for d = 3") {
    // cdf: (2/pi) (t sqrt(1-t^2) + asin t)
    Rng rng(103);
    std::vector<double> u(10000);
    for (double& v : u) {
        const double t = sample_halfsphere(3, rng)[0];
        v = (2.0 / PI) * (t * std::sqrt(1.0 - t * t) + std::asin(t));
    }
    CHECK(ks_p_value(u) > 0.01);
}

TEST_CASE("gnomonic map") {
    CHECK(gnomonic({1.0, 0.0, 0.0}) == Point{0.0, 0.0});
    const double s = 1.0 / std::sqrt(2.0);
    Point img = gnomonic({s, s, 0.0});
    CHECK(img[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(img[1] == 0.0);
    CHECK_THROWS_AS(gnomonic({0.0, 1.0}), PoleAtEquator);
}

TEST_CASE("gnomonic image in one dimension is standard Cauchy") {
    Rng rng(104);
    std::vector<double> u(10000);
    for (double& v : u) {
        const double x = sample_cauchy_type(1, rng)[0];
        v = 0.5 + std::atan(x) / PI;
    }
    CHECK(ks_p_value(u) > 0.01);
}

TEST_CASE("cauchy-type law in the plane: angle and radius") {
    Rng rng(105);
    const int m = 20000;
    std::vector<double> angle_counts(12, 0.0), angle_expected(12, m / 12.0);
    std::vector<double> radial(m);
    for (int i = 0; i < m; ++i) {
        Point x = sample_cauchy_type(2, rng);
        double a = std::atan2(x[1], x[0]) + PI;
        int bin = std::min(11, int(a / (2.0 * PI) * 12.0));
        angle_counts[bin] += 1.0;
        // exact radial cdf for d = 2: F(t) = 1 - 1/sqrt(1+t^2)
        radial[i] = 1.0 - 1.0 / std::sqrt(1.0 + norm2(x));
    }
    CHECK(chi_square_p_value(angle_counts, angle_expected) > 0.01);
    CHECK(ks_p_value(radial) > 0.01);
}

TEST_CASE("cauchy-type tail is regularly varying with the stated constant") {
    // n P(|X| > r n) -> (2 Gamma((d+1)/2)/(sqrt(pi) Gamma(d/2))) / r, d = 2, r = 1
    Rng rng(106);
    const int n = 1000, m = 400000;
    long hits = 0;
    for (int i = 0; i < m; ++i)
        if (norm2(sample_cauchy_type(2, rng)) > double(n) * double(n)) ++hits;
    const double p_hat = double(hits) / m;
    const double se = std::sqrt(p_hat * (1.0 - p_hat) / m);
    const double expect = 1.0 / n; // the constant equals 1 for d = 2
    CHECK(std::fabs(p_hat - expect) < 4.0 * se + 1e-7);
}

TEST_CASE("poisson annulus: count law and radial law") {
    PoissonParams p{2, 1.0, 2.0};
    CHECK(poisson_tail_mass(p, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    Rng rng(115);
    const int reps = 4000;
    std::vector<double> counts(8, 0.0), expected(8, 0.0);
    std::vector<double> radial;
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < reps; ++i) {
        auto pts = sample_poisson_annulus(p, 1.0, inf, rng);
        counts[std::min<std::size_t>(7, pts.size())] += 1.0;
        for (const auto& x : pts) {
            const double r = norm(x);
            CHECK(r > 1.0);
            radial.push_back(1.0 - 1.0 / r); // F(t) = 1 - (r_in/t)^gamma
        }
    }
    // Poisson(1) pmf
    double cum = 0.0;
    for (int k = 0; k < 7; ++k) {
        expected[k] = reps * std::exp(-1.0 + k * std::log(1.0) - log_factorial(k));
        cum += expected[k];
    }
    expected[7] = reps - cum;
    CHECK(chi_square_p_value(counts, expected) > 0.01);
    CHECK(ks_p_value(radial) > 0.01);
}

TEST_CASE("disjoint annuli have uncorrelated counts") {
    PoissonParams p{2, 1.0, 2.0};
    Rng rng(108);
    const int reps = 3000;
    std::vector<double> a(reps), b(reps);
    for (int i = 0; i < reps; ++i) {
        a[i] = double(sample_poisson_annulus(p, 0.5, 1.0, rng).size());
        b[i] = double(sample_poisson_annulus(p, 1.0, 2.0, rng).size());
    }
    double ma = 0, mb = 0;
    for (int i = 0; i < reps; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= reps;
    mb /= reps;
    double cov = 0, va = 0, vb = 0;
    for (int i = 0; i < reps; ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    const double corr = cov / std::sqrt(va * vb);
    CHECK(std::fabs(corr) < 3.0 / std::sqrt(double(reps)));
}

TEST_CASE("invalid radii are rejected") {
    PoissonParams p{2, 1.0, 2.0};
    Rng rng(1);
    CHECK_THROWS_AS(sample_poisson_annulus(p, 2.0, 1.0, rng), InvalidRadii);
    CHECK_THROWS_AS(sample_poisson_annulus(p, 0.0, 1.0, rng), InvalidRadii);
    CHECK_THROWS_AS(validate(PoissonParams{0, 1.0, 1.0}), InvalidParams);
    CHECK_THROWS_AS(validate(PoissonParams{2, -1.0, 1.0}), InvalidParams);
}

TEST_CASE("certified poisson hulls") {
    PoissonParams p{2, 1.0, 2.0};
    Rng rng(109);
    for (int i = 0; i < 400; ++i) {
        auto [sample, hull] = sample_poisson_hull(p, rng);
        CHECK(sample.certified);
        CHECK(hull.contains_origin);
        for (const auto& f : hull.facets) CHECK(f.offset >= sample.r_trunc);
        for (const auto& x : sample.points) CHECK(norm(x) > sample.r_trunc);
        for (const auto& v : hull.vertices) CHECK(norm(v) > sample.r_trunc);
        CHECK(verify_hull_identities(hull).all());
    }
}

TEST_CASE("poisson hull facet count matches the oracle, d = 2, gamma = 2") {
    PoissonParams p{2, 2.0, 2.0};
    const std::uint64_t master = 110;
    std::vector<double> facet_counts;
    for (int i = 0; i < 600; ++i) {
        Rng rng(derive_seed(master, i));
        auto [sample, hull] = sample_poisson_hull(p, rng);
        facet_counts.push_back(double(f_vector(hull)[1]));
    }
    Estimate e = make_estimate(facet_counts, master, "f1");
    CHECK(std::fabs(e.z_against(expected_facets_poisson(2, 2.0))) < 4.0);
}

TEST_CASE("symmetric hull is centrally symmetric with interior origin") {
    PoissonParams p{2, 2.0, 1.0};
    Rng rng(111);
    for (int i = 0; i < 60; ++i) {
        Hull h = sample_symmetric_hull(p, rng);
        CHECK(h.contains_origin);
        for (const auto& f : h.facets) {
            bool mirrored = false;
            for (const auto& g : h.facets) {
                if (std::fabs(f.offset - g.offset) < 1e-7 &&
                    norm(add(f.normal, g.normal)) < 1e-7) {
                    mirrored = true;
                    break;
                }
            }
            CHECK(mirrored);
        }
    }
}

TEST_CASE("cone samples") {
    Rng rng(112);
    for (int i = 0; i < 50; ++i) {
        ConeSample cs = sample_cone(1, 2 + i % 7, rng);
        Hull h = section_hull(cs);
        CHECK(f_vector(h) == FVector{2}); // f_1 of the cone is always 2
    }
    for (int i = 0; i < 50; ++i) {
        ConeSample cs = sample_cone(2, 3, rng);
        Hull h = section_hull(cs);
        CHECK(f_vector(h) == FVector{3, 3}); // triangle: f_2(C_3) = 3
    }
    // gnomonic consistency invariant
    ConeSample cs = sample_cone(3, 10, rng);
    for (int i = 0; i < cs.n; ++i) {
        Point img = gnomonic(cs.halfsphere_points[std::size_t(i)]);
        CHECK(norm(sub(img, cs.gnomonic_points[std::size_t(i)])) < 1e-14);
    }
    CHECK_THROWS_AS(sample_cone(2, 2, rng), InvalidParams);
}

TEST_CASE("identical seeds reproduce identical samples bit for bit") {
    PoissonParams p{3, 1.5, 2.0};
    Rng a(424242), b(424242);
    auto [sa, ha] = sample_poisson_hull(p, a);
    auto [sb, hb] = sample_poisson_hull(p, b);
    CHECK(sa.points == sb.points);
    CHECK(sa.r_trunc == sb.r_trunc);
    CHECK(ha.vertices == hb.vertices);
    Rng c(7), d(7);
    CHECK(sample_cone(2, 40, c).gnomonic_points == sample_cone(2, 40, d).gnomonic_points);
}

TEST_CASE("projection of the process points keeps the power-law count level") {
    // counts outside R in a Haar k-subspace are Poisson with mean
    // c omega(k) / (gamma omega(k+gamma)) R^{-gamma}; quick 3-sigma mean check
    PoissonParams p{3, 1.0, 2.0};
    const double R = 1.0;
    Rng rng(113);
    for (int k : {1, 2}) {
        PoissonParams proj{k, p.gamma, p.c};
        const double mean = poisson_tail_mass(proj, R);
        const int reps = 800;
        std::vector<double> counts(reps);
        for (int i = 0; i < reps; ++i) {
            auto [sample, hull] = sample_poisson_hull(p, rng);
            Subspace sub = haar_subspace(3, std::size_t(k), rng);
            long n_out = 0;
            for (const auto& q : project_points(sample.points, sub))
                if (norm(q) > R) ++n_out;
            counts[i] = double(n_out);
        }
        Estimate e = make_estimate(counts, 113, "proj");
        CHECK(std::fabs(e.z_against(mean)) < 4.0);
    }
}

TEST_CASE("one-dimensional non-absorption probability") {
    // P(R not in conv Pi_{1,gamma}(c)) = exp(-c/(gamma omega(gamma+1)) R^-gamma)
    Rng rng(114);
    const double c = 2.0;
    for (double gamma : {1.0, 2.0}) {
        PoissonParams p{1, gamma, c};
        for (double R : {0.5, 1.0, 2.0}) {
            const double expect = std::exp(-c / (gamma * omega(gamma + 1.0)) * std::pow(R, -gamma));
            const int reps = 4000;
            std::vector<double> hit(reps);
            for (int i = 0; i < reps; ++i) {
                auto [sample, hull] = sample_poisson_hull(p, rng);
                hit[i] = contains_point(hull, {R}) ? 0.0 : 1.0;
            }
            Estimate e = make_estimate(hit, 114, "nonabsorb");
            CHECK(std::fabs(e.mean - expect) < 3.0 * e.stderr_ + 1e-9);
        }
    }
}
