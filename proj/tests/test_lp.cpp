#include <cmath>

#include "doctest.h"

#include "conehull/errors.hpp"
#include "conehull/hull.hpp"
#include "conehull/lp.hpp"
#include "conehull/rng.hpp"
#include "conehull/samplers.hpp"

using namespace conehull;

TEST_CASE("point_in_conv_lp basics") {
    std::vector<Point> pts = {{0, 0}, {2, 0}, {0, 2}};
    CHECK(point_in_conv_lp({0, 0}, pts));           // a vertex itself
    CHECK(point_in_conv_lp({1, 0}, pts));           // edge midpoint
    CHECK(point_in_conv_lp({0.5, 0.5}, pts));       // interior
    CHECK(!point_in_conv_lp({3, 3}, pts));          // outside the bounding box
    CHECK(!point_in_conv_lp({-0.1, 0.0}, pts));
    CHECK(point_in_conv_lp({5, 5}, {{5, 5}}));      // singleton list
    CHECK(!point_in_conv_lp({5, 5.5}, {{5, 5}}));
}

TEST_CASE("point_in_conv_lp matches facet membership on random hulls") {
    Rng rng(314);
    for (int rep = 0; rep < 40; ++rep) {
        const int d = 2 + rep % 3;
        std::vector<Point> pts;
        for (int i = 0; i < 25; ++i) pts.push_back(sample_cauchy_type(d, rng));
        Hull h = convex_hull(pts, std::size_t(d));
        for (int q = 0; q < 20; ++q) {
            Point x = sample_cauchy_type(d, rng);
            CHECK(point_in_conv_lp(x, pts) == contains_point(h, x));
        }
    }
}

TEST_CASE("affine_intersects_hull on the square") {
    std::vector<Point> square = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    // vertical line x = 2 misses
    CHECK(!affine_intersects_hull({2, 0}, {{2, 1}}, square));
    // the y-axis passes through
    CHECK(affine_intersects_hull({0, -2}, {{0, 2}}, square));
    // singleton affine hull inside
    CHECK(affine_intersects_hull({0.5, 0.5}, {}, square));
    CHECK(!affine_intersects_hull({1.5, 0.5}, {}, square));
    // two independent directions span the plane: always meets
    CHECK(affine_intersects_hull({5, 5}, {{6, 5}, {5, 6}}, square));
    // coincident span points are rank-deficient
    CHECK_THROWS_AS(affine_intersects_hull({0, 0}, {{0, 0}}, square), DegenerateAffineHull);
}

namespace {

// grid oracle: a line meets a polygon iff some point t a + (1-t) b of a fine
// parameter sweep lies inside (lines are clipped to a huge parameter range)
bool line_hits_polygon_oracle(const Point& a, const Point& b, const Hull& h) {
    for (double t = -400.0; t <= 400.0; t += 0.01) {
        Point x = add(scaled(a, 1.0 - t), scaled(b, t));
        if (contains_point(h, x)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("affine_intersects_hull agrees with a sweep oracle in the plane") {
    Rng rng(2718);
    int agreements = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(sample_cauchy_type(2, rng));
        Hull h = convex_hull(pts, 2);
        Point a = sample_cauchy_type(2, rng);
        Point b = sample_cauchy_type(2, rng);
        const bool mine = affine_intersects_hull(a, {b}, h.vertices);
        const bool oracle = line_hits_polygon_oracle(a, b, h);
        // the sweep can miss grazing hits; verify agreement when it is sure
        if (oracle) CHECK(mine);
        if (!mine) CHECK(!oracle);
        agreements += (mine == oracle);
    }
    CHECK(agreements >= 97); // grazing-resolution slack
}
