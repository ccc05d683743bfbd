#pragma once

#include <cstdint>
#include <vector>

#include "conehull/stats.hpp"
#include "conehull/vec.hpp"

namespace conehull {

struct Facet {
    Point normal;              // unit outward normal
    double offset = 0.0;       // <normal, x> <= offset on the hull
    std::vector<int> vertices; // d indices into Hull::vertices, affinely independent
};

// Convex hull of points in general position: extreme points plus a simplicial
// facet list. contains_origin is true exactly when every offset is strictly
// positive.
struct Hull {
    std::size_t dim = 0;
    std::vector<Point> vertices;
    std::vector<Facet> facets;
    bool contains_origin = false;
};

using FVector = std::vector<long long>; // (f_0, ..., f_{d-1})

// Incremental beneath-beyond construction with a facet adjacency graph and
// visibility walk. Requires at least d+1 points of dimension d in general
// position; throws DegenerateInput or DimensionMismatch otherwise.
Hull convex_hull(const std::vector<Point>& points, std::size_t d);

// Face counts of a simplicial hull, obtained by deduplicating the vertex
// subsets of the facet simplices.
FVector f_vector(const Hull& h);

bool contains_point(const Hull& h, const Point& x);

// k-dimensional volume of the simplex on k+1 vertices (Gram determinant);
// degenerate input yields 0.
double simplex_volume(const std::vector<Point>& vertices);

double hull_volume(const Hull& h);

// T_{a,b} over facets: sum of |offset|^a * Vol_{d-1}(facet)^b.
double t_functional(const Hull& h, double a, double b);

// For a hull with the origin interior: distance from 0 to the boundary along
// a unit direction.
double radial_function(const Hull& h, const Point& direction);

// Monte Carlo estimate of the complement integral
//   int_{R^d \ h} |x|^{-(d+1)} dx  =  omega(d) * E_theta[ 1 / rho_h(theta) ]
// over uniform sphere directions.
Estimate complement_power_integral(const Hull& h, std::size_t mc_dirs, std::uint64_t seed);

// Euler relation, Dehn-Sommerville, and the T-functional identities that hold
// deterministically for every simplicial hull; used as per-replicate checks.
struct HullIdentityReport {
    bool euler = false;
    bool dehn_sommerville = false; // vacuously true for d = 1
    bool t00_is_facet_count = false;
    bool t11_is_d_volume = false;  // only checked when the origin is interior
    bool all() const { return euler && dehn_sommerville && t00_is_facet_count && t11_is_d_volume; }
};
HullIdentityReport verify_hull_identities(const Hull& h);

} // namespace conehull
