#pragma once

#include <vector>

#include "conehull/vec.hpp"

namespace conehull {

// Decides whether x is a convex combination of `points` by phase-1 of a dense
// two-phase simplex with Bland's rule. Always terminates with an answer.
bool point_in_conv_lp(const Point& x, const std::vector<Point>& points);

// Does the affine hull of {anchor} u span_points meet conv(hull_points)?
// Projects everything onto the orthogonal complement of the direction space;
// there the affine hull collapses to one point and membership is an LP.
// Throws DegenerateAffineHull when the direction vectors are rank-deficient.
bool affine_intersects_hull(const Point& anchor, const std::vector<Point>& span_points,
                            const std::vector<Point>& hull_points);

} // namespace conehull
