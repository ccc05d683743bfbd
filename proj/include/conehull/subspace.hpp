#pragma once

#include <cstdint>
#include <vector>

#include "conehull/rng.hpp"
#include "conehull/vec.hpp"

namespace conehull {

// A k-dimensional linear subspace of R^d given by an orthonormal basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Point> basis; // k orthonormal vectors of length ambient_dim
    std::size_t dim() const { return basis.size(); }
};

// Haar-distributed subspace: orthonormalization of k iid standard Gaussian
// vectors, rotation invariant in law.
Subspace haar_subspace(std::size_t d, std::size_t k, Rng& rng);

// Coordinates of the orthogonal projections in the target basis (output
// dimension k).
std::vector<Point> project_points(const std::vector<Point>& points, const Subspace& target);

} // namespace conehull
