#include "conehull/subspace.hpp"

#include "conehull/errors.hpp"
#include "conehull/linalg.hpp"

namespace conehull {

Subspace haar_subspace(std::size_t d, std::size_t k, Rng& rng) {
    if (k < 1 || k >= d) throw InvalidParams("haar_subspace: need 1 <= k < d");
    Subspace s;
    s.ambient_dim = d;
    while (s.basis.size() < k) {
        // a Gaussian vector is outside the current span with probability 1
        gram_schmidt_append(s.basis, rng.gaussian_vector(d));
    }
    return s;
}

std::vector<Point> project_points(const std::vector<Point>& points, const Subspace& target) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        check_dim(p, target.ambient_dim, "project_points");
        Point c(target.dim());
        for (std::size_t i = 0; i < target.dim(); ++i) c[i] = dot(target.basis[i], p);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace conehull
