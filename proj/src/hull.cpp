#include "conehull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "conehull/errors.hpp"
#include "conehull/linalg.hpp"
#include "conehull/rng.hpp"
#include "conehull/special.hpp"
#include "conehull/tolerances.hpp"

namespace conehull {

namespace {

struct WorkFacet {
    std::vector<int> vertices;  // d point indices
    std::vector<int> neighbors; // d adjacent facet ids (unordered)
    Point normal;
    double offset = 0.0;
    std::vector<int> outside; // conflict list: point indices strictly beyond
    bool alive = true;
};

double coordinate_scale(const std::vector<Point>& pts) {
    double s = 0.0;
    for (const auto& p : pts)
        for (double v : p) s = std::max(s, std::fabs(v));
    return std::max(1.0, s);
}

// Unit normal of the hyperplane through the given d points, oriented so that
// `interior` lies strictly below. Throws DegenerateInput when the points are
// affinely dependent or the interior point sits on the plane.
void facet_plane(const std::vector<Point>& pts, const std::vector<int>& vs,
                 const Point& interior, double scale, Point& normal, double& offset) {
    const std::size_t d = pts[vs[0]].size();
    Matrix basis;
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (!gram_schmidt_append(basis, sub(pts[vs[i]], pts[vs[0]])))
            throw DegenerateInput("convex_hull: affinely dependent facet candidate");
    // complete the edge basis with the coordinate axis that has the largest residual
    Point best;
    double best_norm = -1.0;
    for (std::size_t axis = 0; axis < d; ++axis) {
        Point r(d, 0.0);
        r[axis] = 1.0;
        for (const auto& q : basis) axpy(r, -dot(q, r), q);
        const double nr = norm(r);
        if (nr > best_norm) {
            best_norm = nr;
            best = std::move(r);
        }
    }
    if (best_norm < tol::general_position)
        throw DegenerateInput("convex_hull: no normal direction found");
    for (const auto& q : basis) axpy(best, -dot(q, best), best); // re-orthogonalize
    const double n2 = norm(best);
    for (double& x : best) x /= n2;
    normal = std::move(best);
    offset = dot(normal, pts[vs[0]]);
    const double side = dot(normal, interior) - offset;
    if (std::fabs(side) < tol::general_position * scale)
        throw DegenerateInput("convex_hull: interior point on facet plane");
    if (side > 0.0) {
        for (double& x : normal) x = -x;
        offset = -offset;
    }
}

// Greedy affinely independent seed: repeatedly add the point farthest from
// the affine hull of the current picks.
std::vector<int> initial_simplex(const std::vector<Point>& pts, std::size_t d, double scale) {
    const std::size_t n = pts.size();
    std::vector<int> picked;
    int first = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (pts[i][0] < pts[first][0]) first = static_cast<int>(i);
    picked.push_back(first);
    Matrix basis;
    while (picked.size() < d + 1) {
        int best = -1;
        double best_res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Point r = sub(pts[i], pts[picked[0]]);
            for (const auto& q : basis) axpy(r, -dot(q, r), q);
            const double nr = norm(r);
            if (nr > best_res) {
                best_res = nr;
                best = static_cast<int>(i);
            }
        }
        if (best < 0 || best_res < tol::general_position * scale)
            throw DegenerateInput("convex_hull: input not full-dimensional");
        gram_schmidt_append(basis, sub(pts[best], pts[picked[0]]));
        picked.push_back(best);
    }
    return picked;
}

Hull hull_1d(const std::vector<Point>& pts) {
    int imin = 0, imax = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][0] < pts[imin][0]) imin = static_cast<int>(i);
        if (pts[i][0] > pts[imax][0]) imax = static_cast<int>(i);
    }
    const double lo = pts[imin][0], hi = pts[imax][0];
    if (!(hi - lo > tol::general_position * coordinate_scale(pts)))
        throw DegenerateInput("convex_hull: all points coincide");
    Hull h;
    h.dim = 1;
    h.vertices = {Point{lo}, Point{hi}};
    h.facets.push_back({Point{-1.0}, -lo, {0}});
    h.facets.push_back({Point{1.0}, hi, {1}});
    h.contains_origin = lo < 0.0 && hi > 0.0;
    return h;
}

} // namespace

Hull convex_hull(const std::vector<Point>& points, std::size_t d) {
    if (d < 1) throw InvalidParams("convex_hull: dimension must be >= 1");
    if (points.size() < d + 1)
        throw DegenerateInput("convex_hull: need at least d+1 points");
    for (const auto& p : points) {
        check_dim(p, d, "convex_hull");
        if (!all_finite(p)) throw InvalidParams("convex_hull: non-finite coordinate");
    }
    if (d == 1) return hull_1d(points);

    const double scale = coordinate_scale(points);
    const double beyond = tol::geometric * scale; // strictly outside threshold

    std::vector<int> seed = initial_simplex(points, d, scale);
    Point interior(d, 0.0);
    for (int idx : seed) axpy(interior, 1.0 / static_cast<double>(d + 1), points[idx]);

    std::vector<WorkFacet> facets;
    facets.reserve(2 * points.size());
    for (std::size_t skip = 0; skip < seed.size(); ++skip) {
        WorkFacet f;
        for (std::size_t i = 0; i < seed.size(); ++i)
            if (i != skip) f.vertices.push_back(seed[i]);
        for (std::size_t i = 0; i < seed.size(); ++i)
            if (i != skip) f.neighbors.push_back(static_cast<int>(i));
        facet_plane(points, f.vertices, interior, scale, f.normal, f.offset);
        facets.push_back(std::move(f));
    }

    std::vector<char> is_seed(points.size(), 0);
    for (int idx : seed) is_seed[idx] = 1;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (is_seed[i]) continue;
        for (auto& f : facets) {
            if (dot(f.normal, points[i]) - f.offset > beyond) {
                f.outside.push_back(static_cast<int>(i));
                break;
            }
        }
    }

    std::vector<int> pending;
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
        if (!facets[fi].outside.empty()) pending.push_back(static_cast<int>(fi));

    std::vector<int> visible, stack;
    std::vector<char> seen(facets.size(), 0);
    while (!pending.empty()) {
        const int start = pending.back();
        pending.pop_back();
        if (!facets[start].alive || facets[start].outside.empty()) continue;

        // farthest conflict point becomes the next apex
        int apex = -1;
        double far_dist = 0.0;
        for (int pi : facets[start].outside) {
            const double dist = dot(facets[start].normal, points[pi]) - facets[start].offset;
            if (dist > far_dist) {
                far_dist = dist;
                apex = pi;
            }
        }
        if (apex < 0) {
            facets[start].outside.clear();
            continue;
        }
        const Point& ap = points[apex];

        // visibility walk over the adjacency graph
        visible.clear();
        stack.assign(1, start);
        seen.assign(facets.size(), 0);
        seen[start] = 1;
        while (!stack.empty()) {
            const int fi = stack.back();
            stack.pop_back();
            visible.push_back(fi);
            for (int nb : facets[fi].neighbors) {
                if (seen[nb] || !facets[nb].alive) continue;
                seen[nb] = 1;
                if (dot(facets[nb].normal, ap) - facets[nb].offset > beyond)
                    stack.push_back(nb);
            }
        }

        // horizon: ridges between a visible facet and an invisible neighbor
        struct HorizonRidge {
            std::vector<int> ridge; // d-1 vertex indices, sorted
            int outside_facet;      // the invisible side
        };
        std::vector<HorizonRidge> horizon;
        std::vector<int> candidate_points;
        for (int fi : visible) facets[fi].alive = false; // retire before the ridge scan
        for (int fi : visible) {
            for (int pi : facets[fi].outside)
                if (pi != apex) candidate_points.push_back(pi);
            for (int nb : facets[fi].neighbors) {
                if (!facets[nb].alive) continue;
                std::vector<int> shared;
                for (int v : facets[fi].vertices)
                    if (std::find(facets[nb].vertices.begin(), facets[nb].vertices.end(), v) !=
                        facets[nb].vertices.end())
                        shared.push_back(v);
                if (shared.size() != d - 1)
                    throw DegenerateInput("convex_hull: adjacency graph corrupted");
                std::sort(shared.begin(), shared.end());
                horizon.push_back({std::move(shared), nb});
            }
        }

        // cone the apex over the horizon
        std::map<std::vector<int>, std::pair<int, int>> open_ridges; // ridge -> (facet, slot)
        std::vector<int> fresh;
        for (auto& hr : horizon) {
            WorkFacet nf;
            nf.vertices = hr.ridge;
            nf.vertices.push_back(apex);
            facet_plane(points, nf.vertices, interior, scale, nf.normal, nf.offset);
            const int nf_id = static_cast<int>(facets.size());
            nf.neighbors.assign(d, -1);
            nf.neighbors[0] = hr.outside_facet;
            facets.push_back(std::move(nf));
            fresh.push_back(nf_id);
            seen.push_back(0);
        }

        // wire adjacency: along the base ridge to the old invisible facet, and
        // between fresh facets along ridges through the apex
        for (std::size_t hi = 0; hi < horizon.size(); ++hi) {
            const int nf_id = fresh[hi];
            WorkFacet& nf = facets[nf_id];
            const int outside_facet = horizon[hi].outside_facet;
            // replace the dead facet in the invisible neighbor's list
            for (int& nb : facets[outside_facet].neighbors) {
                if (!facets[nb].alive &&
                    std::find(fresh.begin(), fresh.end(), nb) == fresh.end()) {
                    // does this dead neighbor share the base ridge?
                    std::vector<int> shared;
                    for (int v : facets[outside_facet].vertices)
                        if (std::find(facets[nb].vertices.begin(), facets[nb].vertices.end(),
                                      v) != facets[nb].vertices.end())
                            shared.push_back(v);
                    std::sort(shared.begin(), shared.end());
                    if (shared == horizon[hi].ridge) {
                        nb = nf_id;
                        break;
                    }
                }
            }
            int slot = 1;
            for (std::size_t drop = 0; drop < horizon[hi].ridge.size(); ++drop) {
                std::vector<int> key;
                for (std::size_t j = 0; j < horizon[hi].ridge.size(); ++j)
                    if (j != drop) key.push_back(horizon[hi].ridge[j]);
                key.push_back(apex);
                std::sort(key.begin(), key.end());
                auto it = open_ridges.find(key);
                if (it == open_ridges.end()) {
                    open_ridges.emplace(std::move(key), std::make_pair(nf_id, slot));
                } else {
                    nf.neighbors[slot] = it->second.first;
                    facets[it->second.first].neighbors[it->second.second] = nf_id;
                    open_ridges.erase(it);
                }
                ++slot;
            }
        }
        if (!open_ridges.empty())
            throw DegenerateInput("convex_hull: horizon did not close");

        // redistribute conflict points of the dead region
        for (int pi : candidate_points) {
            for (int nf_id : fresh) {
                if (dot(facets[nf_id].normal, points[pi]) - facets[nf_id].offset > beyond) {
                    facets[nf_id].outside.push_back(pi);
                    break;
                }
            }
        }
        for (int nf_id : fresh)
            if (!facets[nf_id].outside.empty()) pending.push_back(nf_id);
    }

    // compact into the public representation
    Hull h;
    h.dim = d;
    std::map<int, int> remap;
    for (const auto& f : facets) {
        if (!f.alive) continue;
        for (int v : f.vertices)
            if (remap.emplace(v, static_cast<int>(remap.size())).second)
                h.vertices.push_back(points[v]);
    }
    for (const auto& f : facets) {
        if (!f.alive) continue;
        Facet out;
        out.normal = f.normal;
        out.offset = f.offset;
        for (int v : f.vertices) out.vertices.push_back(remap.at(v));
        std::sort(out.vertices.begin(), out.vertices.end());
        h.facets.push_back(std::move(out));
    }
    h.contains_origin = true;
    for (const auto& f : h.facets)
        if (!(f.offset > 0.0)) h.contains_origin = false;

    // post-condition: every input point satisfies every facet inequality
    for (const auto& f : h.facets)
        for (const auto& p : points)
            if (dot(f.normal, p) - f.offset > 10.0 * beyond)
                throw DegenerateInput("convex_hull: point escapes the hull (degenerate input?)");
    return h;
}

FVector f_vector(const Hull& h) {
    const std::size_t d = h.dim;
    for (const auto& f : h.facets)
        if (f.vertices.size() != d)
            throw NonSimplicial("f_vector: facet with " + std::to_string(f.vertices.size()) +
                                " vertices in dimension " + std::to_string(d));
    std::vector<std::set<std::vector<int>>> faces(d);
    std::vector<int> subset;
    for (const auto& f : h.facets) {
        const unsigned full = 1u << d;
        for (unsigned mask = 1; mask < full; ++mask) {
            subset.clear();
            for (std::size_t i = 0; i < d; ++i)
                if (mask & (1u << i)) subset.push_back(f.vertices[i]);
            faces[subset.size() - 1].insert(subset);
        }
    }
    FVector counts(d);
    for (std::size_t k = 0; k < d; ++k) counts[k] = static_cast<long long>(faces[k].size());
    return counts;
}

bool contains_point(const Hull& h, const Point& x) {
    check_dim(x, h.dim, "contains_point");
    for (const auto& f : h.facets)
        if (dot(f.normal, x) > f.offset + tol::geometric) return false;
    return true;
}

double simplex_volume(const std::vector<Point>& vertices) {
    if (vertices.empty()) throw InvalidParams("simplex_volume: no vertices");
    const std::size_t k = vertices.size() - 1;
    if (k == 0) return 1.0; // 0-dimensional measure of a point
    Matrix gram(k, Point(k));
    std::vector<Point> edges;
    edges.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) edges.push_back(sub(vertices[i], vertices[0]));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(edges[i], edges[j]);
    // det via elimination; non-positive pivots mean a degenerate simplex
    double det = 1.0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(gram[r][col]) > std::fabs(gram[piv][col])) piv = r;
        if (gram[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(gram[piv], gram[col]);
            det = -det;
        }
        det *= gram[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = gram[r][col] / gram[col][col];
            for (std::size_t c = col; c < k; ++c) gram[r][c] -= f * gram[col][c];
        }
    }
    if (det <= 0.0) return 0.0;
    double log_vol = 0.5 * std::log(det) - log_factorial(static_cast<double>(k));
    return std::exp(log_vol);
}

double hull_volume(const Hull& h) {
    // fan decomposition from the origin when interior, else from a vertex
    Point base(h.dim, 0.0);
    if (!h.contains_origin) base = h.vertices.at(0);
    double vol = 0.0;
    std::vector<Point> face_pts;
    for (const auto& f : h.facets) {
        face_pts.clear();
        for (int v : f.vertices) face_pts.push_back(h.vertices[v]);
        const double height = f.offset - dot(f.normal, base);
        vol += height * simplex_volume(face_pts);
    }
    return vol / static_cast<double>(h.dim);
}

double t_functional(const Hull& h, double a, double b) {
    if (a < 0.0 || b < 0.0) throw InvalidParams("t_functional: a, b must be >= 0");
    double total = 0.0;
    std::vector<Point> face_pts;
    for (const auto& f : h.facets) {
        if (f.vertices.size() != h.dim)
            throw NonSimplicial("t_functional: non-simplicial facet");
        face_pts.clear();
        for (int v : f.vertices) face_pts.push_back(h.vertices[v]);
        total += std::pow(std::fabs(f.offset), a) * std::pow(simplex_volume(face_pts), b);
    }
    return total;
}

double radial_function(const Hull& h, const Point& direction) {
    check_dim(direction, h.dim, "radial_function");
    if (!h.contains_origin) throw OriginOutside("radial_function: origin not interior");
    double rho = std::numeric_limits<double>::infinity();
    for (const auto& f : h.facets) {
        const double denom = dot(f.normal, direction);
        if (denom > 0.0) rho = std::min(rho, f.offset / denom);
    }
    if (!std::isfinite(rho) || rho <= 0.0)
        throw OriginOutside("radial_function: unbounded direction");
    return rho;
}

Estimate complement_power_integral(const Hull& h, std::size_t mc_dirs, std::uint64_t seed) {
    if (!h.contains_origin)
        throw OriginOutside("complement_power_integral: origin not interior");
    const double surface = omega(static_cast<double>(h.dim));
    Rng rng(seed);
    std::vector<double> values(mc_dirs);
    for (std::size_t i = 0; i < mc_dirs; ++i) {
        const Point theta = rng.unit_vector(h.dim);
        values[i] = surface / radial_function(h, theta);
    }
    return make_estimate(values, seed, "complement_power_integral");
}

HullIdentityReport verify_hull_identities(const Hull& h) {
    HullIdentityReport r;
    const FVector f = f_vector(h);
    const std::size_t d = h.dim;
    long long euler = 0;
    for (std::size_t k = 0; k < d; ++k) euler += (k % 2 == 0 ? 1 : -1) * f[k];
    r.euler = euler == 1 + ((d - 1) % 2 == 0 ? 1 : -1);
    r.dehn_sommerville =
        d < 2 || static_cast<long long>(d) * f[d - 1] == 2 * f[d - 2];
    r.t00_is_facet_count = t_functional(h, 0.0, 0.0) == static_cast<double>(f[d - 1]);
    if (h.contains_origin) {
        const double t11 = t_functional(h, 1.0, 1.0);
        const double dv = static_cast<double>(d) * hull_volume(h);
        r.t11_is_d_volume = std::fabs(t11 - dv) <= 1e-9 * std::max(1.0, std::fabs(dv));
    } else {
        r.t11_is_d_volume = true;
    }
    return r;
}

} // namespace conehull
