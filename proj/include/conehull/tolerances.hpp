#pragma once

// Central table of numeric tolerances. Every predicate in the library reads
// from here; nothing hard-codes its own epsilon.
namespace conehull::tol {

inline constexpr double geometric = 1e-9;      // facet inequalities, LP feasibility, KKT residuals
inline constexpr double orthonormal = 1e-12;   // basis orthonormality, unit-norm checks
inline constexpr double general_position = 1e-10;  // scaled determinant / affine-rank threshold
inline constexpr double active_coefficient = 1e-10; // NNLS: coefficient counts as active above this
inline constexpr double rank_relative = 1e-8;  // rank decisions relative to leading pivot
inline constexpr double quadrature_abs = 1e-12;    // adaptive quadrature absolute target
inline constexpr double oracle_relative = 1e-12;   // closed-form cross-identities

} // namespace conehull::tol
