#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conehull {

// A closed-form value together with the formula it came from, so report rows
// can be joined against estimates.
struct Oracle {
    double value = 0.0; // +infinity is a first-class value
    std::string formula_id;
    std::map<std::string, double> params;

    bool is_infinite() const;
};

// Expected facet count of the cone spanned by n uniform half-sphere points:
//   (2 omega_d / omega_{d+1}) * C(n,d) * int_0^pi (1 - a/pi)^{n-d} sin^{d-1} a da,
// quadrature to absolute 1e-12.
double exact_facets_halfsphere(int d, int n);

// Its n -> infinity limit, 2^{-d} d! kappa_d^2.
double limit_facets_halfsphere(int d);

// Expected facet count of the convex hull of the power-law Poisson process;
// free of the intensity scale c.
double expected_facets_poisson(int d, double gamma);

// Expected T_{a,b} over facets of the Poisson hull; +infinity when the
// finiteness conditions (gamma-b)d + b - a > 0 and gamma > b fail.
Oracle expected_T(int d, double gamma, double c, double a, double b);

// Expected volume; +infinity for gamma <= 1.
Oracle expected_volume_poisson(int d, double gamma, double c);

// Expected k-th intrinsic volume via the projection identity:
// binom(d,k) kappa_d/(kappa_k kappa_{d-k}) times the k-dimensional volume value.
Oracle expected_intrinsic_volume(int d, double gamma, double c, int k);

// Symmetric hull: same T-functional at doubled intensity.
Oracle expected_T_symmetric(int d, double gamma, double c, double a, double b);

// Closed-form B_{k,d} where known: k = d, k = 2, k = d+1; nullopt otherwise.
std::optional<Oracle> constant_B(int k, int d);

// Limiting expected f-vector (f_0 .. f_{d-1}) of the half-sphere cone section,
// entries filled from known B constants plus Dehn-Sommerville and Euler
// completion; unknown entries are nullopt.
std::vector<std::optional<double>> limit_f_vector(int d);

// Moment E Delta_{k-1}^beta of the simplex spanned by k iid beta'-distributed
// points in R^{k-1} with density (omega_{d+1-k+gamma}/omega_{d+gamma}) *
// (1+|x|^2)^{-(d+gamma)/2}; throws InfiniteMoment when d-k+1-beta+gamma <= 0.
double simplex_moment_betaprime(int d, double gamma, int k, double beta);

} // namespace conehull
