#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conehull/samplers.hpp"
#include "conehull/stats.hpp"

namespace conehull {

// An Estimate plus the heavy-tail warning demanded by the second-moment
// conditions; the flag is informational and never silently suppresses a
// value.
struct FunctionalEstimate {
    Estimate est;
    bool heavy_tail = false;
};

// Mean f-vector over certified Poisson hulls; entry k estimates E f_k.
// Deterministic per-hull identities (Euler, Dehn-Sommerville, T-functional
// identities) are verified on every replicate and violations throw.
std::vector<Estimate> estimate_f_vector_poisson(const PoissonParams& params,
                                                std::size_t replicates, std::uint64_t seed,
                                                int workers = 1);

FunctionalEstimate estimate_T(const PoissonParams& params, double a, double b,
                              std::size_t replicates, std::uint64_t seed, int workers = 1);

// Same law at doubled intensity is the oracle's claim; the estimator samples
// the symmetric hull itself.
FunctionalEstimate estimate_T_symmetric(const PoissonParams& params, double a, double b,
                                        std::size_t replicates, std::uint64_t seed,
                                        int workers = 1);

FunctionalEstimate estimate_volume(const PoissonParams& params, std::size_t replicates,
                                   std::uint64_t seed, int workers = 1);

// V_k through fresh Haar projections per replicate ("dirs" of them), hull and
// volume in the subspace, times the binomial-kappa prefactor.
FunctionalEstimate estimate_intrinsic_volume(const PoissonParams& params, int k,
                                             std::size_t dirs, std::size_t replicates,
                                             std::uint64_t seed, int workers = 1);

// B_{k,d} by importance sampling the defining integral with the Cauchy-type
// law; the indicator of missing the hull keeps every weight bounded.
Estimate estimate_B(int k, int d, std::size_t outer_replicates, std::size_t inner_samples,
                    std::uint64_t seed, int workers = 1);

struct ConeLimitRow {
    std::string label; // "n=..." or "poisson"
    std::vector<Estimate> f; // per face dimension 0..d-1
};

// Mean section f-vectors along an n-grid plus the Poisson reference row
// conv Pi_{d,1}(2); the columns stabilize toward the reference.
std::vector<ConeLimitRow> estimate_cone_section_limit(int d, const std::vector<int>& n_grid,
                                                      std::size_t replicates,
                                                      std::uint64_t seed, int workers = 1);

} // namespace conehull
