#pragma once

#include <span>
#include <vector>

#include "copulaforge/families.hpp"
#include "copulaforge/rng.hpp"
#include "copulaforge/types.hpp"

namespace copulaforge {

// Pickands dependence function at a simplex point w (renormalized when
// |sum w - 1| <= 1e-9, rejected otherwise). Bounded between max(w) and 1.
double pickands(const CopulaSpec& spec, std::span<const double> w);

// Bivariate shorthand: w is the weight of coordinate 0.
double pickands2(const CopulaSpec& spec, double w);

// Derivative of w -> pickands2(spec, w); implemented for every bivariate
// family in the catalog.
double pickands2_prime(const CopulaSpec& spec, double w);
bool has_pickands_prime(const CopulaSpec& spec);

// Stable tail dependence function l(x) = (sum x) * A(x / sum x).
double stdf(const CopulaSpec& spec, std::span<const double> x);

// C(u) = exp(-l(-log u_0, ..., -log u_{d-1})).
double ev_cdf(const CopulaSpec& spec, std::span<const double> u);

// dC/du0 = (C/u0) * (A(w) + (1-w) A'(w)) with w = log(u0)/log(u0*u1).
double ev_cond_cdf(const CopulaSpec& spec, double u0, double u1);

// Conditional-distribution sampler for bivariate families with A'.
SampleMatrix ev_sample_cond_bivariate(const CopulaSpec& spec, std::size_t n,
                                      RngStream& rng);

// Logistic model in any dimension: U_j = exp(-(E_j/S)^theta) with S positive
// stable(theta).
SampleMatrix ev_sample_logistic(const CopulaSpec& spec, std::size_t n, RngStream& rng);

// Asymmetric logistic model: one logistic cluster per coordinate subset on
// the Frechet scale, combined through weighted maxima.
SampleMatrix ev_sample_asym_logistic(const CopulaSpec& spec, std::size_t n,
                                     RngStream& rng);

// One extremal-function draw anchored at coordinate j (Y_j = 1), on the
// Frechet scale. Husler-Reiss, t-EV, bilogistic and Dirichlet models.
std::vector<double> rext_func(const CopulaSpec& spec, std::size_t j, RngStream& rng);

// Exact max-stable sampling by the record-keeping sweep over coordinates,
// transformed to uniform margins via u = exp(-1/z).
SampleMatrix ev_sample_extremal_functions(const CopulaSpec& spec, std::size_t n,
                                          RngStream& rng);

} // namespace copulaforge
