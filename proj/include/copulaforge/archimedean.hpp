#pragma once

#include <span>

#include "copulaforge/families.hpp"
#include "copulaforge/rng.hpp"
#include "copulaforge/types.hpp"

namespace copulaforge {

// Generator evaluation for an Archimedean family. phi is strictly decreasing
// and convex on (0,1] with phi(1) = 0; phi_inv is the generalized inverse
// (0 past phi(0) for non-strict generators).
struct GeneratorTriple {
    Family family;
    double theta;

    double phi(double t) const;
    double phi_inv(double s) const;
    double phi_prime(double t) const;
};

GeneratorTriple generator(const CopulaSpec& spec);

// phi_inv(sum_j phi(u_j)), clamped into [0,1].
double arch_cdf(const CopulaSpec& spec, std::span<const double> u);

// Conditional distribution P(U1 <= u1 | U0 = u0) = phi'(u0)/phi'(C(u0,u1)).
double arch_cond_cdf(const CopulaSpec& spec, double u0, double u1);

// Conditional-distribution sampler (d = 2): u0 uniform, u1 solves
// c_{u0}(u1) = t1 by bracketed root finding.
SampleMatrix arch_sample_cond_bivariate(const CopulaSpec& spec, std::size_t n,
                                        RngStream& rng);

// Frailty construction U_j = phi_inv(E_j / V) for families whose generator
// inverse is a Laplace-Stieltjes transform.
SampleMatrix arch_sample_frailty(const CopulaSpec& spec, std::size_t n, RngStream& rng);

bool has_frailty(const CopulaSpec& spec);
double sample_frailty_variable(const CopulaSpec& spec, RngStream& rng);

} // namespace copulaforge
