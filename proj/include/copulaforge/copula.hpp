#pragma once

#include <span>

#include "copulaforge/families.hpp"
#include "copulaforge/rng.hpp"
#include "copulaforge/types.hpp"

namespace copulaforge {

// Draws n rows with uniform margins from the family's preferred sampler:
// frailty construction for multivariate-capable Archimedean parameters,
// conditional inversion for the bivariate-only ones, the cluster or
// extremal-function sampler for extreme-value models, and the Gaussian /
// Student constructions for elliptical ones.
SampleMatrix sample_unimargin(const CopulaSpec& spec, std::size_t n, RngStream& rng);

// Copula CDF where a closed form exists (Archimedean and extreme-value
// families); elliptical CDFs are not provided.
double copula_cdf(const CopulaSpec& spec, std::span<const double> u);
bool has_copula_cdf(const CopulaSpec& spec);

} // namespace copulaforge
