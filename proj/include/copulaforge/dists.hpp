#pragma once

#include <vector>

#include "copulaforge/rng.hpp"
#include "copulaforge/types.hpp"

namespace copulaforge {

// Lower-triangular factorization of a symmetric matrix. A pivot <= 1e-12
// signals a matrix that is not strictly positive definite.
CholeskyFactor cholesky(const SquareMatrix& sigma);

// Positive alpha-stable with Laplace transform exp(-s^alpha), alpha in (0,1].
// Chambers-Mallows-Stuck construction; alpha = 1 is the point mass at 1.
double sample_positive_stable(RngStream& rng, double alpha);

// Logarithmic series on {1,2,...}: P(V=k) = -p^k / (k log(1-p)).
double sample_logseries(RngStream& rng, double p);

// Sibuya law with pgf 1 - (1-z)^alpha, alpha in (0,1].
double sample_sibuya(RngStream& rng, double alpha);

// Geometric on {1,2,...}: P(V=k) = p (1-p)^(k-1).
double sample_geometric(RngStream& rng, double p);

// Gamma with shape k > 0, unit scale (Marsaglia-Tsang, boosted for k < 1).
double sample_gamma(RngStream& rng, double shape);

double sample_chisq(RngStream& rng, double nu);

// L * z for independent standard normal z.
std::vector<double> sample_mvn(RngStream& rng, const CholeskyFactor& L);

// Normalized independent gammas; components sum to one.
std::vector<double> sample_dirichlet(RngStream& rng, const std::vector<double>& sigma);

} // namespace copulaforge
