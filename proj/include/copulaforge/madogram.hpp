#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "copulaforge/families.hpp"
#include "copulaforge/rng.hpp"
#include "copulaforge/types.hpp"

namespace copulaforge {

// Observation indicators for a bivariate sample under MCAR missingness.
// I_j = 1{V_j <= p_j} with (V_0, V_1) drawn from the missingness copula,
// so the joint observation probability is p = C_miss(p0, p1).
struct MissingMask {
    std::vector<std::uint8_t> obs0;
    std::vector<std::uint8_t> obs1;
    double p0 = 1.0;
    double p1 = 1.0;
    double p_joint = 1.0;

    std::size_t n() const { return obs0.size(); }
    static MissingMask full(std::size_t n);
};

MissingMask gen_missing_mask(RngStream& rng, const CopulaSpec& miss_spec, double p0,
                             double p1, std::size_t n);

// c(lambda) = (lambda/(1+lambda) + (1-lambda)/(2-lambda)) / 2, the margin
// term of the half-|.| lambda-madogram convention.
double madogram_constant(double lambda);

// nu(lambda) = A(lambda)/(1+A(lambda)) - c(lambda) for an extreme-value
// copula with implemented Pickands function.
double true_madogram(const CopulaSpec& spec, double lambda);

// Plug-in estimator: marginal ranks over each column's observed entries
// (rank/(count+1)), expectation term averaged over complete pairs. The
// corrected variant clamps the estimate so the induced Pickands value lies
// in [max(lambda, 1-lambda), 1].
double estimate_madogram(const SampleMatrix& sample, const MissingMask& mask,
                         double lambda, bool corrected);

// A = (nu + c)/(1 - nu - c), clamped into [max(lambda,1-lambda), 1].
double pickands_from_madogram(double nu, double lambda);

struct MadoRecord {
    double fmado = 0.0;
    double n = 0.0;
    double scaled = 0.0;
};

struct MonteCarloConfig {
    std::size_t n_iter = 0;
    std::size_t n_sample = 0;
    CopulaSpec target;
    CopulaSpec miss;
    double p0 = 1.0;
    double p1 = 1.0;
    double lambda = 0.5;
    bool corrected = true;
    std::uint64_t seed = 0;
};

// n_iter independent replications; iteration i uses child stream (seed, i),
// so row order is the iteration order and the output is reproducible.
std::vector<MadoRecord> monte_carlo_run(const MonteCarloConfig& config);

struct Diagnostics {
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double ex_kurtosis = 0.0;
    bool degenerate = false;
    std::size_t count = 0;
    double bin_lo = 0.0;
    double bin_width = 0.0;
    std::vector<std::size_t> bin_counts;
};

// Moment summary plus a fixed-width histogram with ceil(sqrt(n)) bins.
Diagnostics normality_diagnostics(std::span<const double> scaled);

} // namespace copulaforge
