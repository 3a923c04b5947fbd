#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "copulaforge/types.hpp"

namespace copulaforge {

// Kendall concordance statistic between columns j and k, O(n log n).
// Assumes continuous data (no ties).
double empirical_kendall_tau(const SampleMatrix& s, std::size_t j, std::size_t k);
double kendall_tau(std::span<const double> x, std::span<const double> y);

double spearman_rho(std::span<const double> x, std::span<const double> y);

// One-sample Kolmogorov-Smirnov statistic against Uniform(0,1).
double ks_uniform(std::span<const double> u);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::span<const double> x, std::span<const double> y);

struct Moments {
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double skewness = 0.0;
    double ex_kurtosis = 0.0;
};

Moments sample_moments(std::span<const double> x);

// Ranks 1..n of x (no ties expected; ties broken by index).
std::vector<double> ranks(std::span<const double> x);

} // namespace copulaforge
