#include "copulaforge/madogram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "copulaforge/copula.hpp"
#include "copulaforge/errors.hpp"
#include "copulaforge/extreme.hpp"

namespace copulaforge {

namespace {

double clip_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw Error(ErrorKind::DomainError, "lambda must lie in (0,1)");
    return std::min(std::max(lambda, 0.01), 0.99);
}

} // namespace

MissingMask MissingMask::full(std::size_t n) {
    MissingMask m;
    m.obs0.assign(n, 1);
    m.obs1.assign(n, 1);
    return m;
}

MissingMask gen_missing_mask(RngStream& rng, const CopulaSpec& miss_spec, double p0,
                             double p1, std::size_t n) {
    if (!(p0 > 0.0 && p0 <= 1.0 && p1 > 0.0 && p1 <= 1.0))
        throw Error(ErrorKind::ConstraintViolation,
                    "observation probabilities must lie in (0, 1]");
    if (miss_spec.d != 2)
        throw Error(ErrorKind::DimensionUnsupported, "missingness copula must be bivariate");
    MissingMask mask;
    mask.p0 = p0;
    mask.p1 = p1;
    if (p0 == 1.0 && p1 == 1.0) {
        mask.obs0.assign(n, 1);
        mask.obs1.assign(n, 1);
        mask.p_joint = 1.0;
        return mask;
    }
    const double uv[2] = {p0, p1};
    mask.p_joint = copula_cdf(miss_spec, uv);
    SampleMatrix v = sample_unimargin(miss_spec, n, rng);
    mask.obs0.resize(n);
    mask.obs1.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        mask.obs0[i] = v.at(i, 0) <= p0 ? 1 : 0;
        mask.obs1[i] = v.at(i, 1) <= p1 ? 1 : 0;
    }
    return mask;
}

double madogram_constant(double lambda) {
    lambda = clip_lambda(lambda);
    return 0.5 * (lambda / (1.0 + lambda) + (1.0 - lambda) / (2.0 - lambda));
}

double true_madogram(const CopulaSpec& spec, double lambda) {
    lambda = clip_lambda(lambda);
    if (!has_pickands(spec))
        throw Error(ErrorKind::NotImplemented,
                    std::string(family_name(spec.family)) +
                        ": true madogram needs an implemented Pickands function");
    double a = pickands2(spec, lambda);
    return a / (a + 1.0) - madogram_constant(lambda);
}

double pickands_from_madogram(double nu, double lambda) {
    lambda = clip_lambda(lambda);
    double c = madogram_constant(lambda);
    double denom = 1.0 - nu - c;
    if (denom <= 1e-12)
        throw Error(ErrorKind::DegenerateDenominator,
                    "pickands_from_madogram: 1 - nu - c(lambda) <= 1e-12");
    double a = (nu + c) / denom;
    double lo = std::max(lambda, 1.0 - lambda);
    return std::min(std::max(a, lo), 1.0);
}

double estimate_madogram(const SampleMatrix& sample, const MissingMask& mask,
                         double lambda, bool corrected) {
    lambda = clip_lambda(lambda);
    if (sample.d != 2)
        throw Error(ErrorKind::DimensionUnsupported, "madogram estimator requires d = 2");
    std::size_t n = sample.n;
    if (mask.n() != n)
        throw Error(ErrorKind::ArityMismatch, "mask length does not match the sample length");

    // Marginal empirical CDFs over each column's observed entries,
    // rank / (count + 1) so powers 1/lambda stay finite.
    std::vector<double> fhat0(n, -1.0), fhat1(n, -1.0);
    for (int col = 0; col < 2; ++col) {
        const auto& obs = col == 0 ? mask.obs0 : mask.obs1;
        auto& fhat = col == 0 ? fhat0 : fhat1;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (obs[i]) idx.push_back(i);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return sample.at(a, static_cast<std::size_t>(col)) <
                   sample.at(b, static_cast<std::size_t>(col));
        });
        double denom = static_cast<double>(idx.size()) + 1.0;
        for (std::size_t r = 0; r < idx.size(); ++r)
            fhat[idx[r]] = static_cast<double>(r + 1) / denom;
    }

    double acc = 0.0;
    std::size_t complete = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!mask.obs0[i] || !mask.obs1[i]) continue;
        acc += 0.5 * std::fabs(std::pow(fhat0[i], 1.0 / lambda) -
                               std::pow(fhat1[i], 1.0 / (1.0 - lambda)));
        ++complete;
    }
    if (complete < 2)
        throw Error(ErrorKind::InsufficientData,
                    "madogram estimator needs at least 2 complete pairs");
    double nu = acc / static_cast<double>(complete);

    if (corrected) {
        // keep the induced Pickands value inside [max(lambda,1-lambda), 1]
        double c = madogram_constant(lambda);
        double m = std::max(lambda, 1.0 - lambda);
        double lo = m / (1.0 + m) - c;
        double hi = 0.5 - c;
        nu = std::min(std::max(nu, lo), hi);
    }
    return nu;
}

std::vector<MadoRecord> monte_carlo_run(const MonteCarloConfig& config) {
    if (config.n_iter == 0 || config.n_sample < 2)
        throw Error(ErrorKind::InsufficientData,
                    "monte carlo run needs n_iter >= 1 and n_sample >= 2");
    double lambda = clip_lambda(config.lambda);
    double nu_true = true_madogram(config.target, lambda);
    double sqrt_n = std::sqrt(static_cast<double>(config.n_sample));
    RngStream root(config.seed);

    std::vector<MadoRecord> records(config.n_iter);
    for (std::size_t i = 0; i < config.n_iter; ++i) {
        RngStream rng = root.child(i);
        try {
            SampleMatrix sample = sample_unimargin(config.target, config.n_sample, rng);
            MissingMask mask =
                gen_missing_mask(rng, config.miss, config.p0, config.p1, config.n_sample);
            double nu = estimate_madogram(sample, mask, lambda, config.corrected);
            records[i] = MadoRecord{nu, static_cast<double>(config.n_sample),
                                    sqrt_n * (nu - nu_true)};
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "iteration " << i << ": " << e.what();
            throw Error(ErrorKind::SamplerFailure, msg.str());
        }
    }
    return records;
}

Diagnostics normality_diagnostics(std::span<const double> scaled) {
    if (scaled.size() < 100)
        throw Error(ErrorKind::InsufficientData,
                    "normality diagnostics need at least 100 records");
    Diagnostics d;
    d.count = scaled.size();
    double n = static_cast<double>(scaled.size());
    double mean = 0.0;
    for (double v : scaled) mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : scaled) {
        double c = v - mean, c2 = c * c;
        m2 += c2;
        m3 += c2 * c;
        m4 += c2 * c2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    d.mean = mean;
    d.variance = m2 * n / (n - 1.0);
    if (m2 <= 0.0) {
        d.degenerate = true;
    } else {
        d.skewness = m3 / std::pow(m2, 1.5);
        d.ex_kurtosis = m4 / (m2 * m2) - 3.0;
    }

    std::size_t bins = static_cast<std::size_t>(std::ceil(std::sqrt(n)));
    auto [lo_it, hi_it] = std::minmax_element(scaled.begin(), scaled.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi <= lo) {
        d.bin_lo = lo;
        d.bin_width = 0.0;
        d.bin_counts.assign(1, scaled.size());
        d.degenerate = true;
        return d;
    }
    d.bin_lo = lo;
    d.bin_width = (hi - lo) / static_cast<double>(bins);
    d.bin_counts.assign(bins, 0);
    for (double v : scaled) {
        auto b = static_cast<std::size_t>((v - lo) / d.bin_width);
        if (b >= bins) b = bins - 1;
        ++d.bin_counts[b];
    }
    return d;
}

} // namespace copulaforge
