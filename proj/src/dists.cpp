#include "copulaforge/dists.hpp"

#include <cmath>
#include <sstream>

#include "copulaforge/errors.hpp"

namespace copulaforge {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

CholeskyFactor cholesky(const SquareMatrix& sigma) {
    std::size_t d = sigma.d;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::fabs(sigma.at(i, j) - sigma.at(j, i)) > 1e-12)
                throw Error(ErrorKind::NotPositiveDefinite, "matrix is not symmetric");

    SquareMatrix L(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = sigma.at(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L.at(i, k) * L.at(j, k);
            if (i == j) {
                if (s <= 1e-12) {
                    std::ostringstream msg;
                    msg << "pivot " << s << " at index " << i
                        << "; matrix is not strictly positive definite";
                    throw Error(ErrorKind::NotPositiveDefinite, msg.str());
                }
                L.at(i, i) = std::sqrt(s);
            } else {
                L.at(i, j) = s / L.at(j, j);
            }
        }
    }
    return CholeskyFactor{L};
}

double sample_positive_stable(RngStream& rng, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw Error(ErrorKind::ConstraintViolation, "positive stable requires alpha in (0,1]");
    if (alpha == 1.0) return 1.0;
    double th = kPi * rng.uniform01();
    double w = rng.exponential();
    double a = std::sin((1.0 - alpha) * th) *
               std::pow(std::sin(alpha * th), alpha / (1.0 - alpha)) /
               std::pow(std::sin(th), 1.0 / (1.0 - alpha));
    return std::pow(a / w, (1.0 - alpha) / alpha);
}

double sample_logseries(RngStream& rng, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorKind::ConstraintViolation, "logseries requires p in (0,1)");
    // Kemp's LS algorithm.
    double r = std::log1p(-p);
    double v = rng.uniform01();
    if (v >= p) return 1.0;
    double u = rng.uniform01();
    double q = -std::expm1(r * u);
    if (v <= q * q) {
        double k = std::floor(1.0 + std::log(v) / std::log(q));
        return k < 1.0 ? 1.0 : k;
    }
    return v <= q ? 2.0 : 1.0;
}

namespace {

// log P(V > n) for the Sibuya law, exact via lgamma.
double sibuya_log_survival(double n, double alpha) {
    return std::lgamma(n + 1.0 - alpha) - std::lgamma(1.0 - alpha) -
           std::lgamma(n + 1.0);
}

} // namespace

double sample_sibuya(RngStream& rng, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw Error(ErrorKind::ConstraintViolation, "sibuya requires alpha in (0,1]");
    if (alpha == 1.0) return 1.0;
    double u = rng.uniform01();
    double tail = 1.0 - u; // want smallest k with P(V > k) <= tail
    if (tail >= 1.0 - alpha) return 1.0;
    double log_tail = std::log(tail);
    // Asymptotic start P(V>n) ~ n^{-alpha}/Gamma(1-alpha), then exact walk.
    double k = std::floor(std::exp(-(log_tail + std::lgamma(1.0 - alpha)) / alpha));
    if (k < 1.0) k = 1.0;
    while (sibuya_log_survival(k, alpha) > log_tail) k += 1.0;
    while (k > 1.0 && sibuya_log_survival(k - 1.0, alpha) <= log_tail) k -= 1.0;
    return k;
}

double sample_geometric(RngStream& rng, double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw Error(ErrorKind::ConstraintViolation, "geometric requires p in (0,1]");
    if (p == 1.0) return 1.0;
    double k = std::ceil(std::log(rng.uniform01()) / std::log1p(-p));
    return k < 1.0 ? 1.0 : k;
}

double sample_gamma(RngStream& rng, double shape) {
    if (!(shape > 0.0))
        throw Error(ErrorKind::ConstraintViolation, "gamma requires shape > 0");
    if (shape < 1.0) {
        // boost: Gamma(k) = Gamma(k+1) * U^{1/k}
        double g = sample_gamma(rng, shape + 1.0);
        return g * std::pow(rng.uniform01(), 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = rng.uniform01();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double sample_chisq(RngStream& rng, double nu) {
    return 2.0 * sample_gamma(rng, 0.5 * nu);
}

std::vector<double> sample_mvn(RngStream& rng, const CholeskyFactor& f) {
    std::size_t d = f.L.d;
    std::vector<double> z(d), out(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) z[i] = rng.normal();
    for (std::size_t i = 0; i < d; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k <= i; ++k) s += f.L.at(i, k) * z[k];
        out[i] = s;
    }
    return out;
}

std::vector<double> sample_dirichlet(RngStream& rng, const std::vector<double>& sigma) {
    for (double s : sigma)
        if (!(s > 0.0))
            throw Error(ErrorKind::ConstraintViolation, "dirichlet requires all sigma_j > 0");
    std::vector<double> g(sigma.size());
    double tot = 0.0;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        g[j] = sample_gamma(rng, sigma[j]);
        tot += g[j];
    }
    for (double& v : g) v /= tot;
    return g;
}

} // namespace copulaforge
