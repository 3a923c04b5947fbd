#include "copulaforge/special.hpp"

#include <cmath>

#include "copulaforge/brent.hpp"
#include "copulaforge/errors.hpp"

namespace copulaforge {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488016887242097;
constexpr double kPi = 3.1415926535897932384626433832795;

// Continued fraction for the incomplete beta (Lentz's method).
double betacf(double a, double b, double x) {
    const int max_it = 300;
    const double eps = 3e-16, fpmin = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_it; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorKind::DomainError, "norm_quantile requires p in (0,1)");
    return brent_root([p](double x) { return norm_cdf(x) - p; }, -40.0, 40.0, 1e-14);
}

double reg_inc_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                   a * std::log(x) + b * std::log1p(-x);
    double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double student_cdf(double x, double nu) {
    if (!(nu > 0.0))
        throw Error(ErrorKind::ConstraintViolation, "student_cdf requires nu > 0");
    if (x == 0.0) return 0.5;
    double ib = reg_inc_beta(0.5 * nu, 0.5, nu / (nu + x * x));
    return x > 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

double student_pdf(double x, double nu) {
    double ln = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                0.5 * std::log(nu * kPi) -
                0.5 * (nu + 1.0) * std::log1p(x * x / nu);
    return std::exp(ln);
}

double student_quantile(double p, double nu) {
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorKind::DomainError, "student_quantile requires p in (0,1)");
    // Expand the bracket until it encloses the quantile (heavy tails).
    double hi = 2.0;
    while (student_cdf(hi, nu) < p && hi < 1e300) hi *= 4.0;
    double lo = -2.0;
    while (student_cdf(lo, nu) > p && lo > -1e300) lo *= 4.0;
    return brent_root([p, nu](double x) { return student_cdf(x, nu) - p; }, lo, hi, 1e-12);
}

} // namespace copulaforge
