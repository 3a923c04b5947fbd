#include "copulaforge/elliptical.hpp"

#include <cmath>

#include "copulaforge/dists.hpp"
#include "copulaforge/errors.hpp"
#include "copulaforge/special.hpp"

namespace copulaforge {

SampleMatrix sample_gaussian(const CopulaSpec& spec, std::size_t n, RngStream& rng) {
    if (spec.family != Family::Gaussian)
        throw Error(ErrorKind::NotImplemented, "sample_gaussian requires the gaussian family");
    CholeskyFactor L = cholesky(spec.matrix);
    SampleMatrix out(n, spec.d, MarginTag::Uniform01);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> y = sample_mvn(rng, L);
        for (std::size_t j = 0; j < spec.d; ++j)
            out.at(i, j) = clamp_unit_open(norm_cdf(y[j]));
    }
    return out;
}

SampleMatrix sample_student(const CopulaSpec& spec, std::size_t n, RngStream& rng) {
    if (spec.family != Family::Student)
        throw Error(ErrorKind::NotImplemented, "sample_student requires the student family");
    double df = spec.scalars.at(0);
    if (!(df > 0.0))
        throw Error(ErrorKind::ConstraintViolation, "student: degrees of freedom must be positive");
    CholeskyFactor L = cholesky(spec.matrix);
    SampleMatrix out(n, spec.d, MarginTag::Uniform01);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> y = sample_mvn(rng, L);
        double w = sample_chisq(rng, df);
        double scale = std::sqrt(df / w);
        for (std::size_t j = 0; j < spec.d; ++j)
            out.at(i, j) = clamp_unit_open(student_cdf(scale * y[j], df));
    }
    return out;
}

} // namespace copulaforge
