#include "copulaforge/copula.hpp"

#include "copulaforge/archimedean.hpp"
#include "copulaforge/elliptical.hpp"
#include "copulaforge/errors.hpp"
#include "copulaforge/extreme.hpp"

namespace copulaforge {

SampleMatrix sample_unimargin(const CopulaSpec& spec, std::size_t n, RngStream& rng) {
    switch (spec.family) {
    case Family::Gaussian:
        return sample_gaussian(spec, n, rng);
    case Family::Student:
        return sample_student(spec, n, rng);
    case Family::Logistic:
        return ev_sample_logistic(spec, n, rng);
    case Family::AsyLog:
        return ev_sample_asym_logistic(spec, n, rng);
    case Family::Galambos:
    case Family::AsyNegLog:
    case Family::AsyMixed:
        return ev_sample_cond_bivariate(spec, n, rng);
    case Family::HuslerReiss:
    case Family::TEv:
    case Family::Bilog:
    case Family::Dirichlet:
        return ev_sample_extremal_functions(spec, n, rng);
    default:
        if (has_frailty(spec)) return arch_sample_frailty(spec, n, rng);
        return arch_sample_cond_bivariate(spec, n, rng);
    }
}

bool has_copula_cdf(const CopulaSpec& spec) {
    return has_generator(spec.family) || has_pickands(spec);
}

double copula_cdf(const CopulaSpec& spec, std::span<const double> u) {
    if (is_extreme_value(spec.family) && has_pickands(spec)) return ev_cdf(spec, u);
    if (has_generator(spec.family)) return arch_cdf(spec, u);
    throw Error(ErrorKind::NotImplemented,
                std::string(family_name(spec.family)) + ": no closed-form CDF");
}

} // namespace copulaforge
