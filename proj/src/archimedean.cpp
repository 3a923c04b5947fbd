#include "copulaforge/archimedean.hpp"

#include <cmath>
#include <sstream>

#include "copulaforge/brent.hpp"
#include "copulaforge/dists.hpp"
#include "copulaforge/errors.hpp"

namespace copulaforge {

namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;

double clamp_t(double t) {
    if (t < 1e-15) return 1e-15;
    if (t > 1.0) return 1.0;
    return t;
}

void require_unit(double t, const char* who) {
    if (!(t > 0.0 && t <= 1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << who << ": argument " << t << " outside (0, 1]";
        throw Error(ErrorKind::DomainError, msg.str());
    }
}

} // namespace

double GeneratorTriple::phi(double t) const {
    require_unit(t, "phi");
    t = clamp_t(t);
    double th = theta;
    switch (family) {
    case Family::Clayton:
        return (std::pow(t, -th) - 1.0) / th;
    case Family::Amh:
        return std::log((1.0 - th * (1.0 - t)) / t);
    case Family::Frank:
        return -std::log(std::expm1(-th * t) / std::expm1(-th));
    case Family::Joe:
        return -std::log1p(-std::pow(1.0 - t, th));
    case Family::Nelsen9:
        return std::log(1.0 - th * std::log(t));
    case Family::Nelsen10:
        return std::log(2.0 * std::pow(t, -th) - 1.0);
    case Family::Nelsen11:
        return std::log(2.0 - std::pow(t, th));
    case Family::Nelsen12:
        return std::pow(1.0 / t - 1.0, th);
    case Family::Nelsen13:
        return std::pow(1.0 - std::log(t), th) - 1.0;
    case Family::Nelsen14:
        return std::pow(std::pow(t, -1.0 / th) - 1.0, th);
    case Family::Nelsen15:
        return std::pow(1.0 - std::pow(t, 1.0 / th), th);
    case Family::Nelsen22:
        return std::asin(1.0 - std::pow(t, th));
    case Family::Logistic:
        return std::pow(-std::log(t), 1.0 / th);
    default:
        throw Error(ErrorKind::NotImplemented,
                    std::string(family_name(family)) + " has no Archimedean generator");
    }
}

double GeneratorTriple::phi_inv(double s) const {
    if (s < 0.0) {
        if (s > -1e-12)
            s = 0.0;
        else
            throw Error(ErrorKind::DomainError, "phi_inv: negative argument");
    }
    double th = theta;
    double v;
    switch (family) {
    case Family::Clayton: {
        double base = 1.0 + th * s;
        v = base <= 0.0 ? 0.0 : std::pow(base, -1.0 / th);
        break;
    }
    case Family::Amh:
        v = (1.0 - th) / (std::exp(s) - th);
        break;
    case Family::Frank:
        v = -std::log1p(std::exp(-s) * std::expm1(-th)) / th;
        break;
    case Family::Joe:
        v = 1.0 - std::pow(-std::expm1(-s), 1.0 / th);
        break;
    case Family::Nelsen9:
        v = std::exp((1.0 - std::exp(s)) / th);
        break;
    case Family::Nelsen10:
        v = std::pow(2.0 / (std::exp(s) + 1.0), 1.0 / th);
        break;
    case Family::Nelsen11: {
        double base = 2.0 - std::exp(s);
        v = base <= 0.0 ? 0.0 : std::pow(base, 1.0 / th);
        break;
    }
    case Family::Nelsen12:
        v = 1.0 / (1.0 + std::pow(s, 1.0 / th));
        break;
    case Family::Nelsen13:
        v = std::exp(1.0 - std::pow(1.0 + s, 1.0 / th));
        break;
    case Family::Nelsen14:
        v = std::pow(1.0 + std::pow(s, 1.0 / th), -th);
        break;
    case Family::Nelsen15:
        v = s >= 1.0 ? 0.0 : std::pow(1.0 - std::pow(s, 1.0 / th), th);
        break;
    case Family::Nelsen22:
        v = s >= kHalfPi ? 0.0 : std::pow(1.0 - std::sin(s), 1.0 / th);
        break;
    case Family::Logistic:
        v = std::exp(-std::pow(s, th));
        break;
    default:
        throw Error(ErrorKind::NotImplemented,
                    std::string(family_name(family)) + " has no Archimedean generator");
    }
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return v;
}

double GeneratorTriple::phi_prime(double t) const {
    require_unit(t, "phi_prime");
    t = clamp_t(t);
    double th = theta;
    switch (family) {
    case Family::Clayton:
        return -std::pow(t, -th - 1.0);
    case Family::Amh:
        return (th - 1.0) / (t * (1.0 - th * (1.0 - t)));
    case Family::Frank:
        return -th / std::expm1(th * t);
    case Family::Joe:
        return -th * std::pow(1.0 - t, th - 1.0) / (1.0 - std::pow(1.0 - t, th));
    case Family::Nelsen9:
        return -th / (t * (1.0 - th * std::log(t)));
    case Family::Nelsen10:
        return -2.0 * th * std::pow(t, -th - 1.0) / (2.0 * std::pow(t, -th) - 1.0);
    case Family::Nelsen11:
        return -th * std::pow(t, th - 1.0) / (2.0 - std::pow(t, th));
    case Family::Nelsen12:
        return -th * std::pow(1.0 / t - 1.0, th - 1.0) / (t * t);
    case Family::Nelsen13:
        return -th * std::pow(1.0 - std::log(t), th - 1.0) / t;
    case Family::Nelsen14:
        return -std::pow(std::pow(t, -1.0 / th) - 1.0, th - 1.0) *
               std::pow(t, -1.0 / th - 1.0);
    case Family::Nelsen15:
        return -std::pow(1.0 - std::pow(t, 1.0 / th), th - 1.0) *
               std::pow(t, 1.0 / th - 1.0);
    case Family::Nelsen22: {
        double x = 1.0 - std::pow(t, th);
        return -th * std::pow(t, th - 1.0) / std::sqrt(1.0 - x * x);
    }
    case Family::Logistic:
        return -std::pow(-std::log(t), 1.0 / th - 1.0) / (th * t);
    default:
        throw Error(ErrorKind::NotImplemented,
                    std::string(family_name(family)) + " has no Archimedean generator");
    }
}

GeneratorTriple generator(const CopulaSpec& spec) {
    if (!has_generator(spec.family))
        throw Error(ErrorKind::NotImplemented,
                    std::string(family_name(spec.family)) + " has no Archimedean generator");
    return GeneratorTriple{spec.family, spec.theta()};
}

double arch_cdf(const CopulaSpec& spec, std::span<const double> u) {
    if (u.size() != spec.d)
        throw Error(ErrorKind::ArityMismatch, "arch_cdf: point dimension mismatch");
    GeneratorTriple g = generator(spec);
    double s = 0.0;
    for (double uj : u) {
        require_unit(uj, "arch_cdf");
        s += g.phi(uj);
    }
    return g.phi_inv(s);
}

double arch_cond_cdf(const CopulaSpec& spec, double u0, double u1) {
    if (spec.d != 2)
        throw Error(ErrorKind::DimensionUnsupported, "arch_cond_cdf requires d = 2");
    if (!(u0 > 0.0 && u0 < 1.0 && u1 > 0.0 && u1 < 1.0))
        throw Error(ErrorKind::DomainError, "arch_cond_cdf requires (u0,u1) in (0,1)^2");
    GeneratorTriple g = generator(spec);
    double c = g.phi_inv(g.phi(u0) + g.phi(u1));
    if (c <= 0.0) return 0.0; // flat region of a non-strict generator
    double denom = g.phi_prime(c);
    if (!std::isfinite(denom)) return 0.0;
    double r = g.phi_prime(u0) / denom;
    if (r < 0.0) r = 0.0;
    if (r > 1.0) r = 1.0;
    return r;
}

SampleMatrix arch_sample_cond_bivariate(const CopulaSpec& spec, std::size_t n,
                                        RngStream& rng) {
    if (spec.d != 2)
        throw Error(ErrorKind::DimensionUnsupported,
                    "conditional sampler requires d = 2");
    const double eps = 1e-12;
    SampleMatrix out(n, 2, MarginTag::Uniform01);
    for (std::size_t i = 0; i < n; ++i) {
        double u0 = rng.uniform01();
        double t1 = rng.uniform01();
        try {
            double u1 = brent_root(
                [&](double v) { return arch_cond_cdf(spec, u0, v) - t1; }, eps,
                1.0 - eps, 1e-12);
            out.at(i, 0) = u0;
            out.at(i, 1) = clamp_unit_open(u1);
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "row " << i << ": " << e.what();
            throw Error(ErrorKind::SamplerFailure, msg.str());
        }
    }
    return out;
}

bool has_frailty(const CopulaSpec& spec) {
    switch (spec.family) {
    case Family::Clayton:
        return spec.theta() > 0.0;
    case Family::Frank:
        return spec.theta() > 0.0;
    case Family::Amh:
        return spec.theta() >= 0.0 && spec.theta() < 1.0;
    case Family::Joe:
    case Family::Logistic:
        return true;
    default:
        return false;
    }
}

double sample_frailty_variable(const CopulaSpec& spec, RngStream& rng) {
    double th = spec.theta();
    switch (spec.family) {
    case Family::Clayton:
        // Gamma(1/theta, scale theta): Laplace transform (1 + theta s)^(-1/theta)
        return th * sample_gamma(rng, 1.0 / th);
    case Family::Frank:
        // log-series(p = 1 - e^-theta): pgf log(1 - p z)/log(1 - p)
        return sample_logseries(rng, -std::expm1(-th));
    case Family::Joe:
        // Sibuya(1/theta): pgf 1 - (1-z)^(1/theta)
        return sample_sibuya(rng, 1.0 / th);
    case Family::Amh:
        // geometric(1 - theta): pgf (1-theta) z / (1 - theta z)
        return sample_geometric(rng, 1.0 - th);
    case Family::Logistic:
        // positive stable(theta): Laplace transform exp(-s^theta)
        return sample_positive_stable(rng, th);
    default:
        throw Error(ErrorKind::FrailtyUnavailable,
                    std::string(family_name(spec.family)) +
                        ": no frailty law for this family/parameter combination");
    }
}

SampleMatrix arch_sample_frailty(const CopulaSpec& spec, std::size_t n, RngStream& rng) {
    if (!has_frailty(spec))
        throw Error(ErrorKind::FrailtyUnavailable,
                    std::string(family_name(spec.family)) +
                        ": no frailty law for this family/parameter combination");
    GeneratorTriple g = generator(spec);
    SampleMatrix out(n, spec.d, MarginTag::Uniform01);
    for (std::size_t i = 0; i < n; ++i) {
        double v = sample_frailty_variable(spec, rng);
        for (std::size_t j = 0; j < spec.d; ++j) {
            double e = rng.exponential();
            out.at(i, j) = clamp_unit_open(g.phi_inv(e / v));
        }
    }
    return out;
}

} // namespace copulaforge
