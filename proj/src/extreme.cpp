#include "copulaforge/extreme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "copulaforge/brent.hpp"
#include "copulaforge/dists.hpp"
#include "copulaforge/errors.hpp"
#include "copulaforge/special.hpp"

namespace copulaforge {

namespace {

[[noreturn]] void no_pickands(const CopulaSpec& spec) {
    throw Error(ErrorKind::NotImplemented,
                std::string(family_name(spec.family)) +
                    (spec.d > 2 ? ": Pickands function not implemented for d > 2"
                                : ": Pickands function not implemented"));
}

// Bilogistic crossover: root q of (1-a) w (1-q)^b = (1-b)(1-w) q^a.
double bilog_q(double a, double b, double w) {
    return brent_root(
        [&](double q) {
            return (1.0 - a) * w * std::pow(1.0 - q, b) -
                   (1.0 - b) * (1.0 - w) * std::pow(q, a);
        },
        1e-15, 1.0 - 1e-15, 1e-14);
}

double asy_log_pickands(const std::vector<Subset>& subsets, std::span<const double> w) {
    double total = 0.0;
    for (const Subset& b : subsets) {
        double s = 0.0;
        for (std::size_t k = 0; k < b.coords.size(); ++k) {
            double x = b.weights[k] * w[b.coords[k]];
            if (x > 0.0) s += std::pow(x, 1.0 / b.alpha);
        }
        if (s > 0.0) total += std::pow(s, b.alpha);
    }
    return total;
}

// d/dw of the bivariate subset form (w is the weight of coordinate 0).
double asy_log_pickands_prime(const std::vector<Subset>& subsets, double w) {
    double wj[2] = {w, 1.0 - w};
    double sign[2] = {1.0, -1.0};
    double total = 0.0;
    for (const Subset& b : subsets) {
        double s = 0.0;
        double ds = 0.0;
        for (std::size_t k = 0; k < b.coords.size(); ++k) {
            std::size_t j = b.coords[k];
            double psi = b.weights[k];
            double x = psi * wj[j];
            if (x > 0.0) {
                s += std::pow(x, 1.0 / b.alpha);
                ds += std::pow(x, 1.0 / b.alpha - 1.0) * psi * sign[j];
            }
        }
        if (s > 0.0) total += std::pow(s, b.alpha - 1.0) * ds;
    }
    return total;
}

double tev_z(double w, double rho, double nu) {
    return std::sqrt(nu + 1.0) * (std::pow(w / (1.0 - w), 1.0 / nu) - rho) /
           std::sqrt(1.0 - rho * rho);
}

} // namespace

double pickands2(const CopulaSpec& spec, double w) {
    if (!(w >= 0.0 && w <= 1.0))
        throw Error(ErrorKind::DomainError, "pickands: weight outside [0,1]");
    if (w == 0.0 || w == 1.0) return 1.0;
    double v = 1.0 - w;
    switch (spec.family) {
    case Family::Logistic: {
        double r = 1.0 / spec.theta();
        return std::pow(std::pow(w, r) + std::pow(v, r), spec.theta());
    }
    case Family::Galambos: {
        double th = spec.theta();
        if (th == 0.0) return 1.0;
        return 1.0 - std::pow(std::pow(w, -th) + std::pow(v, -th), -1.0 / th);
    }
    case Family::AsyLog: {
        double ww[2] = {w, v};
        return asy_log_pickands(spec.subsets, ww);
    }
    case Family::AsyNegLog: {
        double th = spec.scalars[0], p1 = spec.scalars[1], p2 = spec.scalars[2];
        if (th == 0.0) return 1.0;
        return 1.0 - std::pow(std::pow(p1 * w, -th) + std::pow(p2 * v, -th), -1.0 / th);
    }
    case Family::AsyMixed: {
        double th = spec.scalars[0], p1 = spec.scalars[1];
        return 1.0 - (th + p1) * w + th * w * w + p1 * w * w * w;
    }
    case Family::HuslerReiss: {
        if (spec.d > 2) no_pickands(spec);
        double th = spec.theta();
        double lr = std::log(v / w);
        return v * norm_cdf(th + lr / (2.0 * th)) + w * norm_cdf(th - lr / (2.0 * th));
    }
    case Family::TEv: {
        double rho = spec.scalars[0], nu = spec.scalars[1];
        return w * student_cdf(tev_z(w, rho, nu), nu + 1.0) +
               v * student_cdf(tev_z(v, rho, nu), nu + 1.0);
    }
    case Family::Bilog: {
        double a = spec.scalars[0], b = spec.scalars[1];
        double q = bilog_q(a, b, w);
        return w * std::pow(q, 1.0 - a) + v * std::pow(1.0 - q, 1.0 - b);
    }
    default:
        no_pickands(spec);
    }
}

double pickands(const CopulaSpec& spec, std::span<const double> w) {
    if (w.size() != spec.d)
        throw Error(ErrorKind::ArityMismatch, "pickands: weight dimension mismatch");
    double sum = 0.0;
    for (double x : w) {
        if (x < -1e-12) throw Error(ErrorKind::DomainError, "pickands: negative weight");
        sum += x;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        throw Error(ErrorKind::DomainError, "pickands: weights do not lie on the simplex");

    std::vector<double> wn(w.begin(), w.end());
    for (double& x : wn) {
        x /= sum;
        if (x < 0.0) x = 0.0;
    }
    for (std::size_t j = 0; j < wn.size(); ++j)
        if (wn[j] == 1.0) return 1.0; // simplex vertex

    if (spec.d == 2) return pickands2(spec, wn[0]);

    switch (spec.family) {
    case Family::Logistic: {
        double r = 1.0 / spec.theta();
        double s = 0.0;
        for (double x : wn)
            if (x > 0.0) s += std::pow(x, r);
        return std::pow(s, spec.theta());
    }
    case Family::AsyLog:
        return asy_log_pickands(spec.subsets, wn);
    default:
        no_pickands(spec);
    }
}

bool has_pickands_prime(const CopulaSpec& spec) {
    return has_pickands(spec) && spec.d == 2;
}

double pickands2_prime(const CopulaSpec& spec, double w) {
    if (!(w > 0.0 && w < 1.0))
        throw Error(ErrorKind::DomainError, "pickands2_prime: weight outside (0,1)");
    double v = 1.0 - w;
    switch (spec.family) {
    case Family::Logistic: {
        double th = spec.theta();
        double r = 1.0 / th;
        double s = std::pow(w, r) + std::pow(v, r);
        return std::pow(s, th - 1.0) * (std::pow(w, r - 1.0) - std::pow(v, r - 1.0));
    }
    case Family::Galambos: {
        double th = spec.theta();
        if (th == 0.0) return 0.0;
        double s = std::pow(w, -th) + std::pow(v, -th);
        return -std::pow(s, -1.0 / th - 1.0) *
               (std::pow(w, -th - 1.0) - std::pow(v, -th - 1.0));
    }
    case Family::AsyLog:
        return asy_log_pickands_prime(spec.subsets, w);
    case Family::AsyNegLog: {
        double th = spec.scalars[0], p1 = spec.scalars[1], p2 = spec.scalars[2];
        if (th == 0.0) return 0.0;
        double s = std::pow(p1 * w, -th) + std::pow(p2 * v, -th);
        return -std::pow(s, -1.0 / th - 1.0) *
               (std::pow(p1, -th) * std::pow(w, -th - 1.0) -
                std::pow(p2, -th) * std::pow(v, -th - 1.0));
    }
    case Family::AsyMixed: {
        double th = spec.scalars[0], p1 = spec.scalars[1];
        return -(th + p1) + 2.0 * th * w + 3.0 * p1 * w * w;
    }
    case Family::HuslerReiss: {
        if (spec.d > 2) no_pickands(spec);
        double th = spec.theta();
        double lr = std::log(v / w);
        double z1 = th + lr / (2.0 * th);
        double z2 = th - lr / (2.0 * th);
        double dz = 1.0 / (2.0 * th * w * v); // |d z2 / dw|; z1' = -dz
        return -norm_cdf(z1) + norm_cdf(z2) - v * norm_pdf(z1) * dz + w * norm_pdf(z2) * dz;
    }
    case Family::TEv: {
        double rho = spec.scalars[0], nu = spec.scalars[1];
        double c = std::sqrt((nu + 1.0) / (1.0 - rho * rho));
        double zw = tev_z(w, rho, nu);
        double zv = tev_z(v, rho, nu);
        double dzw = c / nu * std::pow(w / v, 1.0 / nu - 1.0) / (v * v);
        double dzv = c / nu * std::pow(v / w, 1.0 / nu - 1.0) / (w * w);
        return student_cdf(zw, nu + 1.0) - student_cdf(zv, nu + 1.0) +
               w * student_pdf(zw, nu + 1.0) * dzw - v * student_pdf(zv, nu + 1.0) * dzv;
    }
    case Family::Bilog: {
        // envelope property: dA/dq = 0 at the crossover root
        double a = spec.scalars[0], b = spec.scalars[1];
        double q = bilog_q(a, b, w);
        return std::pow(q, 1.0 - a) - std::pow(1.0 - q, 1.0 - b);
    }
    default:
        no_pickands(spec);
    }
}

double stdf(const CopulaSpec& spec, std::span<const double> x) {
    if (x.size() != spec.d)
        throw Error(ErrorKind::ArityMismatch, "stdf: point dimension mismatch");
    double sum = 0.0;
    for (double v : x) {
        if (v < 0.0) throw Error(ErrorKind::DomainError, "stdf: negative coordinate");
        sum += v;
    }
    if (sum <= 0.0) throw Error(ErrorKind::DomainError, "stdf: zero vector");
    std::vector<double> w(x.begin(), x.end());
    for (double& v : w) v /= sum;
    return sum * pickands(spec, w);
}

double ev_cdf(const CopulaSpec& spec, std::span<const double> u) {
    if (u.size() != spec.d)
        throw Error(ErrorKind::ArityMismatch, "ev_cdf: point dimension mismatch");
    std::vector<double> x(u.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (!(u[j] > 0.0 && u[j] <= 1.0))
            throw Error(ErrorKind::DomainError, "ev_cdf: argument outside (0,1]");
        x[j] = -std::log(u[j]);
        sum += x[j];
    }
    if (sum == 0.0) return 1.0;
    return std::exp(-stdf(spec, x));
}

double ev_cond_cdf(const CopulaSpec& spec, double u0, double u1) {
    if (spec.d != 2)
        throw Error(ErrorKind::DimensionUnsupported, "ev_cond_cdf requires d = 2");
    if (!(u0 > 0.0 && u0 < 1.0 && u1 > 0.0 && u1 < 1.0))
        throw Error(ErrorKind::DomainError, "ev_cond_cdf requires (u0,u1) in (0,1)^2");
    if (!has_pickands_prime(spec))
        throw Error(ErrorKind::NotImplemented,
                    std::string(family_name(spec.family)) + ": A' unavailable");
    double x0 = -std::log(u0), x1 = -std::log(u1);
    double s = x0 + x1;
    double w = x0 / s;
    double a = pickands2(spec, w);
    double c = std::exp(-s * a);
    double r = c / u0 * (a + (1.0 - w) * pickands2_prime(spec, w));
    if (r < 0.0) r = 0.0;
    if (r > 1.0) r = 1.0;
    return r;
}

SampleMatrix ev_sample_cond_bivariate(const CopulaSpec& spec, std::size_t n,
                                      RngStream& rng) {
    if (spec.d != 2)
        throw Error(ErrorKind::DimensionUnsupported, "conditional sampler requires d = 2");
    const double eps = 1e-12;
    SampleMatrix out(n, 2, MarginTag::Uniform01);
    for (std::size_t i = 0; i < n; ++i) {
        double u0 = rng.uniform01();
        double t1 = rng.uniform01();
        try {
            double u1 = brent_root(
                [&](double v) { return ev_cond_cdf(spec, u0, v) - t1; }, eps,
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

SampleMatrix ev_sample_logistic(const CopulaSpec& spec, std::size_t n, RngStream& rng) {
    if (spec.family != Family::Logistic)
        throw Error(ErrorKind::NotImplemented, "logistic sampler requires the logistic family");
    double th = spec.theta();
    SampleMatrix out(n, spec.d, MarginTag::Uniform01);
    for (std::size_t i = 0; i < n; ++i) {
        double s = sample_positive_stable(rng, th);
        for (std::size_t j = 0; j < spec.d; ++j) {
            double e = rng.exponential();
            out.at(i, j) = clamp_unit_open(std::exp(-std::pow(e / s, th)));
        }
    }
    return out;
}

SampleMatrix ev_sample_asym_logistic(const CopulaSpec& spec, std::size_t n,
                                     RngStream& rng) {
    if (spec.family != Family::AsyLog || spec.subsets.empty())
        throw Error(ErrorKind::NotImplemented,
                    "asymmetric logistic sampler requires subset parameters");
    SampleMatrix out(n, spec.d, MarginTag::Uniform01);
    std::vector<double> z(spec.d);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(z.begin(), z.end(), 0.0);
        for (const Subset& b : spec.subsets) {
            bool active = false;
            for (double wgt : b.weights) active = active || wgt > 0.0;
            if (!active) continue;
            // logistic cluster with unit Frechet margins: M_j = (S/E_j)^alpha
            double s = sample_positive_stable(rng, b.alpha);
            for (std::size_t k = 0; k < b.coords.size(); ++k) {
                double e = rng.exponential();
                if (b.weights[k] == 0.0) continue;
                double m = std::pow(s / e, b.alpha);
                z[b.coords[k]] = std::max(z[b.coords[k]], b.weights[k] * m);
            }
        }
        for (std::size_t j = 0; j < spec.d; ++j)
            out.at(i, j) = clamp_unit_open(std::exp(-1.0 / z[j]));
    }
    return out;
}

namespace {

// Per-anchor machinery for extremal-function draws.
class ExtremalSampler {
public:
    explicit ExtremalSampler(const CopulaSpec& spec) : spec_(spec) {
        switch (spec.family) {
        case Family::HuslerReiss: {
            std::size_t d = spec.d;
            for (std::size_t j = 0; j < d; ++j) {
                SquareMatrix cov(d - 1);
                std::size_t r = 0;
                for (std::size_t i = 0; i < d; ++i) {
                    if (i == j) continue;
                    std::size_t c = 0;
                    for (std::size_t k = 0; k < d; ++k) {
                        if (k == j) continue;
                        cov.at(r, c) = 0.5 * (spec.matrix.at(i, j) + spec.matrix.at(k, j) -
                                              spec.matrix.at(i, k));
                        ++c;
                    }
                    ++r;
                }
                hr_factors_.push_back(cholesky(cov));
            }
            break;
        }
        case Family::Dirichlet: {
            std::size_t m = spec.mix.weights.size();
            sigma_totals_.resize(m);
            for (std::size_t k = 0; k < m; ++k) {
                double tot = 0.0;
                for (double s : spec.mix.sigma[k]) tot += s;
                sigma_totals_[k] = tot;
            }
            anchor_probs_.assign(spec.d, std::vector<double>(m));
            for (std::size_t j = 0; j < spec.d; ++j) {
                double norm = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    anchor_probs_[j][k] =
                        spec.mix.weights[k] * spec.mix.sigma[k][j] / sigma_totals_[k];
                    norm += anchor_probs_[j][k];
                }
                for (double& p : anchor_probs_[j]) p /= norm;
            }
            break;
        }
        case Family::TEv:
        case Family::Bilog:
            break;
        default:
            throw Error(ErrorKind::NotImplemented,
                        std::string(family_name(spec.family)) +
                            ": no extremal-function sampler");
        }
    }

    std::vector<double> draw(std::size_t j, RngStream& rng) const {
        switch (spec_.family) {
        case Family::HuslerReiss:
            return draw_hr(j, rng);
        case Family::TEv:
            return draw_tev(j, rng);
        case Family::Bilog:
            return draw_bilog(j, rng);
        case Family::Dirichlet:
            return draw_dirichlet(j, rng);
        default:
            throw Error(ErrorKind::NotImplemented, "no extremal-function sampler");
        }
    }

private:
    std::vector<double> draw_hr(std::size_t j, RngStream& rng) const {
        // log-normal: Y_i = exp(G_i - Gamma_ij / 2), Var(G_i) = Gamma_ij
        std::vector<double> g = sample_mvn(rng, hr_factors_[j]);
        std::vector<double> y(spec_.d);
        std::size_t r = 0;
        for (std::size_t i = 0; i < spec_.d; ++i) {
            if (i == j) {
                y[i] = 1.0;
                continue;
            }
            y[i] = std::exp(g[r] - 0.5 * spec_.matrix.at(i, j));
            ++r;
        }
        return y;
    }

    std::vector<double> draw_tev(std::size_t j, RngStream& rng) const {
        double rho = spec_.scalars[0], nu = spec_.scalars[1];
        double z = rng.normal();
        double wchi = sample_chisq(rng, nu + 1.0);
        double tdraw = z / std::sqrt(wchi / (nu + 1.0));
        double t = rho + std::sqrt((1.0 - rho * rho) / (nu + 1.0)) * tdraw;
        double other = t > 0.0 ? std::pow(t, nu) : 0.0;
        if (other < 1e-300) other = 1e-300;
        std::vector<double> y(2, 1.0);
        y[1 - j] = other;
        return y;
    }

    std::vector<double> draw_bilog(std::size_t j, RngStream& rng) const {
        double a = spec_.scalars[0], b = spec_.scalars[1];
        double u = rng.uniform01();
        // spectral functions f0(t) = (1-a) t^-a, f1(t) = (1-b)(1-t)^-b on (0,1)
        double t = j == 0 ? std::pow(u, 1.0 / (1.0 - a)) : 1.0 - std::pow(u, 1.0 / (1.0 - b));
        t = std::min(std::max(t, 1e-16), 1.0 - 1e-16);
        double f0 = (1.0 - a) * std::pow(t, -a);
        double f1 = (1.0 - b) * std::pow(1.0 - t, -b);
        std::vector<double> y(2, 1.0);
        if (j == 0)
            y[1] = f1 / f0;
        else
            y[0] = f0 / f1;
        return y;
    }

    std::vector<double> draw_dirichlet(std::size_t j, RngStream& rng) const {
        const auto& probs = anchor_probs_[j];
        double u = rng.uniform01();
        std::size_t k = 0;
        double acc = probs[0];
        while (k + 1 < probs.size() && u > acc) acc += probs[++k];
        std::vector<double> alpha = spec_.mix.sigma[k];
        alpha[j] += 1.0;
        std::vector<double> w = sample_dirichlet(rng, alpha);
        std::vector<double> y(spec_.d);
        for (std::size_t i = 0; i < spec_.d; ++i) y[i] = w[i] / w[j];
        y[j] = 1.0;
        return y;
    }

    const CopulaSpec& spec_;
    std::vector<CholeskyFactor> hr_factors_;
    std::vector<std::vector<double>> anchor_probs_;
    std::vector<double> sigma_totals_;
};

} // namespace

std::vector<double> rext_func(const CopulaSpec& spec, std::size_t j, RngStream& rng) {
    if (j >= spec.d)
        throw Error(ErrorKind::DomainError, "rext_func: anchor index out of range");
    ExtremalSampler sampler(spec);
    return sampler.draw(j, rng);
}

SampleMatrix ev_sample_extremal_functions(const CopulaSpec& spec, std::size_t n,
                                          RngStream& rng) {
    ExtremalSampler sampler(spec);
    const std::size_t proposal_cap = 1000000;
    std::size_t d = spec.d;
    SampleMatrix out(n, d, MarginTag::Uniform01);
    std::vector<double> z(d);
    for (std::size_t row = 0; row < n; ++row) {
        std::fill(z.begin(), z.end(), 0.0);
        for (std::size_t j = 0; j < d; ++j) {
            double zeta = rng.exponential();
            std::size_t proposals = 0;
            while (1.0 / zeta > z[j]) {
                if (++proposals > proposal_cap) {
                    std::ostringstream msg;
                    msg << "row " << row << ", coordinate " << j << ": more than "
                        << proposal_cap << " extremal-function proposals";
                    throw Error(ErrorKind::IterationCap, msg.str());
                }
                std::vector<double> y = sampler.draw(j, rng);
                bool record = true;
                for (std::size_t i = 0; i < j; ++i) {
                    if (y[i] / zeta >= z[i]) {
                        record = false;
                        break;
                    }
                }
                if (record)
                    for (std::size_t i = 0; i < d; ++i) z[i] = std::max(z[i], y[i] / zeta);
                zeta += rng.exponential();
            }
        }
        for (std::size_t j = 0; j < d; ++j)
            out.at(row, j) = clamp_unit_open(std::exp(-1.0 / z[j]));
    }
    return out;
}

} // namespace copulaforge
