#include "copulaforge/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "copulaforge/dists.hpp"
#include "copulaforge/errors.hpp"

namespace copulaforge {

namespace {

struct FamilyInfo {
    const char* name;
    std::size_t n_scalars;
    const char* scalar_names;
};

const std::map<Family, FamilyInfo>& catalog() {
    static const std::map<Family, FamilyInfo> table = {
        {Family::Clayton, {"clayton", 1, "theta"}},
        {Family::Amh, {"amh", 1, "theta"}},
        {Family::Frank, {"frank", 1, "theta"}},
        {Family::Joe, {"joe", 1, "theta"}},
        {Family::Nelsen9, {"nelsen9", 1, "theta"}},
        {Family::Nelsen10, {"nelsen10", 1, "theta"}},
        {Family::Nelsen11, {"nelsen11", 1, "theta"}},
        {Family::Nelsen12, {"nelsen12", 1, "theta"}},
        {Family::Nelsen13, {"nelsen13", 1, "theta"}},
        {Family::Nelsen14, {"nelsen14", 1, "theta"}},
        {Family::Nelsen15, {"nelsen15", 1, "theta"}},
        {Family::Nelsen22, {"nelsen22", 1, "theta"}},
        {Family::Logistic, {"logistic", 1, "theta"}},
        {Family::Galambos, {"galambos", 1, "theta"}},
        {Family::AsyLog, {"asy_log", 3, "theta,psi1,psi2"}},
        {Family::AsyNegLog, {"asy_neg_log", 3, "theta,psi1,psi2"}},
        {Family::AsyMixed, {"asy_mixed", 2, "theta,psi1"}},
        {Family::HuslerReiss, {"husler_reiss", 1, "theta"}},
        {Family::TEv, {"t_ev", 2, "theta,psi1"}},
        {Family::Bilog, {"bilog", 2, "alpha,beta"}},
        {Family::Dirichlet, {"dirichlet", 0, ""}},
        {Family::Gaussian, {"gaussian", 0, ""}},
        {Family::Student, {"student", 1, "df"}},
    };
    return table;
}

[[noreturn]] void fail_constraint(Family f, const std::string& what) {
    throw Error(ErrorKind::ConstraintViolation,
                std::string(family_name(f)) + ": " + what);
}

[[noreturn]] void fail_dimension(Family f, const std::string& what) {
    throw Error(ErrorKind::DimensionUnsupported,
                std::string(family_name(f)) + ": " + what);
}

void require_arity(Family f, const ParamSet& p, std::size_t n) {
    if (p.scalars.size() != n) {
        std::ostringstream msg;
        msg << family_name(f) << ": expected " << n << " scalar parameter(s) ("
            << catalog().at(f).scalar_names << "), got " << p.scalars.size();
        throw Error(ErrorKind::ArityMismatch, msg.str());
    }
}

void require_bivariate(Family f, std::size_t d) {
    if (d != 2) fail_dimension(f, "implemented for d = 2 only");
}

// Variogram validity: symmetric, zero diagonal, nonnegative, and strictly
// conditionally negative definite (equivalently the induced covariance
// 0.5*(G[i][0]+G[k][0]-G[i][k]) over i,k != 0 is strictly positive definite).
void check_variogram(Family f, const SquareMatrix& g) {
    std::size_t d = g.d;
    for (std::size_t i = 0; i < d; ++i) {
        if (g.at(i, i) != 0.0) fail_constraint(f, "variogram matrix must have zero diagonal");
        for (std::size_t j = 0; j < d; ++j) {
            if (g.at(i, j) < 0.0) fail_constraint(f, "variogram entries must be nonnegative");
            if (std::fabs(g.at(i, j) - g.at(j, i)) > 1e-12)
                fail_constraint(f, "variogram matrix must be symmetric");
        }
    }
    SquareMatrix cov(d - 1);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t k = 1; k < d; ++k)
            cov.at(i - 1, k - 1) = 0.5 * (g.at(i, 0) + g.at(k, 0) - g.at(i, k));
    try {
        cholesky(cov);
    } catch (const Error&) {
        fail_constraint(f, "variogram matrix must be strictly conditionally negative definite");
    }
}

SquareMatrix normalize_correlation(Family f, const SquareMatrix& sigma, bool* normalized) {
    std::size_t d = sigma.d;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (std::fabs(sigma.at(i, j) - sigma.at(j, i)) > 1e-12)
                fail_constraint(f, "correlation matrix must be symmetric");
    SquareMatrix out(d);
    *normalized = false;
    for (std::size_t i = 0; i < d; ++i) {
        if (sigma.at(i, i) <= 0.0)
            fail_constraint(f, "matrix diagonal entries must be positive");
        if (std::fabs(sigma.at(i, i) - 1.0) > 1e-12) *normalized = true;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out.at(i, j) = sigma.at(i, j) / std::sqrt(sigma.at(i, i) * sigma.at(j, j));
    try {
        cholesky(out);
    } catch (const Error& e) {
        throw Error(ErrorKind::NotPositiveDefinite,
                    std::string(family_name(f)) +
                        ": correlation matrix must be strictly positive definite (" +
                        e.what() + ")");
    }
    return out;
}

void check_subsets(Family f, const std::vector<Subset>& subsets, std::size_t d) {
    if (subsets.empty()) fail_constraint(f, "at least one coordinate subset is required");
    std::vector<double> weight_sum(d, 0.0);
    for (const Subset& b : subsets) {
        if (b.coords.empty()) fail_constraint(f, "empty coordinate subset");
        if (b.coords.size() != b.weights.size())
            throw Error(ErrorKind::ArityMismatch,
                        std::string(family_name(f)) + ": one weight per subset coordinate required");
        std::vector<std::size_t> sorted = b.coords;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail_constraint(f, "subset coordinates must be distinct");
        for (std::size_t c : b.coords)
            if (c >= d) fail_dimension(f, "subset coordinate index out of range");
        if (!(b.alpha > 0.0 && b.alpha <= 1.0))
            fail_constraint(f, "subset dependence theta_b must lie in (0, 1]");
        bool all_zero = true;
        for (std::size_t k = 0; k < b.coords.size(); ++k) {
            double w = b.weights[k];
            if (!(w >= 0.0 && w <= 1.0))
                fail_constraint(f, "subset weights psi_{j,b} must lie in [0, 1]");
            if (w != 0.0) all_zero = false;
            weight_sum[b.coords[k]] += w;
        }
        if (b.coords.size() >= 2 && b.alpha == 1.0 && !all_zero)
            fail_constraint(f, "theta_b = 1 on a non-singleton subset requires psi_{j,b} = 0");
    }
    for (std::size_t j = 0; j < d; ++j)
        if (std::fabs(weight_sum[j] - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << family_name(f) << ": weights of coordinate " << j
                << " must sum to 1 (got " << weight_sum[j] << ")";
            throw Error(ErrorKind::WeightSumViolation, msg.str());
        }
}

void check_dirichlet(Family f, const DirichletMix& mix, std::size_t d) {
    if (mix.weights.empty() || mix.sigma.empty())
        throw Error(ErrorKind::ArityMismatch,
                    std::string(family_name(f)) + ": mixture weights and sigma rows required");
    if (mix.weights.size() != mix.sigma.size())
        throw Error(ErrorKind::ArityMismatch,
                    std::string(family_name(f)) + ": one sigma row per mixture weight required");
    double wsum = 0.0;
    for (double w : mix.weights) {
        if (!(w > 0.0)) fail_constraint(f, "mixture weights theta_k must be positive");
        wsum += w;
    }
    if (std::fabs(wsum - 1.0) > 1e-9)
        fail_constraint(f, "mixture weights theta_k must sum to 1");
    for (const auto& row : mix.sigma) {
        if (row.size() != d)
            throw Error(ErrorKind::ArityMismatch,
                        std::string(family_name(f)) + ": each sigma row needs d entries");
        for (double s : row)
            if (!(s > 0.0)) fail_constraint(f, "sigma_kj must be positive");
    }
    // Unit Frechet margins need the angular mean at the barycenter.
    for (std::size_t j = 0; j < d; ++j) {
        double m = 0.0;
        for (std::size_t k = 0; k < mix.weights.size(); ++k) {
            double tot = 0.0;
            for (double s : mix.sigma[k]) tot += s;
            m += mix.weights[k] * mix.sigma[k][j] / tot;
        }
        if (std::fabs(m - 1.0 / static_cast<double>(d)) > 1e-9)
            fail_constraint(f,
                            "mixture mean constraint sum_k theta_k sigma_kj / |sigma_k| = 1/d violated");
    }
}

} // namespace

const char* family_name(Family f) { return catalog().at(f).name; }

std::optional<Family> family_from_name(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (n == "gumbel") return Family::Logistic;
    for (const auto& [fam, info] : catalog())
        if (n == info.name) return fam;
    return std::nullopt;
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& [fam, info] : catalog()) out.push_back(info.name);
    out.push_back("gumbel");
    std::sort(out.begin(), out.end());
    return out;
}

bool has_generator(Family f) {
    switch (f) {
    case Family::Clayton:
    case Family::Amh:
    case Family::Frank:
    case Family::Joe:
    case Family::Nelsen9:
    case Family::Nelsen10:
    case Family::Nelsen11:
    case Family::Nelsen12:
    case Family::Nelsen13:
    case Family::Nelsen14:
    case Family::Nelsen15:
    case Family::Nelsen22:
    case Family::Logistic:
        return true;
    default:
        return false;
    }
}

bool is_extreme_value(Family f) {
    switch (f) {
    case Family::Logistic:
    case Family::Galambos:
    case Family::AsyLog:
    case Family::AsyNegLog:
    case Family::AsyMixed:
    case Family::HuslerReiss:
    case Family::TEv:
    case Family::Bilog:
    case Family::Dirichlet:
        return true;
    default:
        return false;
    }
}

bool is_elliptical(Family f) {
    return f == Family::Gaussian || f == Family::Student;
}

bool has_pickands(const CopulaSpec& spec) {
    if (!is_extreme_value(spec.family)) return false;
    if (spec.family == Family::Dirichlet) return false;
    if (spec.family == Family::HuslerReiss && spec.d > 2) return false;
    return true;
}

CopulaSpec validate_params(Family family, const ParamSet& p, std::size_t d) {
    if (d < 2)
        throw Error(ErrorKind::DimensionUnsupported, "copula dimension must be at least 2");

    CopulaSpec spec;
    spec.family = family;
    spec.d = d;
    spec.scalars = p.scalars;

    switch (family) {
    case Family::Clayton: {
        require_arity(family, p, 1);
        double th = p.scalars[0];
        if (th == 0.0 || th < -1.0)
            fail_constraint(family, "theta must lie in [-1, inf) excluding 0");
        if (d > 2 && th < 0.0)
            fail_dimension(family, "theta must be positive for d >= 3 (theta in (0, inf))");
        break;
    }
    case Family::Amh: {
        require_arity(family, p, 1);
        double th = p.scalars[0];
        if (!(th >= -1.0 && th < 1.0))
            fail_constraint(family, "theta must lie in [-1, 1)");
        if (d > 2 && th < 0.0)
            fail_dimension(family, "theta must lie in [0, 1) for d >= 3");
        break;
    }
    case Family::Frank: {
        require_arity(family, p, 1);
        double th = p.scalars[0];
        if (th == 0.0) fail_constraint(family, "theta must be nonzero");
        if (d > 2 && th < 0.0)
            fail_dimension(family, "theta must be positive for d >= 3");
        break;
    }
    case Family::Joe: {
        require_arity(family, p, 1);
        if (!(p.scalars[0] >= 1.0))
            fail_constraint(family, "theta must lie in [1, inf)");
        break;
    }
    case Family::Nelsen9:
    case Family::Nelsen10: {
        require_arity(family, p, 1);
        require_bivariate(family, d);
        if (!(p.scalars[0] > 0.0 && p.scalars[0] <= 1.0))
            fail_constraint(family, "theta must lie in (0, 1]");
        break;
    }
    case Family::Nelsen11: {
        require_arity(family, p, 1);
        require_bivariate(family, d);
        if (!(p.scalars[0] > 0.0 && p.scalars[0] <= 0.5))
            fail_constraint(family, "theta must lie in (0, 0.5]");
        break;
    }
    case Family::Nelsen12:
    case Family::Nelsen13: {
        require_arity(family, p, 1);
        require_bivariate(family, d);
        if (!(p.scalars[0] > 0.0))
            fail_constraint(family, "theta must lie in (0, inf)");
        break;
    }
    case Family::Nelsen14: {
        require_arity(family, p, 1);
        require_bivariate(family, d);
        if (!(p.scalars[0] > 1.0))
            fail_constraint(family, "theta must lie in (1, inf)");
        break;
    }
    case Family::Nelsen15: {
        require_arity(family, p, 1);
        require_bivariate(family, d);
        if (!(p.scalars[0] >= 1.0))
            fail_constraint(family, "theta must lie in [1, inf)");
        break;
    }
    case Family::Nelsen22: {
        require_arity(family, p, 1);
        require_bivariate(family, d);
        if (!(p.scalars[0] >= 0.0 && p.scalars[0] <= 1.0))
            fail_constraint(family, "theta must lie in [0, 1]");
        break;
    }
    case Family::Logistic: {
        require_arity(family, p, 1);
        if (!(p.scalars[0] > 0.0 && p.scalars[0] <= 1.0))
            fail_constraint(family, "theta must lie in (0, 1]");
        break;
    }
    case Family::Galambos: {
        require_arity(family, p, 1);
        require_bivariate(family, d);
        if (!(p.scalars[0] >= 0.0))
            fail_constraint(family, "theta must lie in [0, inf)");
        break;
    }
    case Family::AsyLog: {
        if (!p.subsets.empty()) {
            check_subsets(family, p.subsets, d);
            spec.subsets = p.subsets;
        } else {
            require_arity(family, p, 3);
            require_bivariate(family, d);
            double th = p.scalars[0], psi1 = p.scalars[1], psi2 = p.scalars[2];
            if (!(th >= 1.0)) fail_constraint(family, "theta must lie in [1, inf)");
            if (!(psi1 > 0.0 && psi1 <= 1.0) || !(psi2 > 0.0 && psi2 <= 1.0))
                fail_constraint(family, "psi1 and psi2 must lie in (0, 1]");
            // canonical cluster form: singletons plus the pair with alpha = 1/theta
            spec.subsets = {
                Subset{{0}, 1.0, {1.0 - psi1}},
                Subset{{1}, 1.0, {1.0 - psi2}},
                Subset{{0, 1}, 1.0 / th, {psi1, psi2}},
            };
        }
        break;
    }
    case Family::AsyNegLog: {
        require_arity(family, p, 3);
        require_bivariate(family, d);
        double th = p.scalars[0], psi1 = p.scalars[1], psi2 = p.scalars[2];
        if (!(th >= 0.0)) fail_constraint(family, "theta must lie in [0, inf)");
        if (!(psi1 > 0.0 && psi1 <= 1.0) || !(psi2 > 0.0 && psi2 <= 1.0))
            fail_constraint(family, "psi1 and psi2 must lie in (0, 1]");
        break;
    }
    case Family::AsyMixed: {
        require_arity(family, p, 2);
        require_bivariate(family, d);
        double th = p.scalars[0], psi1 = p.scalars[1];
        if (!(th >= 0.0)) fail_constraint(family, "theta must be nonnegative");
        if (!(th + 3.0 * psi1 >= 0.0)) fail_constraint(family, "theta + 3*psi1 must be nonnegative");
        if (!(th + psi1 <= 1.0)) fail_constraint(family, "theta + psi1 must not exceed 1");
        if (!(th + 2.0 * psi1 <= 1.0)) fail_constraint(family, "theta + 2*psi1 must not exceed 1");
        break;
    }
    case Family::HuslerReiss: {
        if (d == 2 && p.matrix.empty()) {
            require_arity(family, p, 1);
            if (!(p.scalars[0] > 0.0))
                fail_constraint(family, "theta must lie in (0, inf)");
            // variogram of the associated Gaussian increments: gamma01 = 4*theta^2
            spec.matrix = SquareMatrix(2);
            spec.matrix.at(0, 1) = spec.matrix.at(1, 0) = 4.0 * p.scalars[0] * p.scalars[0];
        } else {
            if (p.matrix.d != d)
                throw Error(ErrorKind::ArityMismatch,
                            "husler_reiss: variogram matrix must be d x d");
            check_variogram(family, p.matrix);
            spec.matrix = p.matrix;
        }
        break;
    }
    case Family::TEv: {
        require_arity(family, p, 2);
        require_bivariate(family, d);
        double rho = p.scalars[0], nu = p.scalars[1];
        if (!(rho > -1.0 && rho < 1.0))
            fail_constraint(family, "theta must lie in (-1, 1)");
        if (!(nu > 0.0)) fail_constraint(family, "psi1 (degrees of freedom) must be positive");
        break;
    }
    case Family::Bilog: {
        require_arity(family, p, 2);
        require_bivariate(family, d);
        if (!(p.scalars[0] > 0.0 && p.scalars[0] < 1.0) ||
            !(p.scalars[1] > 0.0 && p.scalars[1] < 1.0))
            fail_constraint(family, "alpha and beta must lie in (0, 1)");
        break;
    }
    case Family::Dirichlet: {
        check_dirichlet(family, p.mix, d);
        spec.mix = p.mix;
        break;
    }
    case Family::Gaussian:
    case Family::Student: {
        SquareMatrix sigma = p.matrix;
        std::size_t want_scalars = family == Family::Student ? 1 : 0;
        if (sigma.empty()) {
            // bivariate shorthand: a single correlation (plus df for Student)
            if (p.scalars.size() != want_scalars + 1)
                throw Error(ErrorKind::ArityMismatch,
                            std::string(family_name(family)) +
                                ": provide a correlation matrix, or rho" +
                                (family == Family::Student ? " and df" : "") +
                                " for the bivariate case");
            require_bivariate(family, d);
            double rho = p.scalars[0];
            if (!(rho > -1.0 && rho < 1.0))
                fail_constraint(family, "rho must lie in (-1, 1)");
            sigma = SquareMatrix::identity(2);
            sigma.at(0, 1) = sigma.at(1, 0) = rho;
            spec.scalars.assign(p.scalars.begin() + 1, p.scalars.end());
        } else {
            if (sigma.d != d)
                throw Error(ErrorKind::ArityMismatch,
                            std::string(family_name(family)) + ": matrix must be d x d");
            if (p.scalars.size() != want_scalars)
                throw Error(ErrorKind::ArityMismatch,
                            std::string(family_name(family)) + ": unexpected scalar parameters");
        }
        if (family == Family::Student && !(spec.scalars.at(0) > 0.0))
            fail_constraint(family, "degrees of freedom theta must be positive");
        spec.matrix = normalize_correlation(family, sigma, &spec.sigma_was_normalized);
        break;
    }
    }
    return spec;
}

} // namespace copulaforge
