#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "copulaforge/types.hpp"

namespace copulaforge {

enum class Family {
    Clayton,
    Amh,
    Frank,
    Joe,
    Nelsen9,
    Nelsen10,
    Nelsen11,
    Nelsen12,
    Nelsen13,
    Nelsen14,
    Nelsen15,
    Nelsen22,
    Logistic, // Gumbel: the one model that is both Archimedean and extreme-value
    Galambos,
    AsyLog,
    AsyNegLog,
    AsyMixed,
    HuslerReiss,
    TEv,
    Bilog,
    Dirichlet,
    Gaussian,
    Student,
};

// One cluster of the asymmetric logistic model: the coordinates it covers,
// its dependence exponent alpha in (0,1] and one weight per coordinate.
struct Subset {
    std::vector<std::size_t> coords;
    double alpha = 1.0;
    std::vector<double> weights;
};

// Dirichlet mixture: m component weights and an m x d shape matrix.
struct DirichletMix {
    std::vector<double> weights;
    std::vector<std::vector<double>> sigma;

    bool empty() const { return weights.empty(); }
};

// Raw parameters handed to validate_params.
struct ParamSet {
    std::vector<double> scalars;
    SquareMatrix matrix;          // correlation (elliptical) or variogram (Husler-Reiss d>2)
    std::vector<Subset> subsets;  // asymmetric logistic, general form
    DirichletMix mix;
};

// A validated copula handle: family + dimension + canonical parameters.
struct CopulaSpec {
    Family family = Family::Clayton;
    std::size_t d = 2;
    std::vector<double> scalars;
    SquareMatrix matrix;
    std::vector<Subset> subsets;
    DirichletMix mix;
    bool sigma_was_normalized = false; // elliptical input had non-unit diagonal

    double theta() const { return scalars.at(0); }
};

// Checks family constraints (parameter ranges, dimension support, weight sums,
// positive definiteness) and returns the validated spec. Error messages name
// the violated constraint.
CopulaSpec validate_params(Family family, const ParamSet& params, std::size_t d);

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
std::vector<std::string> family_names();

bool has_generator(Family f);                  // Archimedean view available
bool has_pickands(const CopulaSpec& spec);     // analytic A available
bool is_extreme_value(Family f);
bool is_elliptical(Family f);

} // namespace copulaforge
