#pragma once

#include <functional>
#include <string>
#include <vector>

#include "copulaforge/families.hpp"

namespace copulaforge {

struct PropertyResult {
    std::string name;
    bool pass = false;
    double worst = 0.0; // measured worst-case deviation
    std::string detail;
};

// Generator checks on a grid: phi(1)=0, strict monotonicity, convexity,
// phi_inv round trip, phi_prime vs central finite differences.
std::vector<PropertyResult> check_generator_properties(const CopulaSpec& spec);

// Pickands checks: vertex values, max/1 bounds, bivariate convexity and
// derivative consistency; simplex-grid bounds for d >= 3.
std::vector<PropertyResult> check_pickands_properties(const CopulaSpec& spec);

// Grid checks on a raw bivariate A (and optional A'), reusable on fixtures.
std::vector<PropertyResult> check_pickands_grid(
    const std::function<double(double)>& a,
    const std::function<double(double)>& a_prime, bool has_prime);

// Univariate CDF symmetry for the elliptical building blocks, plus the
// Student -> normal limit.
std::vector<PropertyResult> check_elliptical_properties(const CopulaSpec& spec);

// Dispatches to every suite that applies to the family.
std::vector<PropertyResult> run_property_suite(const CopulaSpec& spec);

} // namespace copulaforge
