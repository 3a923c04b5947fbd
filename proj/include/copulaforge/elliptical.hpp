#pragma once

#include "copulaforge/families.hpp"
#include "copulaforge/rng.hpp"
#include "copulaforge/types.hpp"

namespace copulaforge {

// U = Phi(L z) rowwise with L the Cholesky factor of the correlation matrix.
SampleMatrix sample_gaussian(const CopulaSpec& spec, std::size_t n, RngStream& rng);

// U_j = T_df(sqrt(df/W) (L z)_j) with W chi-square(df).
SampleMatrix sample_student(const CopulaSpec& spec, std::size_t n, RngStream& rng);

} // namespace copulaforge
