#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "copulaforge/types.hpp"

namespace copulaforge {

// Nondecreasing quantile map (0,1) -> R.
using QuantileFn = std::function<double(double)>;

enum class MarginKind { Uniform, StdNormal, StdExponential };

QuantileFn margin_quantile(MarginKind kind);
std::optional<MarginKind> margin_from_name(const std::string& name);
const char* margin_name(MarginKind kind);

// Applies one quantile function per column; the copula (all rank statistics)
// of the output equals that of the input.
SampleMatrix apply_margins(const SampleMatrix& u, const std::vector<QuantileFn>& q);

} // namespace copulaforge
