#pragma once

#include <functional>

namespace copulaforge {

// Brent's method on a sign-changing bracket [lo, hi]. Stops when the bracket
// width or |f(x)| falls below tol. Throws Error(NoBracket) when f(lo) and
// f(hi) have the same sign and Error(MaxIterExceeded) past 200 iterations.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-12);

} // namespace copulaforge
