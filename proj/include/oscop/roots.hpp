#pragma once

#include <functional>

namespace oscop {

// Bracketed root finding on [lo, hi] by Brent's method (bisection plus
// secant/inverse-quadratic steps, bracket always maintained). Requires
// g(lo) and g(hi) of opposite sign or one of them zero; throws NoBracket
// otherwise. Returns x with bracket width <= tol + machine slack.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol = 1e-13);

}  // namespace oscop
