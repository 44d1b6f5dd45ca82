#pragma once

#include <functional>

namespace oscop {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
};

// Adaptive Gauss-Kronrod 15(7) quadrature of f over [a, b].
//
// The Kronrod nodes are interior, so f is never evaluated at a or b;
// integrable endpoint singularities are handled by bisection toward the
// endpoint. Throws NonConvergence when the subdivision budget runs out
// before |error| <= max(abs_tol, rel_tol * |I|), and NonFinite when f
// returns NaN/Inf at an interior node.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

}  // namespace oscop
