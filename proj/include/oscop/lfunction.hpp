#pragma once

#include <functional>
#include <string>

#include "oscop/support.hpp"

namespace oscop {

// Positive function L driving a copula construction: the survival factor
// of the tabulated G is exp(-∫ dz/L(z)). Families carry their derivative
// analytically.
struct LFunction {
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  std::string family;
  double param = 0.0;

  // L(u) = (1-u)/k, the power family generator.
  static LFunction linear(double k);
  // L(u) = (1-u)(1-a u).
  static LFunction quadratic(double a);
  // L(u) = H(u) - u; reproduces the prescribed-support main construction.
  static LFunction from_support(const SupportFunction& h);
  static LFunction custom(std::function<double(double)> eval,
                          std::function<double(double)> deriv);
};

}  // namespace oscop
