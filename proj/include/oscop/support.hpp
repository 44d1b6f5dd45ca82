#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace oscop {

enum class HFamily { gaussian_shift, piecewise_linear, custom };

// Constraint curve H of the hypograph v <= H(u): strictly increasing
// bijection of [0,1] with H(u) >= u, opposite-symmetric in the sense
// H(u) + H^{-1}(1-u) = 1, and diagonal-crossing point u0 in (0,1/2)
// solving H(u0) = 1 - u0. Immutable and freely shareable.
class SupportFunction {
 public:
  double operator()(double u) const { return eval_(u); }
  double inverse(double v) const { return inverse_(v); }
  double derivative(double u) const { return derivative_(u); }

  double u0() const { return u0_; }
  HFamily family() const { return family_; }
  double delta() const { return delta_; }  // gaussian_shift only
  std::string family_name() const;

  // H(u) = Phi(Phi^{-1}(u) + delta). The derivative is the density ratio
  // phi(Phi^{-1}(u)+delta)/phi(Phi^{-1}(u)) = exp(-delta(Phi^{-1}(u)+delta/2));
  // u0 = Phi(-delta/2).
  static SupportFunction gaussian_shift(double delta);

  // Two-segment linear curve through (u0, 1-u0).
  static SupportFunction piecewise_linear(double u0);

  // Caller-supplied curve; u0 is located by root finding when absent.
  static SupportFunction custom(std::function<double(double)> eval,
                                std::function<double(double)> inverse,
                                std::function<double(double)> derivative,
                                std::optional<double> u0 = std::nullopt);

 private:
  SupportFunction() = default;

  std::function<double(double)> eval_, inverse_, derivative_;
  double u0_ = 0.0;
  double delta_ = 0.0;
  HFamily family_ = HFamily::custom;
};

struct SupportViolation {
  std::string check;
  double location;
  double residual;
};

// Probes the structural hypotheses on a grid: the reflection identity
// H(u)+H^{-1}(1-u)=1, H(u) >= u, strict monotonicity, H(u0) = 1-u0,
// derivative vs central differences, and finiteness of the integral of
// 1/(H(z)-z) up to 1-1e-6. Returns the violations found (never throws).
std::vector<SupportViolation> validate_support(const SupportFunction& h,
                                               int n_probe = 1000);

}  // namespace oscop
