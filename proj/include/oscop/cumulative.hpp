#pragma once

#include <functional>
#include <vector>

#include "oscop/quadrature.hpp"

namespace oscop {

// Knot layout for cumulative tables: n_base uniform points on [lo, hi]
// plus geometric clusters toward both endpoints (down to ~1e-13 of the
// span), where the integrands of interest steepen.
std::vector<double> refined_grid(double lo, double hi, int n_base,
                                 int n_tail = 44);

// Cumulative integral I(x) = ∫_{lo}^{x} f(z) dz evaluated through
// checkpoint values at the knots plus a short adaptive panel quadrature
// from the nearest checkpoint. Deterministic and accurate to roughly the
// panel quadrature tolerance everywhere on [lo, hi].
class CumulativeIntegral {
 public:
  CumulativeIntegral(std::function<double(double)> f, std::vector<double> knots,
                     QuadratureConfig cfg = {1e-12, 1e-15, 400});

  double operator()(double x) const;  // clamps x to [lo, hi]
  // Solves I(x) = target; requires f > 0 (I strictly increasing).
  double inverse(double target) const;

  double lo() const { return xs_.front(); }
  double hi() const { return xs_.back(); }
  double total() const { return vals_.back(); }
  const std::vector<double>& knots() const { return xs_; }
  const std::vector<double>& values() const { return vals_; }

 private:
  std::function<double(double)> f_;
  std::vector<double> xs_, vals_;
  QuadratureConfig cfg_;
};

// Signed magnitude in log space: value = sign * exp(lg).
struct SLog {
  double lg;
  double sign;  // -1, 0, +1

  static SLog zero() { return {-1e308, 0.0}; }
  static SLog from(double v);
  double to_double() const;
};

SLog slog_add(SLog a, SLog b);
SLog slog_mul_exp(SLog a, double delta);  // a * exp(delta)

// Table of T(w) = ∫_{lo}^{w} g(z) * exp(scale * B(z)) dz held in signed
// log space, for integrands whose exponential factor overflows double.
// B must be nondecreasing (it is a cumulative integral of a positive f).
class ExpIntegralTable {
 public:
  ExpIntegralTable(std::function<double(double)> g, double scale,
                   const CumulativeIntegral& b, std::vector<double> knots,
                   QuadratureConfig cfg = {1e-12, 1e-15, 400});

  SLog eval(double w) const;  // clamps w to [lo, hi]
  double lo() const { return xs_.front(); }
  double hi() const { return xs_.back(); }

 private:
  SLog panel_part(double a, double w) const;

  std::function<double(double)> g_;
  double scale_;
  const CumulativeIntegral* b_;
  std::vector<double> xs_;
  std::vector<SLog> vals_;
  QuadratureConfig cfg_;
};

}  // namespace oscop
