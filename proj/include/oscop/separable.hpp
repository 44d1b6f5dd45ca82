#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "oscop/copula.hpp"
#include "oscop/cumulative.hpp"
#include "oscop/lfunction.hpp"
#include "oscop/quadrature.hpp"

namespace oscop {

// Monotone factor G on [0,1] with G(0) = 0 and G' >= 0, together with the
// generator L(u) = G(1-u)/G'(1-u) when it is analytically available.
class GFunction {
 public:
  enum class Family { linear, power, sine, from_l, custom };

  double operator()(double v) const;
  double derivative(double v) const;
  double inverse(double y) const;  // y in [0, G(1)]

  bool has_l() const { return static_cast<bool>(l_eval_); }
  double l(double u) const;
  double l_prime(double u) const;

  Family family() const { return family_; }
  double param() const { return param_; }
  std::string name() const;
  const CumulativeIntegral* b_table() const { return b_.get(); }
  const LFunction* l_function() const { return lfun_ ? &*lfun_ : nullptr; }

  static GFunction linear();         // G(v) = v
  static GFunction power(double k);  // G(v) = v^k, k >= 1
  static GFunction sine();           // G(v) = sin(pi v / 2)
  // G(v) = exp(-∫_0^{1-v} dz/L(z)), tabulated through a checkpointed
  // cumulative integral of 1/L.
  static GFunction from_l(const LFunction& l, double eps = kCopulaEps,
                          int knots = 400);
  static GFunction custom(std::function<double(double)> eval,
                          std::function<double(double)> deriv,
                          std::function<double(double)> inverse,
                          std::function<double(double)> l = {},
                          std::function<double(double)> l_prime = {});

 private:
  Family family_ = Family::custom;
  double param_ = 0.0;
  std::function<double(double)> eval_, deriv_, inverse_;
  std::function<double(double)> l_eval_, l_prime_;
  std::shared_ptr<CumulativeIntegral> b_;  // from_l only
  std::optional<LFunction> lfun_;
};

// Absolutely continuous opposite-symmetric copula with density
// F'(u)G'(v) on the lower triangle u+v <= 1, mirrored above it.
class SeparableCopula final : public BivariateCopula {
 public:
  enum class Provenance { from_G, from_L, closed_form };

  // Solves the construction ODE for F by the integrating-factor formula
  // F(u) = G(1-u) ∫_0^u dz/G(1-z)^2 and verifies positivity of F'.
  // u_star overrides the numerically located split point of the
  // positivity condition.
  static SeparableCopula from_G(GFunction g,
                                std::optional<double> u_star = std::nullopt,
                                int knots = 400);
  static SeparableCopula from_L(const LFunction& l,
                                std::optional<double> u_star = std::nullopt,
                                int knots = 400);

  static SeparableCopula independence();
  static SeparableCopula example_power(double k);  // closed-form F for G=v^k
  static SeparableCopula example_sine();           // closed-form F for G=sin

  double cdf(double u, double v) const override;
  double density(double u, double v) const override;
  double conditional_cdf(double u, double v) const override;
  double invert_conditional(double u, double t) const override;
  std::vector<double> v_breakpoints(double u) const override;
  std::string describe() const override;

  double f(double u) const;
  double f_prime(double u) const;
  double g(double v) const { return g_(v); }
  double g_prime(double v) const { return g_.derivative(v); }
  const GFunction& g_function() const { return g_; }
  double u_star() const { return u_star_; }
  Provenance provenance() const { return prov_; }

 private:
  SeparableCopula(GFunction g, Provenance prov);

  void build_tables(int knots);
  void check_positivity();

  GFunction g_;
  Provenance prov_;
  std::shared_ptr<CumulativeIntegral> integ_;      // ∫_0^u dz/G(1-z)^2
  std::shared_ptr<CumulativeIntegral> psi_integ_;  // ∫_0^u (1+L')/G(1-z)^2
  double l0_over_g1_sq_ = 0.0;
  bool theta_available_ = false;
  double u_star_ = 0.0;
  std::function<double(double)> closed_f_, closed_fp_;
  std::string label_;
};

}  // namespace oscop
