#pragma once

#include <string>
#include <vector>

namespace oscop {

// Copula-domain clamp applied by every evaluation: interior arguments are
// restricted to [kCopulaEps, 1 - kCopulaEps]; exact 0/1 arguments take
// their boundary values directly.
inline constexpr double kCopulaEps = 1e-11;

// Absolutely continuous bivariate copula with evaluable CDF, density,
// conditional CDF C'_u and its inverse in v. Implementations are
// immutable after construction and safe to share across threads.
class BivariateCopula {
 public:
  virtual ~BivariateCopula() = default;

  virtual double cdf(double u, double v) const = 0;
  virtual double density(double u, double v) const = 0;
  // C'_u(u, v) = P(V <= v | U = u); nondecreasing in v, 0 at v=0, 1 at v=1.
  virtual double conditional_cdf(double u, double v) const = 0;
  // Solves conditional_cdf(u, v) = t for v.
  virtual double invert_conditional(double u, double t) const = 0;

  // Points where the density/conditional is only piecewise smooth; used to
  // split quadratures. Sorted, interior to (0,1).
  virtual std::vector<double> v_breakpoints(double u) const;
  virtual std::vector<double> u_breakpoints() const;

  virtual std::string describe() const = 0;
};

// Opposite diagonal section omega(u) = C(u, 1-u).
double opposite_diagonal(const BivariateCopula& c, double u);

// Recovers the generator L(u) = 2*omega(u) / (1 - omega'(u)) from a
// diagonal section value/derivative pair. Throws DegenerateDiagonal when
// |1 - omega'| < 1e-12.
double l_from_omega(double omega, double omega_prime, double u);

}  // namespace oscop
