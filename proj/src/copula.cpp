#include "oscop/copula.hpp"

#include <cmath>

#include "oscop/errors.hpp"

namespace oscop {

std::vector<double> BivariateCopula::v_breakpoints(double) const { return {}; }

std::vector<double> BivariateCopula::u_breakpoints() const { return {}; }

double opposite_diagonal(const BivariateCopula& c, double u) {
  if (!(u >= 0.0 && u <= 1.0))
    throw DomainError("opposite_diagonal: u must lie in [0,1]");
  return c.cdf(u, 1.0 - u);
}

double l_from_omega(double omega, double omega_prime, double u) {
  const double denom = 1.0 - omega_prime;
  if (std::fabs(denom) < 1e-12)
    throw DegenerateDiagonal("l_from_omega: omega'(u) too close to 1 at u=" +
                             std::to_string(u));
  return 2.0 * omega / denom;
}

}  // namespace oscop
