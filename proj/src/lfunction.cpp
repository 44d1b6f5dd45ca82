#include "oscop/lfunction.hpp"

#include "oscop/errors.hpp"

namespace oscop {

LFunction LFunction::linear(double k) {
  if (!(k > 0.0)) throw DomainError("LFunction::linear: k must be positive");
  LFunction l;
  l.family = "linear";
  l.param = k;
  l.eval = [k](double u) { return (1.0 - u) / k; };
  l.deriv = [k](double) { return -1.0 / k; };
  return l;
}

LFunction LFunction::quadratic(double a) {
  if (!(a >= 0.0 && a < 1.0))
    throw DomainError("LFunction::quadratic: a must lie in [0,1)");
  LFunction l;
  l.family = "quadratic";
  l.param = a;
  l.eval = [a](double u) { return (1.0 - u) * (1.0 - a * u); };
  l.deriv = [a](double u) { return -1.0 - a + 2.0 * a * u; };
  return l;
}

LFunction LFunction::from_support(const SupportFunction& h) {
  LFunction l;
  l.family = "support_residual";
  l.eval = [h](double u) { return h(u) - u; };
  l.deriv = [h](double u) { return h.derivative(u) - 1.0; };
  return l;
}

LFunction LFunction::custom(std::function<double(double)> eval,
                            std::function<double(double)> deriv) {
  LFunction l;
  l.family = "custom";
  l.eval = std::move(eval);
  l.deriv = std::move(deriv);
  return l;
}

}  // namespace oscop
