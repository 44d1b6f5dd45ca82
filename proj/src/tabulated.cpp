#include "oscop/tabulated.hpp"

#include <algorithm>
#include <cmath>

#include "oscop/errors.hpp"
#include "oscop/roots.hpp"

namespace oscop {

namespace {

// Derivative at xs[at] of the cubic through the four points starting at j.
double lagrange4_derivative(const std::vector<double>& xs,
                            const std::vector<double>& ys, std::size_t j,
                            std::size_t at) {
  double sum = 0.0;
  for (std::size_t i = j; i < j + 4; ++i) {
    double denom = 1.0;
    for (std::size_t m = j; m < j + 4; ++m)
      if (m != i) denom *= xs[i] - xs[m];
    // d/dx of the Lagrange basis l_i at xs[at].
    double dl = 0.0;
    for (std::size_t m = j; m < j + 4; ++m) {
      if (m == i) continue;
      double prod = 1.0;
      for (std::size_t r = j; r < j + 4; ++r) {
        if (r == i || r == m) continue;
        prod *= xs[at] - xs[r];
      }
      dl += prod;
    }
    sum += ys[i] * dl / denom;
  }
  return sum;
}

}  // namespace

TabulatedMonotone::TabulatedMonotone(std::vector<double> knots_x,
                                     std::vector<double> knots_y)
    : xs_(std::move(knots_x)), ys_(std::move(knots_y)) {
  const std::size_t n = xs_.size();
  if (n < 2 || ys_.size() != n)
    throw DomainError("TabulatedMonotone: need matching knot arrays, n >= 2");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(xs_[i] < xs_[i + 1]))
      throw DomainError("TabulatedMonotone: knots_x must be strictly increasing");

  double span = 0.0;
  for (double y : ys_) span = std::max(span, std::fabs(y));
  const double slack = 1e-13 * std::max(1.0, span);
  increasing_ = ys_.back() >= ys_.front();
  const double dir = increasing_ ? 1.0 : -1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double step = dir * (ys_[i + 1] - ys_[i]);
    if (step < -slack)
      throw NotMonotone("TabulatedMonotone: knot values are not monotone");
    if (step < 0.0) ys_[i + 1] = ys_[i];  // flatten sub-slack noise
  }

  slopes_.resize(n);
  if (n < 4) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      slopes_[i] = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    slopes_[n - 1] = slopes_[n - 2];
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = (i < 2) ? 0 : std::min(i - 1, n - 4);
      slopes_[i] = lagrange4_derivative(xs_, ys_, j, i);
    }
  }

  // Fritsch-Carlson limiter. Wrong-signed slopes go to zero; slope pairs
  // outside the monotonicity circle are scaled back onto it. Scaling only
  // shrinks slopes, so earlier panels stay valid.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    if (d == 0.0) {
      slopes_[i] = 0.0;
      slopes_[i + 1] = 0.0;
      continue;
    }
    double alpha = slopes_[i] / d;
    double beta = slopes_[i + 1] / d;
    if (alpha < 0.0) {
      slopes_[i] = 0.0;
      alpha = 0.0;
    }
    if (beta < 0.0) {
      slopes_[i + 1] = 0.0;
      beta = 0.0;
    }
    const double r2 = alpha * alpha + beta * beta;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      slopes_[i] = tau * alpha * d;
      slopes_[i + 1] = tau * beta * d;
    }
  }
}

double TabulatedMonotone::y_lo() const {
  return increasing_ ? ys_.front() : ys_.back();
}

double TabulatedMonotone::y_hi() const {
  return increasing_ ? ys_.back() : ys_.front();
}

std::size_t TabulatedMonotone::panel(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (i == 0) return 0;
  if (i >= xs_.size()) return xs_.size() - 2;
  return i - 1;
}

double TabulatedMonotone::eval(double x) const {
  x = std::clamp(x, xs_.front(), xs_.back());
  const std::size_t i = panel(x);
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] +
         h11 * h * slopes_[i + 1];
}

double TabulatedMonotone::derivative(double x) const {
  x = std::clamp(x, xs_.front(), xs_.back());
  const std::size_t i = panel(x);
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t;
  const double d00 = (6.0 * t2 - 6.0 * t) / h;
  const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
  const double d01 = (-6.0 * t2 + 6.0 * t) / h;
  const double d11 = 3.0 * t2 - 2.0 * t;
  return d00 * ys_[i] + d10 * slopes_[i] + d01 * ys_[i + 1] +
         d11 * slopes_[i + 1];
}

double TabulatedMonotone::inverse(double y) const {
  const double lo = y_lo(), hi = y_hi();
  const double slack = 1e-12 * std::max(1.0, std::fabs(hi) + std::fabs(lo));
  if (y < lo - slack || y > hi + slack)
    throw DomainError("TabulatedMonotone::inverse: value outside range");
  y = std::clamp(y, lo, hi);

  // Locate the knot panel containing y, then solve within it.
  std::size_t i;
  if (increasing_) {
    auto it = std::upper_bound(ys_.begin(), ys_.end(), y);
    i = (it == ys_.begin()) ? 0 : static_cast<std::size_t>(it - ys_.begin()) - 1;
  } else {
    auto it = std::upper_bound(ys_.begin(), ys_.end(), y,
                               [](double a, double b) { return a > b; });
    i = (it == ys_.begin()) ? 0 : static_cast<std::size_t>(it - ys_.begin()) - 1;
  }
  if (i >= xs_.size() - 1) i = xs_.size() - 2;
  if (ys_[i] == y) return xs_[i];
  if (ys_[i + 1] == y) return xs_[i + 1];
  if (ys_[i] == ys_[i + 1]) return xs_[i];  // flat panel

  const double xtol = 1e-14 * std::max(1.0, std::fabs(xs_.back()) +
                                                std::fabs(xs_.front()));
  return find_root([&](double x) { return eval(x) - y; }, xs_[i], xs_[i + 1],
                   xtol);
}

TabulatedMonotone tabulate_monotone(const std::function<double(double)>& f,
                                    double x_lo, double x_hi, int n_knots) {
  if (n_knots < 16)
    throw DomainError("tabulate_monotone: n_knots must be >= 16");
  if (!(x_lo < x_hi)) throw DomainError("tabulate_monotone: x_lo < x_hi");
  std::vector<double> xs(n_knots), ys(n_knots);
  for (int i = 0; i < n_knots; ++i) {
    xs[i] = x_lo + (x_hi - x_lo) * i / (n_knots - 1.0);
    ys[i] = f(xs[i]);
    if (!std::isfinite(ys[i]))
      throw NonFinite("tabulate_monotone: f returned a non-finite value");
  }
  return TabulatedMonotone(std::move(xs), std::move(ys));
}

}  // namespace oscop
