#include "oscop/cumulative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "oscop/errors.hpp"
#include "oscop/roots.hpp"

namespace oscop {

std::vector<double> refined_grid(double lo, double hi, int n_base, int n_tail) {
  if (!(lo < hi)) throw DomainError("refined_grid: lo < hi required");
  if (n_base < 2) n_base = 2;
  std::set<double> pts;
  for (int i = 0; i < n_base; ++i)
    pts.insert(lo + (hi - lo) * i / (n_base - 1.0));
  const double span = hi - lo;
  double frac = 0.1;
  for (int k = 0; k < n_tail; ++k) {
    pts.insert(lo + span * frac);
    pts.insert(hi - span * frac);
    frac *= 0.5;
    if (span * frac < 1e-13 * span) break;
  }
  std::vector<double> out(pts.begin(), pts.end());
  return out;
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f,
                                       std::vector<double> knots,
                                       QuadratureConfig cfg)
    : f_(std::move(f)), xs_(std::move(knots)), cfg_(cfg) {
  if (xs_.size() < 2)
    throw DomainError("CumulativeIntegral: need at least two knots");
  vals_.resize(xs_.size());
  vals_[0] = 0.0;
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    const double piece = integrate(f_, xs_[i], xs_[i + 1], cfg_);
    vals_[i + 1] = vals_[i] + piece;
    if (!std::isfinite(vals_[i + 1]))
      throw IntegralDiverged("CumulativeIntegral: non-finite cumulative value");
  }
}

double CumulativeIntegral::operator()(double x) const {
  x = std::clamp(x, xs_.front(), xs_.back());
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = (it == xs_.begin()) ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
  if (i >= xs_.size() - 1) i = xs_.size() - 2;
  if (x == xs_[i]) return vals_[i];
  if (x == xs_[i + 1]) return vals_[i + 1];
  return vals_[i] + integrate(f_, xs_[i], x, cfg_);
}

double CumulativeIntegral::inverse(double target) const {
  if (target <= 0.0) return xs_.front();
  if (target >= vals_.back()) return xs_.back();
  auto it = std::upper_bound(vals_.begin(), vals_.end(), target);
  std::size_t i = (it == vals_.begin()) ? 0 : static_cast<std::size_t>(it - vals_.begin()) - 1;
  if (i >= xs_.size() - 1) i = xs_.size() - 2;
  const double xtol = 1e-15 * std::max(1.0, std::fabs(xs_.back() - xs_.front()));
  return find_root([&](double x) { return (*this)(x)-target; }, xs_[i],
                   xs_[i + 1], xtol);
}

SLog SLog::from(double v) {
  if (v == 0.0 || !std::isfinite(v)) return SLog::zero();
  return {std::log(std::fabs(v)), v > 0.0 ? 1.0 : -1.0};
}

double SLog::to_double() const {
  if (sign == 0.0 || lg < -745.0) return 0.0;
  if (lg > 709.0) return sign * std::numeric_limits<double>::infinity();
  return sign * std::exp(lg);
}

SLog slog_add(SLog a, SLog b) {
  if (a.sign == 0.0) return b;
  if (b.sign == 0.0) return a;
  if (a.lg < b.lg) std::swap(a, b);
  const double r = std::exp(b.lg - a.lg);  // <= 1
  if (a.sign == b.sign) return {a.lg + std::log1p(r), a.sign};
  const double m = 1.0 - r;
  if (m <= 0.0) return SLog::zero();  // exact cancellation
  return {a.lg + std::log(m), a.sign};
}

SLog slog_mul_exp(SLog a, double delta) {
  if (a.sign == 0.0) return a;
  return {a.lg + delta, a.sign};
}

ExpIntegralTable::ExpIntegralTable(std::function<double(double)> g, double scale,
                                   const CumulativeIntegral& b,
                                   std::vector<double> knots,
                                   QuadratureConfig cfg)
    : g_(std::move(g)), scale_(scale), b_(&b), xs_(std::move(knots)), cfg_(cfg) {
  if (xs_.size() < 2)
    throw DomainError("ExpIntegralTable: need at least two knots");
  vals_.resize(xs_.size());
  vals_[0] = SLog::zero();
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    vals_[i + 1] = slog_add(vals_[i], panel_part(xs_[i], xs_[i + 1]));
}

SLog ExpIntegralTable::panel_part(double a, double w) const {
  if (w <= a) return SLog::zero();
  // The exponent is maximal at the right end because B is nondecreasing
  // (scale < 0 would flip this; both ends are checked for safety).
  const double shift =
      std::max(scale_ * (*b_)(a), scale_ * (*b_)(w));
  const double raw = integrate(
      [&](double z) { return g_(z) * std::exp(scale_ * (*b_)(z)-shift); }, a,
      w, cfg_);
  if (raw == 0.0) return SLog::zero();
  return {shift + std::log(std::fabs(raw)), raw > 0.0 ? 1.0 : -1.0};
}

SLog ExpIntegralTable::eval(double w) const {
  w = std::clamp(w, xs_.front(), xs_.back());
  auto it = std::upper_bound(xs_.begin(), xs_.end(), w);
  std::size_t i = (it == xs_.begin()) ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
  if (i >= xs_.size() - 1) i = xs_.size() - 2;
  if (w == xs_[i]) return vals_[i];
  if (w == xs_[i + 1]) return vals_[i + 1];
  return slog_add(vals_[i], panel_part(xs_[i], w));
}

}  // namespace oscop
