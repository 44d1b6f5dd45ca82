#pragma once

#include <functional>
#include <vector>

namespace oscop {

// Monotone function represented by a knot table with a shape-preserving
// cubic Hermite interpolant. Knot slopes come from 4-point polynomial
// differentiation and are then limited Fritsch-Carlson style, so the
// interpolant is monotone on every panel. Immutable after construction.
class TabulatedMonotone {
 public:
  // knots_x strictly increasing; knots_y monotone in one direction
  // (violations beyond 1e-13 of the value span raise NotMonotone).
  TabulatedMonotone(std::vector<double> knots_x, std::vector<double> knots_y);

  double eval(double x) const;        // clamps x to [x_lo, x_hi]
  double derivative(double x) const;  // interpolant derivative
  double inverse(double y) const;     // bracketed solve of eval(x) = y

  bool increasing() const { return increasing_; }
  double x_lo() const { return xs_.front(); }
  double x_hi() const { return xs_.back(); }
  double y_lo() const;
  double y_hi() const;
  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& knots_x() const { return xs_; }
  const std::vector<double>& knots_y() const { return ys_; }

 private:
  std::size_t panel(double x) const;

  std::vector<double> xs_, ys_, slopes_;
  bool increasing_ = true;
};

// Samples f at n_knots uniform points on [x_lo, x_hi] and tabulates it.
// Requires n_knots >= 16; throws NotMonotone when the samples are not
// monotone.
TabulatedMonotone tabulate_monotone(const std::function<double(double)>& f,
                                    double x_lo, double x_hi, int n_knots);

}  // namespace oscop
