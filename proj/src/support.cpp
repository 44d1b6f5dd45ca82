#include "oscop/support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oscop/errors.hpp"
#include "oscop/normal.hpp"
#include "oscop/quadrature.hpp"
#include "oscop/roots.hpp"

namespace oscop {

namespace {
constexpr double kEps = 1e-11;
}

std::string SupportFunction::family_name() const {
  switch (family_) {
    case HFamily::gaussian_shift:
      return "gaussian_shift";
    case HFamily::piecewise_linear:
      return "piecewise_linear";
    default:
      return "custom";
  }
}

SupportFunction SupportFunction::gaussian_shift(double delta) {
  if (!(delta > 0.0))
    throw DomainError("gaussian_shift: delta must be positive");
  SupportFunction h;
  h.family_ = HFamily::gaussian_shift;
  h.delta_ = delta;
  h.u0_ = normal_cdf(-delta / 2.0);
  h.eval_ = [delta](double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return normal_cdf(normal_quantile(u) + delta);
  };
  h.inverse_ = [delta](double v) {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    return normal_cdf(normal_quantile(v) - delta);
  };
  h.derivative_ = [delta](double u) {
    if (u <= 0.0) return std::numeric_limits<double>::infinity();
    if (u >= 1.0) return 0.0;
    return std::exp(-delta * (normal_quantile(u) + delta / 2.0));
  };
  return h;
}

SupportFunction SupportFunction::piecewise_linear(double u0) {
  if (!(u0 > 0.0 && u0 < 0.5))
    throw DomainError("piecewise_linear: u0 must lie in (0, 1/2)");
  SupportFunction h;
  h.family_ = HFamily::piecewise_linear;
  h.u0_ = u0;
  h.eval_ = [u0](double u) {
    u = std::clamp(u, 0.0, 1.0);
    return u <= u0 ? (1.0 - u0) * u / u0 : 1.0 - u0 * (1.0 - u) / (1.0 - u0);
  };
  h.inverse_ = [u0](double v) {
    v = std::clamp(v, 0.0, 1.0);
    return v <= 1.0 - u0 ? u0 * v / (1.0 - u0) : 1.0 - (1.0 - v) * (1.0 - u0) / u0;
  };
  h.derivative_ = [u0](double u) {
    return u <= u0 ? (1.0 - u0) / u0 : u0 / (1.0 - u0);
  };
  return h;
}

SupportFunction SupportFunction::custom(std::function<double(double)> eval,
                                        std::function<double(double)> inverse,
                                        std::function<double(double)> derivative,
                                        std::optional<double> u0) {
  SupportFunction h;
  h.family_ = HFamily::custom;
  h.eval_ = std::move(eval);
  h.inverse_ = std::move(inverse);
  h.derivative_ = std::move(derivative);
  if (u0) {
    h.u0_ = *u0;
  } else {
    // Fixed point of u -> 1 - H(u); out-of-(0,1/2) roots are left for
    // validate_support to report.
    try {
      h.u0_ = find_root([&](double u) { return h.eval_(u) - (1.0 - u); }, kEps,
                        1.0 - kEps, 1e-13);
    } catch (const NoBracket&) {
      h.u0_ = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return h;
}

std::vector<SupportViolation> validate_support(const SupportFunction& h,
                                               int n_probe) {
  if (n_probe < 100) n_probe = 100;
  std::vector<SupportViolation> out;
  const double u0 = h.u0();

  if (!(u0 > 0.0 && u0 < 0.5) || !std::isfinite(u0)) {
    out.push_back({"u0 in (0,1/2)", u0, std::fabs(u0 - 0.25)});
  } else {
    const double r = std::fabs(h(u0) - (1.0 - u0));
    if (r > 1e-12) out.push_back({"H(u0) = 1-u0", u0, r});
  }

  double prev = 0.0;
  for (int i = 1; i < n_probe; ++i) {
    const double u = static_cast<double>(i) / n_probe;
    const double hu = h(u);
    const double sym = std::fabs(hu + h.inverse(1.0 - u) - 1.0);
    if (sym > 1e-8) {
      out.push_back({"H(u) + H^{-1}(1-u) = 1", u, sym});
      break;
    }
    if (hu < u - 1e-12) {
      out.push_back({"H(u) >= u", u, u - hu});
      break;
    }
    if (i > 1 && !(hu > prev)) {
      out.push_back({"H strictly increasing", u, prev - hu});
      break;
    }
    prev = hu;
    const double inv = std::fabs(h(h.inverse(hu)) - hu);
    if (inv > 1e-9) {
      out.push_back({"H(H^{-1}(v)) = v", u, inv});
      break;
    }
  }

  // Derivative vs central differences, skipping kinks for piecewise curves.
  const double fd_h = 1e-6;
  for (int i = 1; i < n_probe; ++i) {
    const double u = 0.01 + 0.98 * i / n_probe;
    if (h.family() == HFamily::piecewise_linear &&
        std::fabs(u - u0) < 10.0 * fd_h)
      continue;
    const double fd = (h(u + fd_h) - h(u - fd_h)) / (2.0 * fd_h);
    const double an = h.derivative(u);
    const double r = std::fabs(fd - an) / std::max(1.0, std::fabs(an));
    if (r > 1e-5) {
      out.push_back({"H' matches finite differences", u, r});
      break;
    }
  }

  // Integral of 1/(H(z)-z): finite up to 1-1e-6 and still growing past it
  // (H <= 1 forces divergence at 1 as long as H stays above the diagonal).
  if (u0 > 0.0 && u0 < 0.5 && std::isfinite(u0)) {
    try {
      QuadratureConfig cfg{1e-9, 1e-12, 4000};
      const double a1 =
          integrate([&](double z) { return 1.0 / (h(z)-z); }, u0, 1.0 - 1e-6, cfg);
      if (!std::isfinite(a1)) {
        out.push_back({"integral of 1/(H-z) finite before 1", 1.0 - 1e-6, a1});
      } else {
        const double a2 = a1 + integrate([&](double z) { return 1.0 / (h(z)-z); },
                                         1.0 - 1e-6, 1.0 - 1e-9, cfg);
        if (!(a2 > a1 + 0.05))
          out.push_back({"integral of 1/(H-z) diverges at 1", 1.0 - 1e-9,
                         a2 - a1});
      }
    } catch (const Error&) {
      out.push_back({"integral of 1/(H-z) finite before 1", 1.0 - 1e-6,
                     std::numeric_limits<double>::infinity()});
    }
  }

  return out;
}

}  // namespace oscop
