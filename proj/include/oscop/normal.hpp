#pragma once

namespace oscop {

// Standard normal density, CDF and quantile.
//
// normal_cdf is evaluated through erfc of |x| so that
// normal_cdf(x) + normal_cdf(-x) == 1 holds exactly as computed.
// normal_quantile is a rational approximation polished by one Halley step
// against normal_cdf; it inverts normal_cdf to better than 1e-12 in x.
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);  // DomainError unless p in (0,1)

}  // namespace oscop
