#pragma once

#include <stdexcept>
#include <string>

namespace oscop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Integrand returned NaN/Inf away from interval endpoints.
class NonFinite : public Error {
 public:
  using Error::Error;
};

// Root bracket endpoints do not have opposite signs.
class NoBracket : public Error {
 public:
  using Error::Error;
};

// Sampled values violate the monotonicity required for a table.
class NotMonotone : public Error {
 public:
  using Error::Error;
};

// The positivity condition for F' fails; the (F, G) pair is not a copula.
class PositivityViolated : public Error {
 public:
  using Error::Error;
};

class IntegralDiverged : public Error {
 public:
  using Error::Error;
};

class LNotPositive : public Error {
 public:
  using Error::Error;
};

// Support function fails one of its structural hypotheses.
class SupportInvalid : public Error {
 public:
  using Error::Error;
};

// |1 - omega'(u)| too small for the diagonal-to-L transform.
class DegenerateDiagonal : public Error {
 public:
  using Error::Error;
};

// Conditional-CDF inversion lost its bracket (internal bug assertion).
class InversionFailed : public Error {
 public:
  using Error::Error;
};

// Toxic load is log(0): no exposure mass before the requested time.
class ZeroLoad : public Error {
 public:
  using Error::Error;
};

// Compatibility check is missing the t or max-concentration bound it needs.
class AmbiguousContext : public Error {
 public:
  using Error::Error;
};

// A consecutive probit-level pair admits no valid threshold coupling.
class IncompatibleLevels : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or model file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscop
