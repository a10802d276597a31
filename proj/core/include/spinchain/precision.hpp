#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "spinchain/rational.hpp"

namespace spinchain {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 30;

/// Sets the working precision of newly created Real values for its lifetime.
/// The setting is process-wide; do not overlap scopes across threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& q) { return Real(q); }

/// Scientific notation with `digits` significant digits.
inline std::string format_real(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace spinchain
