#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spinchain/rational.hpp"
#include "spinchain/spectrum.hpp"

namespace spinchain {

/// Polynomial in s = e^{-b I} with integer coefficients; chi = s^2 is the
/// squared bond factor of the homogeneous chain.
class SqrtChiPolynomial {
 public:
  using Coefficients = std::map<unsigned, Integer>;

  SqrtChiPolynomial() = default;

  static SqrtChiPolynomial constant(Integer c);
  static SqrtChiPolynomial s_power(unsigned power, Integer c = 1);
  static SqrtChiPolynomial chi_power(unsigned power, Integer c = 1) { return s_power(2 * power, std::move(c)); }

  const Coefficients& coefficients() const { return coefficients_; }
  /// Coefficient of s^power.
  Integer coefficient(unsigned power) const;
  /// Coefficient of chi^k.
  Integer chi_coefficient(unsigned k) const { return coefficient(2 * k); }
  bool is_zero() const { return coefficients_.empty(); }
  /// Only even powers of s.
  bool is_chi_polynomial() const;
  bool is_odd() const;

  SqrtChiPolynomial& operator+=(const SqrtChiPolynomial& other);
  SqrtChiPolynomial& operator-=(const SqrtChiPolynomial& other);
  SqrtChiPolynomial times_s(unsigned k) const;
  /// Exact division by s; ConsistencyError if a constant term remains.
  SqrtChiPolynomial divided_by_s() const;

  friend SqrtChiPolynomial operator+(SqrtChiPolynomial a, const SqrtChiPolynomial& b) { return a += b; }
  friend SqrtChiPolynomial operator-(SqrtChiPolynomial a, const SqrtChiPolynomial& b) { return a -= b; }
  friend bool operator==(const SqrtChiPolynomial&, const SqrtChiPolynomial&) = default;

  Rational evaluate_exact(const Rational& s) const;
  Integer value_at_one() const;

  /// "3*s^2 + 1"-style text, highest power first.
  std::string str() const;

 private:
  void add_term(unsigned power, const Integer& c);
  Coefficients coefficients_;
};

/// Horner evaluation at s = tau.
double evaluate_chi(const SqrtChiPolynomial& p, double tau);

/// X^r_n for n sites: X^r_n = X^{r-1}_{n-1} + X^r_{n-1} + (chi - 1) X^{r-1}_{n-2},
/// with X^0_n = 1, X^1_1 = chi and X^r_n = 0 for r > n.
SqrtChiPolynomial x_recursive(long n, long r);

/// All X^r_n for 0 <= r <= n <= n_max, indexed [n][r].
std::vector<std::vector<SqrtChiPolynomial>> x_recursive_table(long n_max);

/// a^r_{k,n} = C(n - r + 1, k) C(r - 1, k - 1) for 0 <= k <= r <= n, with
/// a^0_{0,n} = 1. RangeError outside that domain.
Integer coefficient_closed(long n, long r, long k);

/// a(n, r, k), zero outside 0 <= k <= r <= n.
using CoefficientSource = std::function<Integer(long n, long r, long k)>;

/// The recurrences satisfied by the chi^k coefficients, for 1 <= k <= r <= n, n >= 2:
///   k = 1 < r:      a^r_{1,n} = a^r_{1,n-1} + a^{r-1}_{1,n-1} - a^{r-1}_{1,n-2}
///   1 < k < r:      a^r_{k,n} = a^r_{k,n-1} + a^{r-1}_{k,n-1} + a^{r-1}_{k-1,n-2} - a^{r-1}_{k,n-2}
///   k = r:          a^r_{r,n} = a^r_{r,n-1} + a^{r-1}_{r-1,n-2}
/// RangeError outside that domain.
bool coefficient_recurrence_holds(const CoefficientSource& a, long n, long r, long k);

/// coefficient_closed extended by zero.
Integer coefficient_closed_or_zero(long n, long r, long k);

/// sum_{k=1}^r a^r_{k,n} chi^k; the constant 1 for r = 0.
SqrtChiPolynomial x_closed(long n, long r);

/// Y^r_n = s^{-1} (X^{r+1}_{n+1} - X^{r+1}_n), the placement that matches
/// (-,+) windows with r spins +1.
SqrtChiPolynomial y_closed(long n, long r);

/// s^{-1} (X^r_{n+1} - X^{r-1}_n). Throws ConsistencyError when the
/// difference has a constant term, e.g. at (n, r) = (1, 1).
SqrtChiPolynomial y_closed_printed(long n, long r);

/// C(n, r) == sum_{k=1}^r C(n - r + 1, k) C(r - 1, k - 1); r = 0 checks 1 == 1.
bool vandermonde_check(long n, long r);

/// Constant-coupling spectrum to polynomial: energy j*unit becomes s^j.
/// ValidationError if an energy is not a nonnegative multiple of `unit` or a
/// multiplicity is not an integer.
SqrtChiPolynomial from_spectrum(const EnergySpectrum& spectrum, const Rational& unit);

/// Result of checking both Y placements against brute force on constant
/// profiles for 1 <= n <= n_max, 0 <= r <= n.
struct PlacementReport {
  long n_max = 0;
  bool validated_passes = true;
  bool printed_passes = true;
  long checked = 0;
  /// First failure of the printed placement, as "(n, r): reason".
  std::string printed_failure;
};

PlacementReport resolve_y_placement(long n_max);

}  // namespace spinchain
