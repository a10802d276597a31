#include "spinchain/chi_poly.hpp"

#include <sstream>

#include "spinchain/error.hpp"
#include "spinchain/oracle.hpp"

namespace spinchain {

SqrtChiPolynomial SqrtChiPolynomial::constant(Integer c) { return s_power(0, std::move(c)); }

SqrtChiPolynomial SqrtChiPolynomial::s_power(unsigned power, Integer c) {
  SqrtChiPolynomial p;
  p.add_term(power, c);
  return p;
}

void SqrtChiPolynomial::add_term(unsigned power, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coefficients_.erase(it);
  }
}

Integer SqrtChiPolynomial::coefficient(unsigned power) const {
  const auto it = coefficients_.find(power);
  return it == coefficients_.end() ? Integer(0) : it->second;
}

bool SqrtChiPolynomial::is_chi_polynomial() const {
  for (const auto& [power, c] : coefficients_) {
    if (power % 2 != 0) return false;
  }
  return true;
}

bool SqrtChiPolynomial::is_odd() const {
  for (const auto& [power, c] : coefficients_) {
    if (power % 2 == 0) return false;
  }
  return true;
}

SqrtChiPolynomial& SqrtChiPolynomial::operator+=(const SqrtChiPolynomial& other) {
  for (const auto& [power, c] : other.coefficients_) add_term(power, c);
  return *this;
}

SqrtChiPolynomial& SqrtChiPolynomial::operator-=(const SqrtChiPolynomial& other) {
  for (const auto& [power, c] : other.coefficients_) add_term(power, -c);
  return *this;
}

SqrtChiPolynomial SqrtChiPolynomial::times_s(unsigned k) const {
  SqrtChiPolynomial out;
  for (const auto& [power, c] : coefficients_) out.coefficients_.emplace(power + k, c);
  return out;
}

SqrtChiPolynomial SqrtChiPolynomial::divided_by_s() const {
  if (coefficient(0) != 0) {
    throw ConsistencyError("division by s is not exact: constant term " + coefficient(0).str() + " in " + str());
  }
  SqrtChiPolynomial out;
  for (const auto& [power, c] : coefficients_) out.coefficients_.emplace(power - 1, c);
  return out;
}

Rational SqrtChiPolynomial::evaluate_exact(const Rational& s) const {
  Rational sum = 0;
  for (const auto& [power, c] : coefficients_) sum += Rational(c) * spinchain::power(s, power);
  return sum;
}

Integer SqrtChiPolynomial::value_at_one() const {
  Integer sum = 0;
  for (const auto& [power, c] : coefficients_) sum += c;
  return sum;
}

std::string SqrtChiPolynomial::str() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto& [power, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Integer magnitude = abs(c);
    if (power == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    os << 's';
    if (power > 1) os << '^' << power;
  }
  return os.str();
}

double evaluate_chi(const SqrtChiPolynomial& p, double tau) {
  const auto& coeffs = p.coefficients();
  if (coeffs.empty()) return 0.0;
  const unsigned degree = coeffs.rbegin()->first;
  double acc = 0.0;
  for (unsigned power = degree + 1; power-- > 0;) {
    acc = acc * tau + p.coefficient(power).convert_to<double>();
  }
  return acc;
}

std::vector<std::vector<SqrtChiPolynomial>> x_recursive_table(long n_max) {
  if (n_max < 0) throw RangeError("x_recursive needs n >= 0");
  const auto one = SqrtChiPolynomial::constant(1);
  const auto chi = SqrtChiPolynomial::chi_power(1);
  std::vector<std::vector<SqrtChiPolynomial>> table;
  auto at = [&](long n, long r) -> SqrtChiPolynomial {
    if (n < 0 || r < 0 || r > n) return {};
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
  };
  for (long n = 0; n <= n_max; ++n) {
    std::vector<SqrtChiPolynomial> row(static_cast<std::size_t>(n + 1));
    row[0] = one;
    if (n == 1) row[1] = chi;
    if (n >= 2) {
      for (long r = 1; r <= n; ++r) {
        const auto back2 = at(n - 2, r - 1);
        row[static_cast<std::size_t>(r)] = at(n - 1, r - 1) + at(n - 1, r) + back2.times_s(2) - back2;
      }
    }
    table.push_back(std::move(row));
  }
  return table;
}

SqrtChiPolynomial x_recursive(long n, long r) {
  if (n < 0 || r < 0 || r > n) throw RangeError("x_recursive needs 0 <= r <= n");
  return x_recursive_table(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

Integer coefficient_closed(long n, long r, long k) {
  if (k < 0 || k > r || r > n) {
    throw RangeError("coefficient a^" + std::to_string(r) + "_{" + std::to_string(k) + "," + std::to_string(n) +
                     "} needs 0 <= k <= r <= n");
  }
  if (r == 0) return 1;
  return binomial(n - r + 1, k) * binomial(r - 1, k - 1);
}

Integer coefficient_closed_or_zero(long n, long r, long k) {
  if (k < 0 || k > r || r > n) return 0;
  return coefficient_closed(n, r, k);
}

bool coefficient_recurrence_holds(const CoefficientSource& a, long n, long r, long k) {
  if (n < 2 || k < 1 || k > r || r > n) {
    throw RangeError("coefficient recurrences need 1 <= k <= r <= n and n >= 2");
  }
  if (k == r) return a(n, r, r) == a(n - 1, r, r) + a(n - 2, r - 1, r - 1);
  if (k == 1) return a(n, r, 1) == a(n - 1, r, 1) + a(n - 1, r - 1, 1) - a(n - 2, r - 1, 1);
  return a(n, r, k) == a(n - 1, r, k) + a(n - 1, r - 1, k) + a(n - 2, r - 1, k - 1) - a(n - 2, r - 1, k);
}

SqrtChiPolynomial x_closed(long n, long r) {
  if (n < 0 || r < 0 || r > n) throw RangeError("x_closed needs 0 <= r <= n");
  if (r == 0) return SqrtChiPolynomial::constant(1);
  SqrtChiPolynomial out;
  for (long k = 1; k <= r; ++k) {
    out += SqrtChiPolynomial::chi_power(static_cast<unsigned>(k), coefficient_closed(n, r, k));
  }
  return out;
}

namespace {

/// x_closed extended by zero for r > n and r < 0.
SqrtChiPolynomial x_or_zero(long n, long r) {
  if (r < 0 || r > n) return {};
  return x_closed(n, r);
}

}  // namespace

SqrtChiPolynomial y_closed(long n, long r) {
  if (n < 0 || r < 0 || r > n) throw RangeError("y_closed needs 0 <= r <= n");
  return (x_or_zero(n + 1, r + 1) - x_or_zero(n, r + 1)).divided_by_s();
}

SqrtChiPolynomial y_closed_printed(long n, long r) {
  if (n < 0 || r < 0 || r > n) throw RangeError("y_closed_printed needs 0 <= r <= n");
  return (x_or_zero(n + 1, r) - x_or_zero(n, r - 1)).divided_by_s();
}

bool vandermonde_check(long n, long r) {
  if (n < 0 || r < 0 || r > n) throw RangeError("vandermonde_check needs 0 <= r <= n");
  if (r == 0) return true;
  Integer sum = 0;
  for (long k = 1; k <= r; ++k) sum += binomial(n - r + 1, k) * binomial(r - 1, k - 1);
  return sum == binomial(n, r);
}

SqrtChiPolynomial from_spectrum(const EnergySpectrum& spectrum, const Rational& unit) {
  if (unit <= 0) throw ValidationError("polynomial collapse needs a positive unit coupling");
  SqrtChiPolynomial out;
  for (const auto& [energy, count] : spectrum.terms()) {
    const Rational power = energy / unit;
    if (!is_integer(power) || power < 0 || !is_integer(count)) {
      throw ValidationError("spectrum term " + to_string(energy) + ":" + to_string(count) +
                            " has no polynomial counterpart");
    }
    out += SqrtChiPolynomial::s_power(boost::multiprecision::numerator(power).convert_to<unsigned>(),
                                      boost::multiprecision::numerator(count));
  }
  return out;
}

PlacementReport resolve_y_placement(long n_max) {
  PlacementReport report;
  report.n_max = n_max;
  const auto profile = InteractionProfile::constant(1);
  for (long n = 1; n <= n_max; ++n) {
    const Interval window(0, n - 1);
    for (long r = 0; r <= n; ++r) {
      ++report.checked;
      const auto brute = from_spectrum(
          enumerate_crystal(window, profile, BoundaryPair::plus_minus(), static_cast<std::size_t>(r), Spin::up), 1);
      try {
        if (y_closed(n, r) != brute) report.validated_passes = false;
      } catch (const ConsistencyError&) {
        report.validated_passes = false;
      }
      std::string failure;
      try {
        const auto printed = y_closed_printed(n, r);
        if (printed != brute) failure = "differs from brute force " + brute.str() + ": got " + printed.str();
      } catch (const ConsistencyError& e) {
        failure = e.what();
      }
      if (!failure.empty() && report.printed_passes) {
        report.printed_passes = false;
        report.printed_failure = "(" + std::to_string(n) + ", " + std::to_string(r) + "): " + failure;
      }
    }
  }
  return report;
}

}  // namespace spinchain
