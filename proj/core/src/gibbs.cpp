#include "spinchain/gibbs.hpp"

#include <cmath>
#include <string>

#include "spinchain/crystal.hpp"
#include "spinchain/error.hpp"

namespace spinchain {
namespace {

/// Crystal spectra of the full window indexed by the number of spins opposite
/// to the left boundary. Flipping every spin maps (-,-) onto (+,+) and (+,-)
/// onto (-,+) without changing energies.
std::vector<EnergySpectrum> crystal_row(const Interval& window, const InteractionProfile& profile,
                                        const BoundaryPair& boundary) {
  if (window.empty()) {
    return {enumerate_window(window, profile, boundary)};
  }
  auto row = build_final_row(window, profile);
  return boundary.left == boundary.right ? std::move(row.x) : std::move(row.y);
}

}  // namespace

GlobalWindow global_window(long n, GlobalBoundary bc) { return {symmetric_interval(n), boundary_of(bc)}; }

std::vector<Real> magnetization_distribution(const Interval& window, const InteractionProfile& profile,
                                             const BoundaryPair& boundary, const InverseTemperature& beta,
                                             unsigned digits) {
  PrecisionScope scope(digits);
  const auto row = crystal_row(window, profile, boundary);
  std::vector<Real> weights;
  weights.reserve(row.size());
  Real total = 0;
  for (const auto& spectrum : row) {
    weights.push_back(evaluate_high_precision(spectrum, beta, digits));
    total += weights.back();
  }
  for (auto& w : weights) w /= total;
  return weights;
}

Real event_probability(const Interval& window, const InteractionProfile& profile, const BoundaryPair& boundary,
                       const InverseTemperature& beta, MagnetizationEvent event, unsigned digits) {
  if (event.r > window.size()) {
    return Real(0);
  }
  return magnetization_distribution(window, profile, boundary, beta, digits)[event.r];
}

Real event_probability(const Interval& window, const InteractionProfile& profile, const BoundaryPair& boundary,
                       const InverseTemperature& beta, const ConfigurationPredicate& event, unsigned digits,
                       const EnumerationOptions& options) {
  PrecisionScope scope(digits);
  const Real numerator = evaluate_high_precision(enumerate_event(window, profile, boundary, event, options), beta, digits);
  const Real denominator = evaluate_high_precision(enumerate_window(window, profile, boundary, options), beta, digits);
  return numerator / denominator;
}

std::vector<Rational> magnetization_distribution_exact(const Interval& window, const InteractionProfile& profile,
                                                       const BoundaryPair& boundary, const Rational& unit,
                                                       const Rational& tau) {
  std::vector<Rational> weights;
  Rational total = 0;
  for (const auto& spectrum : crystal_row(window, profile, boundary)) {
    weights.push_back(evaluate_rational(spectrum, unit, tau));
    total += weights.back();
  }
  for (auto& w : weights) w /= total;
  return weights;
}

Rational event_probability_exact(const Interval& window, const InteractionProfile& profile,
                                 const BoundaryPair& boundary, const Rational& unit, const Rational& tau,
                                 const ConfigurationPredicate& event, const EnumerationOptions& options) {
  const Rational numerator = evaluate_rational(enumerate_event(window, profile, boundary, event, options), unit, tau);
  const Rational denominator = evaluate_rational(enumerate_window(window, profile, boundary, options), unit, tau);
  return numerator / denominator;
}

CriteriaReport criteria_report(const InteractionProfile& profile, const Interval& window, long k_max) {
  if (k_max < 0) throw ValidationError("k_max must be nonnegative");
  CriteriaReport report;

  double running = 0.0;
  for (long x = std::max(1L, window.m()); x <= window.n(); ++x) {
    running += std::exp(-2.0 * profile.coupling_at(x).convert_to<double>());
    report.partial_sums.push_back({x, running});
  }

  const auto& sums = report.partial_sums;
  if (sums.size() < 4) {
    report.trend = "insufficient-data";
  } else {
    // Compare the average increment over the second half with the first.
    const std::size_t half = sums.size() / 2;
    const double first_rate = sums[half - 1].value / static_cast<double>(half);
    const double second_rate = (sums.back().value - sums[half - 1].value) / static_cast<double>(sums.size() - half);
    report.trend = second_rate >= 0.5 * first_rate ? "growing" : "bounded-looking";
  }

  for (long n = window.m(); n <= window.n(); ++n) {
    for (long k = 1; k <= k_max && window.contains(n + k); ++k) {
      ++report.pairs_checked;
      Rational sum = profile.coupling_at(n) + profile.coupling_at(n + k);
      if (sum <= k) report.violations.push_back({n, k, std::move(sum)});
    }
  }
  return report;
}

}  // namespace spinchain
