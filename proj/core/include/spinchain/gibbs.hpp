#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spinchain/model.hpp"
#include "spinchain/oracle.hpp"
#include "spinchain/precision.hpp"

namespace spinchain {

/// r counts the sites whose spin is opposite to the left boundary spin:
/// spins -1 under (+,+), spins +1 under (-,+).
struct MagnetizationEvent {
  std::size_t r = 0;
};

/// Window and boundary spins realising the global condition on [-n, n].
struct GlobalWindow {
  Interval window;
  BoundaryPair boundary;
};
GlobalWindow global_window(long n, GlobalBoundary bc);

/// Probability of r opposite spins, from crystal tables (no enumeration cap).
Real event_probability(const Interval& window, const InteractionProfile& profile, const BoundaryPair& boundary,
                       const InverseTemperature& beta, MagnetizationEvent event, unsigned digits = kDefaultDigits);

/// Probability of an arbitrary event, by enumeration.
Real event_probability(const Interval& window, const InteractionProfile& profile, const BoundaryPair& boundary,
                       const InverseTemperature& beta, const ConfigurationPredicate& event,
                       unsigned digits = kDefaultDigits, const EnumerationOptions& options = {});

/// P(r) for r = 0..size.
std::vector<Real> magnetization_distribution(const Interval& window, const InteractionProfile& profile,
                                             const BoundaryPair& boundary, const InverseTemperature& beta,
                                             unsigned digits = kDefaultDigits);

/// Exact P(r) with every coupling an integer multiple of `unit` and
/// tau = e^{-b unit}; tau = 1 is infinite temperature.
std::vector<Rational> magnetization_distribution_exact(const Interval& window, const InteractionProfile& profile,
                                                       const BoundaryPair& boundary, const Rational& unit,
                                                       const Rational& tau);

/// Exact probability of an enumerated event at tau = e^{-b unit}.
Rational event_probability_exact(const Interval& window, const InteractionProfile& profile,
                                 const BoundaryPair& boundary, const Rational& unit, const Rational& tau,
                                 const ConfigurationPredicate& event, const EnumerationOptions& options = {});

/// Window evidence for the two coupling-growth conditions. Diagnostic only:
/// a finite window cannot decide convergence of a series or a phase transition.
struct CriteriaReport {
  struct PartialSum {
    long last_site = 0;
    double value = 0.0;
  };
  struct Violation {
    long n = 0;
    long k = 0;
    Rational sum;  ///< I_n + I_{n+k}, which is <= k
  };

  /// S_N = sum of e^{-2 I_x} over window sites 1 <= x <= N.
  std::vector<PartialSum> partial_sums;
  /// "bounded-looking", "growing" or "insufficient-data".
  std::string trend;
  /// Pairs (n, n + k) with both sites in the window, 1 <= k <= k_max.
  long pairs_checked = 0;
  std::vector<Violation> violations;
};

CriteriaReport criteria_report(const InteractionProfile& profile, const Interval& window, long k_max);

}  // namespace spinchain
