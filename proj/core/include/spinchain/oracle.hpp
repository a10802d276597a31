#pragma once

#include <cstddef>
#include <functional>

#include "spinchain/model.hpp"
#include "spinchain/spectrum.hpp"

namespace spinchain {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

struct EnumerationOptions {
  /// Largest window, in sites, the oracle will enumerate.
  std::size_t cap = kDefaultEnumerationCap;
};

enum class GlobalBoundary { plus, plus_minus };

/// Boundary spins realising a global boundary condition on [-n, n].
constexpr BoundaryPair boundary_of(GlobalBoundary bc) {
  return bc == GlobalBoundary::plus ? BoundaryPair::plus() : BoundaryPair::plus_minus();
}

using ConfigurationPredicate = std::function<bool(const SpinConfiguration&)>;

/// Brute force over all 2^(2n+1) configurations on [-n, n].
EnergySpectrum enumerate_global(long n, const InteractionProfile& profile, GlobalBoundary bc,
                                const EnumerationOptions& options = {});

EnergySpectrum enumerate_window(const Interval& window, const InteractionProfile& profile,
                                const BoundaryPair& boundary, const EnumerationOptions& options = {});

/// Restricted to configurations with exactly `r` sites carrying `counted`.
EnergySpectrum enumerate_crystal(const Interval& window, const InteractionProfile& profile,
                                 const BoundaryPair& boundary, std::size_t r, Spin counted,
                                 const EnumerationOptions& options = {});

EnergySpectrum enumerate_event(const Interval& window, const InteractionProfile& profile,
                               const BoundaryPair& boundary, const ConfigurationPredicate& predicate,
                               const EnumerationOptions& options = {});

}  // namespace spinchain
