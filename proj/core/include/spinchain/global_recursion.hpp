#pragma once

#include <vector>

#include "spinchain/model.hpp"
#include "spinchain/precision.hpp"
#include "spinchain/spectrum.hpp"

namespace spinchain {

/// Z^+_n and Z^pm_n on [-n, n] as exact spectra.
struct GlobalPair {
  long n = 0;
  EnergySpectrum z_plus;
  EnergySpectrum z_pm;

  /// Z^+ - Z^pm
  EnergySpectrum difference() const { return subtract(z_plus, z_pm); }
  /// Z^+ + Z^pm
  EnergySpectrum sum() const { return add(z_plus, z_pm); }

  friend bool operator==(const GlobalPair&, const GlobalPair&) = default;
};

/// Throws ValidationError unless I_x == I_{1-x} on [-n_max, n_max + 1].
void require_mirror_symmetry(const InteractionProfile& profile, long n_max);

/// Two-site update per step:
///   Z^+_n  = (1 + e^{-2bI}) Z^+_{n-1}  + 2 e^{-bI} Z^pm_{n-1}
///   Z^pm_n = (1 + e^{-2bI}) Z^pm_{n-1} + 2 e^{-bI} Z^+_{n-1},  I = I_{n+1}.
/// The n = 0 pair is enumerated directly. Returns entries for n = 0..n_max.
std::vector<GlobalPair> recurse_global(long n_max, const InteractionProfile& profile);

/// Z^+_n, Z^pm_n = (A_n +- B_n) / 2 with A_n = prod (1 + e^{-b I_{i+1}})^2 and
/// B_n = prod (1 - e^{-b I_{i+1}})^2 over i = 0..n.
GlobalPair closed_form_global(long n, const InteractionProfile& profile);

/// closed_form_global for n = 0..n_max, sharing the running products.
std::vector<GlobalPair> closed_form_sequence(long n_max, const InteractionProfile& profile);

/// Z^+_n(beta) / Z^pm_n(beta) for n = 0..n_max from the closed form.
std::vector<Real> ratio_sequence(long n_max, const InteractionProfile& profile, const InverseTemperature& beta,
                                 unsigned digits = kDefaultDigits);

/// Floating-point run of the two-site update at a fixed beta, renormalised each
/// step so that very long chains stay finite.
struct NumericGlobal {
  long n = 0;
  double log_z_plus = 0.0;
  double log_z_pm = 0.0;
  double ratio = 1.0;
};

NumericGlobal recurse_global_numeric(long n_max, const InteractionProfile& profile, const InverseTemperature& beta);

}  // namespace spinchain
