#include "spinchain/global_recursion.hpp"

#include <cmath>
#include <string>

#include "spinchain/error.hpp"
#include "spinchain/oracle.hpp"

namespace spinchain {
namespace {

void require_volume(long n) {
  if (n < 0) throw ValidationError("volume index must be nonnegative");
}

/// (1 + sign * e^{-b I})^2 as a spectrum.
EnergySpectrum squared_bond_factor(const Rational& coupling, int sign) {
  EnergySpectrum f;
  f.add_term(0, 1);
  f.add_term(coupling, 2 * sign);
  f.add_term(2 * coupling, 1);
  return f;
}

}  // namespace

void require_mirror_symmetry(const InteractionProfile& profile, long n_max) {
  require_volume(n_max);
  if (!is_symmetric(profile, Interval(-n_max, n_max + 1))) {
    throw ValidationError("profile violates I_n = I_{1-n} on [" + std::to_string(-n_max) + ", " +
                          std::to_string(n_max + 1) + "]; the two-site recursion requires it");
  }
}

std::vector<GlobalPair> recurse_global(long n_max, const InteractionProfile& profile) {
  require_mirror_symmetry(profile, n_max);
  std::vector<GlobalPair> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  out.push_back({0, enumerate_global(0, profile, GlobalBoundary::plus),
                 enumerate_global(0, profile, GlobalBoundary::plus_minus)});
  for (long n = 1; n <= n_max; ++n) {
    const GlobalPair& prev = out.back();
    const Rational& coupling = profile.coupling_at(n + 1);

    // (1 + e^{-2bI}) Z_same + 2 e^{-bI} Z_other
    auto step = [&](const EnergySpectrum& same, const EnergySpectrum& other) {
      EnergySpectrum next = same;
      next += shift(same, 2 * coupling);
      next += scale(shift(other, coupling), 2);
      return next;
    };
    out.push_back({n, step(prev.z_plus, prev.z_pm), step(prev.z_pm, prev.z_plus)});
  }
  return out;
}

std::vector<GlobalPair> closed_form_sequence(long n_max, const InteractionProfile& profile) {
  require_mirror_symmetry(profile, n_max);
  std::vector<GlobalPair> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  EnergySpectrum plus_product = EnergySpectrum::single(0);
  EnergySpectrum minus_product = EnergySpectrum::single(0);
  const Rational half(1, 2);
  for (long n = 0; n <= n_max; ++n) {
    const Rational& coupling = profile.coupling_at(n + 1);
    plus_product = convolve(plus_product, squared_bond_factor(coupling, +1));
    minus_product = convolve(minus_product, squared_bond_factor(coupling, -1));
    out.push_back({n, scale(add(plus_product, minus_product), half),
                   scale(subtract(plus_product, minus_product), half)});
  }
  return out;
}

GlobalPair closed_form_global(long n, const InteractionProfile& profile) {
  require_volume(n);
  return closed_form_sequence(n, profile).back();
}

std::vector<Real> ratio_sequence(long n_max, const InteractionProfile& profile, const InverseTemperature& beta,
                                 unsigned digits) {
  std::vector<Real> out;
  PrecisionScope scope(digits);
  for (const auto& pair : closed_form_sequence(n_max, profile)) {
    const Real denominator = evaluate_high_precision(pair.z_pm, beta, digits);
    if (denominator == 0) {
      throw ConsistencyError("Z^pm evaluated to zero at n=" + std::to_string(pair.n));
    }
    out.push_back(evaluate_high_precision(pair.z_plus, beta, digits) / denominator);
  }
  return out;
}

NumericGlobal recurse_global_numeric(long n_max, const InteractionProfile& profile, const InverseTemperature& beta) {
  require_mirror_symmetry(profile, n_max);
  const double b = beta.value();
  const double t0 = std::exp(-b * profile.coupling_at(0).convert_to<double>());
  const double t1 = std::exp(-b * profile.coupling_at(1).convert_to<double>());
  // n = 0: one site between the boundary bonds I_0 and I_1.
  double z_plus = 1.0 + t0 * t1;
  double z_pm = t0 + t1;
  double log_scale = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    const double t = std::exp(-b * profile.coupling_at(n + 1).convert_to<double>());
    const double next_plus = (1.0 + t * t) * z_plus + 2.0 * t * z_pm;
    const double next_pm = (1.0 + t * t) * z_pm + 2.0 * t * z_plus;
    const double norm = next_plus;
    z_plus = next_plus / norm;
    z_pm = next_pm / norm;
    log_scale += std::log(norm);
  }
  return {n_max, log_scale + std::log(z_plus), log_scale + std::log(z_pm), z_plus / z_pm};
}

}  // namespace spinchain
