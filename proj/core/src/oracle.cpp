#include "spinchain/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spinchain/error.hpp"

namespace spinchain {
namespace {

constexpr std::size_t kHardCap = 62;

void check_cap(const Interval& window, const EnumerationOptions& options) {
  if (window.size() > options.cap || window.size() > kHardCap) {
    throw RangeError("enumeration cap exceeded: window has " + std::to_string(window.size()) +
                     " sites, cap is " + std::to_string(std::min(options.cap, kHardCap)));
  }
}

/// Couplings rescaled to a common denominator, if the scaled values fit in int64.
struct ScaledCouplings {
  std::vector<std::int64_t> numerators;
  Integer denominator;
};

std::optional<ScaledCouplings> scale_to_integers(const std::vector<Rational>& couplings) {
  Integer lcm = 1;
  for (const auto& c : couplings) {
    lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(c)));
  }
  ScaledCouplings out{{}, lcm};
  Integer budget = 0;
  for (const auto& c : couplings) {
    const Integer scaled = boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c));
    budget += abs(scaled);
    out.numerators.push_back(0);
    if (budget >= (Integer(1) << 62)) return std::nullopt;
    out.numerators.back() = scaled.convert_to<std::int64_t>();
  }
  return out;
}

/// Gray-code walk over all 2^L masks (bit i set: site m + i is -1). Flipping
/// one site toggles exactly its two adjacent bonds. `visit(mask, energy)` is
/// called once per configuration.
template <class Energy, class Visit>
void gray_walk(const std::vector<Energy>& couplings, const BoundaryPair& boundary, Visit&& visit) {
  const std::size_t sites = couplings.size() - 1;
  std::vector<bool> broken(couplings.size(), false);
  Energy energy{0};
  broken.front() = boundary.left != Spin::up;
  broken.back() = boundary.right != Spin::up;
  if (broken.front()) energy += couplings.front();
  if (broken.back()) energy += couplings.back();

  std::uint64_t mask = 0;
  visit(mask, energy);
  const std::uint64_t count = std::uint64_t{1} << sites;
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto site = static_cast<std::size_t>(std::countr_zero(k));
    mask ^= std::uint64_t{1} << site;
    for (std::size_t bond : {site, site + 1}) {
      if (broken[bond]) {
        energy -= couplings[bond];
      } else {
        energy += couplings[bond];
      }
      broken[bond] = !broken[bond];
    }
    visit(mask, energy);
  }
}

/// Enumerates a nonempty window, keeping configurations whose count of -1
/// spins passes `keep_down_count`.
template <class Filter>
EnergySpectrum enumerate_masks(const Interval& window, const InteractionProfile& profile,
                               const BoundaryPair& boundary, Filter&& keep_down_count) {
  const auto couplings = window_couplings(profile, window);
  EnergySpectrum out;
  if (const auto scaled = scale_to_integers(couplings)) {
    std::unordered_map<std::int64_t, std::uint64_t> histogram;
    gray_walk(scaled->numerators, boundary, [&](std::uint64_t mask, std::int64_t energy) {
      if (keep_down_count(static_cast<std::size_t>(std::popcount(mask)))) ++histogram[energy];
    });
    for (const auto& [energy, count] : histogram) {
      out.add_term(Rational(Integer(energy), scaled->denominator), Rational(Integer(count)));
    }
    return out;
  }
  std::map<Rational, std::uint64_t> histogram;
  gray_walk(couplings, boundary, [&](std::uint64_t mask, const Rational& energy) {
    if (keep_down_count(static_cast<std::size_t>(std::popcount(mask)))) ++histogram[energy];
  });
  for (const auto& [energy, count] : histogram) out.add_term(energy, Rational(Integer(count)));
  return out;
}

EnergySpectrum empty_window(const Interval& window, const InteractionProfile& profile,
                            const BoundaryPair& boundary) {
  return EnergySpectrum::single(window_energy(SpinConfiguration(window, {}), profile, boundary));
}

}  // namespace

EnergySpectrum enumerate_global(long n, const InteractionProfile& profile, GlobalBoundary bc,
                                const EnumerationOptions& options) {
  // H^+ is the window energy with (+, +); H^pm flips the left boundary bond.
  return enumerate_window(symmetric_interval(n), profile, boundary_of(bc), options);
}

EnergySpectrum enumerate_window(const Interval& window, const InteractionProfile& profile,
                                const BoundaryPair& boundary, const EnumerationOptions& options) {
  check_cap(window, options);
  if (window.empty()) return empty_window(window, profile, boundary);
  return enumerate_masks(window, profile, boundary, [](std::size_t) { return true; });
}

EnergySpectrum enumerate_crystal(const Interval& window, const InteractionProfile& profile,
                                 const BoundaryPair& boundary, std::size_t r, Spin counted,
                                 const EnumerationOptions& options) {
  check_cap(window, options);
  if (r > window.size()) {
    throw ValidationError("crystal count r=" + std::to_string(r) + " exceeds window size " +
                          std::to_string(window.size()));
  }
  if (window.empty()) return empty_window(window, profile, boundary);
  const std::size_t sites = window.size();
  const std::size_t wanted_down = counted == Spin::down ? r : sites - r;
  return enumerate_masks(window, profile, boundary, [wanted_down](std::size_t down) { return down == wanted_down; });
}

EnergySpectrum enumerate_event(const Interval& window, const InteractionProfile& profile,
                               const BoundaryPair& boundary, const ConfigurationPredicate& predicate,
                               const EnumerationOptions& options) {
  check_cap(window, options);
  EnergySpectrum out;
  const std::uint64_t count = std::uint64_t{1} << window.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto config = SpinConfiguration::from_mask(window, mask);
    if (predicate(config)) out.add_term(window_energy(config, profile, boundary), 1);
  }
  return out;
}

}  // namespace spinchain
