#include "spinchain/model.hpp"

#include <algorithm>
#include <string>

#include "spinchain/error.hpp"

namespace spinchain {

Spin spin_from_int(int value) {
  if (value == 1) return Spin::up;
  if (value == -1) return Spin::down;
  throw ValidationError("spin must be +1 or -1, got " + std::to_string(value));
}

Interval::Interval(long m, long n) : m_(m), n_(n) {
  if (n < m - 1) {
    throw ValidationError("invalid interval [" + std::to_string(m) + ", " + std::to_string(n) + "]");
  }
}

Interval symmetric_interval(long n) {
  if (n < 0) {
    throw ValidationError("volume index must be nonnegative");
  }
  return Interval(-n, n);
}

SpinConfiguration::SpinConfiguration(Interval interval, std::vector<Spin> spins)
    : interval_(interval), spins_(std::move(spins)) {
  if (spins_.size() != interval_.size()) {
    throw ValidationError("configuration length does not match its interval");
  }
  for (Spin s : spins_) {
    if (s != Spin::up && s != Spin::down) {
      throw ValidationError("configuration entries must be +1 or -1");
    }
  }
}

SpinConfiguration SpinConfiguration::uniform(Interval interval, Spin value) {
  return SpinConfiguration(interval, std::vector<Spin>(interval.size(), value));
}

SpinConfiguration SpinConfiguration::from_mask(Interval interval, std::uint64_t mask) {
  std::vector<Spin> spins(interval.size());
  for (std::size_t i = 0; i < spins.size(); ++i) {
    spins[i] = ((mask >> i) & 1U) != 0 ? Spin::down : Spin::up;
  }
  return SpinConfiguration(interval, std::move(spins));
}

Spin SpinConfiguration::at(long x) const {
  if (!interval_.contains(x)) {
    throw RangeError("site " + std::to_string(x) + " outside configuration");
  }
  return spins_[static_cast<std::size_t>(x - interval_.m())];
}

SpinConfiguration SpinConfiguration::flipped() const {
  std::vector<Spin> out(spins_.size());
  std::transform(spins_.begin(), spins_.end(), out.begin(), flip);
  return SpinConfiguration(interval_, std::move(out));
}

SpinConfiguration SpinConfiguration::mirrored() const {
  std::vector<Spin> out(spins_.rbegin(), spins_.rend());
  return SpinConfiguration(Interval(-interval_.n(), -interval_.m()), std::move(out));
}

InteractionProfile::InteractionProfile(Kind kind, std::vector<Rational> values, long offset)
    : kind_(kind), values_(std::move(values)), offset_(offset) {}

InteractionProfile InteractionProfile::constant(Rational value) {
  return InteractionProfile(Kind::constant, {std::move(value)}, 0);
}

InteractionProfile InteractionProfile::periodic(std::vector<Rational> values) {
  if (values.empty()) {
    throw ValidationError("periodic profile needs at least one value");
  }
  return InteractionProfile(Kind::periodic, std::move(values), 0);
}

InteractionProfile InteractionProfile::table(long offset, std::vector<Rational> values) {
  if (values.empty()) {
    throw ValidationError("table profile needs at least one value");
  }
  return InteractionProfile(Kind::table, std::move(values), offset);
}

bool InteractionProfile::defined_at(long x) const {
  if (kind_ != Kind::table) return true;
  return x >= offset_ && x - offset_ < static_cast<long>(values_.size());
}

const Rational& InteractionProfile::coupling_at(long x) const {
  switch (kind_) {
    case Kind::constant:
      return values_.front();
    case Kind::periodic: {
      const long p = static_cast<long>(values_.size());
      return values_[static_cast<std::size_t>(((x % p) + p) % p)];
    }
    case Kind::table:
      break;
  }
  if (!defined_at(x)) {
    throw RangeError("coupling I_" + std::to_string(x) + " outside table [" + std::to_string(offset_) + ", " +
                     std::to_string(offset_ + static_cast<long>(values_.size()) - 1) + "]");
  }
  return values_[static_cast<std::size_t>(x - offset_)];
}

bool is_symmetric(const InteractionProfile& profile, const Interval& window) {
  for (long x = window.m(); x <= window.n(); ++x) {
    const long partner = 1 - x;
    if (partner < x || !window.contains(partner)) continue;
    if (profile.coupling_at(x) != profile.coupling_at(partner)) return false;
  }
  return true;
}

InteractionProfile symmetrized(const InteractionProfile& source, long extent) {
  if (extent < 1) {
    throw ValidationError("symmetrized profile needs extent >= 1");
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(2 * extent));
  for (long x = 1 - extent; x <= extent; ++x) {
    values.push_back(source.coupling_at(x >= 1 ? x : 1 - x));
  }
  return InteractionProfile::table(1 - extent, std::move(values));
}

std::vector<Rational> window_couplings(const InteractionProfile& profile, const Interval& window) {
  std::vector<Rational> out;
  out.reserve(window.size() + 1);
  for (long x = window.m(); x <= window.n() + 1; ++x) {
    out.push_back(profile.coupling_at(x));
  }
  return out;
}

InverseTemperature::InverseTemperature(Rational beta) : beta_(std::move(beta)) {
  if (beta_ <= 0) {
    throw ValidationError("inverse temperature must be positive");
  }
}

InverseTemperature::InverseTemperature(double beta) : InverseTemperature(Rational(beta)) {}

namespace {

void require_symmetric_interval(const Interval& interval) {
  if (interval.m() != -interval.n()) {
    throw ValidationError("global energies need a configuration on [-n, n]");
  }
}

}  // namespace

Rational window_energy(const SpinConfiguration& config, const InteractionProfile& profile,
                       const BoundaryPair& boundary) {
  const Interval& w = config.interval();
  if (w.empty()) {
    return boundary.left != boundary.right ? profile.coupling_at(w.m()) : Rational(0);
  }
  Rational energy = 0;
  const auto spins = config.spins();
  if (boundary.left != spins.front()) energy += profile.coupling_at(w.m());
  for (std::size_t i = 1; i < spins.size(); ++i) {
    if (spins[i - 1] != spins[i]) energy += profile.coupling_at(w.m() + static_cast<long>(i));
  }
  if (spins.back() != boundary.right) energy += profile.coupling_at(w.n() + 1);
  return energy;
}

Rational global_energy_plus(const SpinConfiguration& config, const InteractionProfile& profile) {
  require_symmetric_interval(config.interval());
  const long n = config.interval().n();
  Rational energy = 0;
  for (long x = -n + 1; x <= n; ++x) {
    if (config.at(x - 1) != config.at(x)) energy += profile.coupling_at(x);
  }
  if (config.at(-n) != Spin::up) energy += profile.coupling_at(-n);
  if (config.at(n) != Spin::up) energy += profile.coupling_at(n + 1);
  return energy;
}

Rational global_energy_pm(const SpinConfiguration& config, const InteractionProfile& profile) {
  const long n = config.interval().n();
  return global_energy_plus(config, profile) + profile.coupling_at(-n) * to_int(config.at(-n));
}

std::size_t minority_count(const SpinConfiguration& config, Spin epsilon) {
  const auto spins = config.spins();
  return static_cast<std::size_t>(std::count(spins.begin(), spins.end(), epsilon));
}

}  // namespace spinchain
