#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spinchain/rational.hpp"

namespace spinchain {

enum class Spin : std::int8_t { down = -1, up = 1 };

constexpr int to_int(Spin s) { return static_cast<int>(s); }
constexpr Spin flip(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }
Spin spin_from_int(int value);

/// Integer interval [m, n]. n == m - 1 encodes the empty interval.
class Interval {
 public:
  Interval(long m, long n);

  long m() const { return m_; }
  long n() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_ - m_ + 1); }
  bool empty() const { return n_ == m_ - 1; }
  bool contains(long x) const { return x >= m_ && x <= n_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  long m_;
  long n_;
};

/// [-n, n]
Interval symmetric_interval(long n);

/// Spins fixed just outside a window: `left` sits at m - 1, `right` at n + 1.
struct BoundaryPair {
  Spin left = Spin::up;
  Spin right = Spin::up;

  static constexpr BoundaryPair plus() { return {Spin::up, Spin::up}; }
  static constexpr BoundaryPair minus() { return {Spin::down, Spin::down}; }
  /// Left -1, right +1.
  static constexpr BoundaryPair plus_minus() { return {Spin::down, Spin::up}; }

  constexpr BoundaryPair flipped() const { return {flip(left), flip(right)}; }
  friend constexpr bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

class SpinConfiguration {
 public:
  SpinConfiguration(Interval interval, std::vector<Spin> spins);

  static SpinConfiguration uniform(Interval interval, Spin value);
  /// Bit i of `mask` set means site m + i carries -1.
  static SpinConfiguration from_mask(Interval interval, std::uint64_t mask);

  const Interval& interval() const { return interval_; }
  std::span<const Spin> spins() const { return spins_; }
  Spin at(long x) const;

  SpinConfiguration flipped() const;
  /// Site x maps to -x.
  SpinConfiguration mirrored() const;

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  Interval interval_;
  std::vector<Spin> spins_;
};

/// Site-dependent nearest-neighbour couplings; I_x belongs to the bond (x-1, x).
class InteractionProfile {
 public:
  enum class Kind { constant, periodic, table };

  static InteractionProfile constant(Rational value);
  static InteractionProfile periodic(std::vector<Rational> values);
  /// values[i] is I_{offset + i}.
  static InteractionProfile table(long offset, std::vector<Rational> values);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& values() const { return values_; }
  long offset() const { return offset_; }
  std::size_t period() const { return values_.size(); }

  /// Throws RangeError for a table profile queried outside its range.
  const Rational& coupling_at(long x) const;
  bool defined_at(long x) const;

  friend bool operator==(const InteractionProfile&, const InteractionProfile&) = default;

 private:
  InteractionProfile(Kind kind, std::vector<Rational> values, long offset);

  Kind kind_;
  std::vector<Rational> values_;
  long offset_ = 0;
};

/// I_n == I_{1-n} for every n with both n and 1 - n inside `window`.
bool is_symmetric(const InteractionProfile& profile, const Interval& window);

/// Table profile on [1 - extent, extent] with I_x taken from `source` for
/// x >= 1 and mirrored onto x <= 0.
InteractionProfile symmetrized(const InteractionProfile& source, long extent);

/// Bond couplings I_m, ..., I_{n+1} seen by a window: size() + 1 entries.
std::vector<Rational> window_couplings(const InteractionProfile& profile, const Interval& window);

class InverseTemperature {
 public:
  explicit InverseTemperature(Rational beta);
  explicit InverseTemperature(double beta);

  const Rational& exact() const { return beta_; }
  double value() const { return beta_.convert_to<double>(); }

 private:
  Rational beta_;
};

/// Energy in the "+" boundary condition on [-n, n]: interior bonds I_x for
/// x in [-n+1, n] plus boundary bonds I_{-n} and I_{n+1}.
Rational global_energy_plus(const SpinConfiguration& config, const InteractionProfile& profile);

/// global_energy_plus + I_{-n} * sigma(-n).
Rational global_energy_pm(const SpinConfiguration& config, const InteractionProfile& profile);

/// Energy of a window [m, n] between fixed boundary spins: bonds I_m .. I_{n+1}.
/// On the empty window this is the single bond I_m between the two boundary spins.
Rational window_energy(const SpinConfiguration& config, const InteractionProfile& profile,
                       const BoundaryPair& boundary);

std::size_t minority_count(const SpinConfiguration& config, Spin epsilon);

}  // namespace spinchain
