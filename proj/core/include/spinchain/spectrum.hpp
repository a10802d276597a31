#pragma once

#include <cstddef>
#include <map>

#include "spinchain/model.hpp"
#include "spinchain/precision.hpp"
#include "spinchain/rational.hpp"

namespace spinchain {

/// Exact density of states: a partition function stored as E -> N(E), so that
/// Z(beta) = sum_E N(E) exp(-beta E). Zero multiplicities are never stored.
class EnergySpectrum {
 public:
  using Terms = std::map<Rational, Rational>;

  EnergySpectrum() = default;

  static EnergySpectrum single(Rational energy, Rational multiplicity = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational multiplicity(const Rational& energy) const;
  /// Sum of all multiplicities, i.e. the value at beta = 0.
  Rational total_multiplicity() const;
  /// Every multiplicity is a nonnegative integer.
  bool is_physical() const;

  void add_term(const Rational& energy, const Rational& multiplicity);

  EnergySpectrum& operator+=(const EnergySpectrum& other);
  EnergySpectrum& operator-=(const EnergySpectrum& other);

  friend bool operator==(const EnergySpectrum&, const EnergySpectrum&) = default;

 private:
  Terms terms_;
};

EnergySpectrum add(const EnergySpectrum& a, const EnergySpectrum& b);
EnergySpectrum subtract(const EnergySpectrum& a, const EnergySpectrum& b);
/// Multiplication by exp(-beta dE).
EnergySpectrum shift(const EnergySpectrum& a, const Rational& dE);
EnergySpectrum convolve(const EnergySpectrum& a, const EnergySpectrum& b);
EnergySpectrum scale(const EnergySpectrum& a, const Rational& c);

/// Double-precision value, accumulated in increasing energy order.
double evaluate(const EnergySpectrum& a, const InverseTemperature& beta);

/// Same sum at `digits` significant decimal digits.
Real evaluate_high_precision(const EnergySpectrum& a, const InverseTemperature& beta,
                             unsigned digits = kDefaultDigits);

/// Exact value at Boltzmann factor `tau` = exp(-beta * unit). Every energy
/// must be an integer multiple of `unit` (ValidationError otherwise).
Rational evaluate_rational(const EnergySpectrum& a, const Rational& unit, const Rational& tau);

std::ostream& operator<<(std::ostream& os, const EnergySpectrum& a);

}  // namespace spinchain
