#include "spinchain/spectrum.hpp"

#include <cmath>
#include <ostream>

#include "spinchain/error.hpp"

namespace spinchain {

EnergySpectrum EnergySpectrum::single(Rational energy, Rational multiplicity) {
  EnergySpectrum s;
  s.add_term(energy, multiplicity);
  return s;
}

Rational EnergySpectrum::multiplicity(const Rational& energy) const {
  const auto it = terms_.find(energy);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational EnergySpectrum::total_multiplicity() const {
  Rational total = 0;
  for (const auto& [energy, count] : terms_) total += count;
  return total;
}

bool EnergySpectrum::is_physical() const {
  for (const auto& [energy, count] : terms_) {
    if (count < 0 || !is_integer(count)) return false;
  }
  return true;
}

void EnergySpectrum::add_term(const Rational& energy, const Rational& multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(energy, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

EnergySpectrum& EnergySpectrum::operator+=(const EnergySpectrum& other) {
  for (const auto& [energy, count] : other.terms_) add_term(energy, count);
  return *this;
}

EnergySpectrum& EnergySpectrum::operator-=(const EnergySpectrum& other) {
  for (const auto& [energy, count] : other.terms_) add_term(energy, -count);
  return *this;
}

EnergySpectrum add(const EnergySpectrum& a, const EnergySpectrum& b) {
  EnergySpectrum out = a;
  out += b;
  return out;
}

EnergySpectrum subtract(const EnergySpectrum& a, const EnergySpectrum& b) {
  EnergySpectrum out = a;
  out -= b;
  return out;
}

EnergySpectrum shift(const EnergySpectrum& a, const Rational& dE) {
  EnergySpectrum out;
  for (const auto& [energy, count] : a.terms()) out.add_term(energy + dE, count);
  return out;
}

EnergySpectrum convolve(const EnergySpectrum& a, const EnergySpectrum& b) {
  EnergySpectrum out;
  for (const auto& [ea, na] : a.terms()) {
    for (const auto& [eb, nb] : b.terms()) out.add_term(ea + eb, na * nb);
  }
  return out;
}

EnergySpectrum scale(const EnergySpectrum& a, const Rational& c) {
  EnergySpectrum out;
  if (c == 0) return out;
  for (const auto& [energy, count] : a.terms()) out.add_term(energy, count * c);
  return out;
}

double evaluate(const EnergySpectrum& a, const InverseTemperature& beta) {
  const double b = beta.value();
  double sum = 0.0;
  for (const auto& [energy, count] : a.terms()) {
    sum += count.convert_to<double>() * std::exp(-b * energy.convert_to<double>());
  }
  return sum;
}

Real evaluate_high_precision(const EnergySpectrum& a, const InverseTemperature& beta, unsigned digits) {
  PrecisionScope scope(digits);
  const Real b = to_real(beta.exact());
  Real sum = 0;
  for (const auto& [energy, count] : a.terms()) {
    sum += to_real(count) * exp(-b * to_real(energy));
  }
  return sum;
}

Rational evaluate_rational(const EnergySpectrum& a, const Rational& unit, const Rational& tau) {
  if (unit == 0) {
    throw ValidationError("rational evaluation needs a nonzero energy unit");
  }
  if (tau == 0) {
    throw ValidationError("rational evaluation needs a nonzero Boltzmann factor");
  }
  Rational sum = 0;
  for (const auto& [energy, count] : a.terms()) {
    const Rational ratio = energy / unit;
    if (!is_integer(ratio)) {
      throw ValidationError("energy " + to_string(energy) + " is not a multiple of " + to_string(unit));
    }
    const long exponent = boost::multiprecision::numerator(ratio).convert_to<long>();
    const Rational base = exponent >= 0 ? tau : Rational(1) / tau;
    sum += count * power(base, static_cast<unsigned>(exponent >= 0 ? exponent : -exponent));
  }
  return sum;
}

std::ostream& operator<<(std::ostream& os, const EnergySpectrum& a) {
  os << '{';
  bool first = true;
  for (const auto& [energy, count] : a.terms()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(energy) << ':' << to_string(count);
  }
  return os << '}';
}

}  // namespace spinchain
