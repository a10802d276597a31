#include "spinchain/global_recursion.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "brute_force.hpp"
#include "spinchain/builtin.hpp"
#include "spinchain/error.hpp"
#include "spinchain/oracle.hpp"

namespace spinchain {
namespace {

const InteractionProfile kOne = InteractionProfile::constant(1);

/// Constant-coupling values at tau = e^{-b}, written out directly.
Rational tau_plus(long n, const Rational& tau) {
  const unsigned e = static_cast<unsigned>(2 * (n + 1));
  return (power(1 + tau, e) + power(1 - tau, e)) / 2;
}

Rational tau_pm(long n, const Rational& tau) {
  const unsigned e = static_cast<unsigned>(2 * (n + 1));
  return (power(1 + tau, e) - power(1 - tau, e)) / 2;
}

TEST(RecurseGlobal, BaseCase) {
  const auto seq = recurse_global(0, kOne);
  ASSERT_EQ(seq.size(), 1u);
  EnergySpectrum plus;
  plus.add_term(0, 1);
  plus.add_term(2, 1);
  EXPECT_EQ(seq[0].z_plus, plus);
  EXPECT_EQ(seq[0].z_pm, EnergySpectrum::single(1, 2));
}

TEST(RecurseGlobal, MatchesEnumerationOnBuiltinProfiles) {
  for (const auto& [name, profile] : builtin_profiles(6)) {
    const auto seq = recurse_global(3, profile);
    for (long n = 0; n <= 3; ++n) {
      EXPECT_EQ(seq[n].z_plus, testing::naive_global(n, profile, false)) << name << " n=" << n;
      EXPECT_EQ(seq[n].z_pm, testing::naive_global(n, profile, true)) << name << " n=" << n;
    }
  }
}

TEST(RecurseGlobal, TotalsAtTwoSites) {
  const auto seq = recurse_global(2, kOne);
  EXPECT_EQ(seq[2].z_plus.total_multiplicity(), 32);
  EXPECT_EQ(seq[2].z_pm.total_multiplicity(), 32);
}

TEST(RecurseGlobal, RejectsAsymmetricProfile) {
  const auto p = InteractionProfile::table(-3, {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5),
                                                Rational(6), Rational(7), Rational(8)});
  EXPECT_THROW(recurse_global(2, p), ValidationError);
  EXPECT_THROW(closed_form_global(2, p), ValidationError);
}

TEST(ClosedForm, EqualsRecursionOnBuiltinProfiles) {
  for (const auto& [name, profile] : builtin_profiles(8)) {
    const auto rec = recurse_global(6, profile);
    const auto closed = closed_form_sequence(6, profile);
    for (long n = 0; n <= 6; ++n) {
      EXPECT_EQ(rec[n], closed[n]) << name << " n=" << n;
      EXPECT_EQ(closed_form_global(n, profile), closed[n]) << name << " n=" << n;
    }
  }
}

TEST(ClosedForm, TauFormulasAtHalf) {
  const Rational tau(1, 2);
  const auto pair = closed_form_global(0, kOne);
  EXPECT_EQ(evaluate_rational(pair.z_plus, 1, tau), Rational(5, 4));
  EXPECT_EQ(evaluate_rational(pair.z_pm, 1, tau), Rational(1));
  for (long n = 0; n <= 8; ++n) {
    const auto p = closed_form_global(n, kOne);
    EXPECT_EQ(evaluate_rational(p.z_plus, 1, tau), tau_plus(n, tau)) << n;
    EXPECT_EQ(evaluate_rational(p.z_pm, 1, tau), tau_pm(n, tau)) << n;
  }
}

TEST(ClosedForm, DifferenceAndSumAreProducts) {
  const auto p = closed_form_global(3, kOne);
  const Rational tau(1, 3);
  EXPECT_EQ(evaluate_rational(p.sum(), 1, tau), power(1 + tau, 8));
  EXPECT_EQ(evaluate_rational(p.difference(), 1, tau), power(1 - tau, 8));
}

TEST(RatioSequence, ConstantCouplingAtHalf) {
  const InverseTemperature beta(std::log(2.0));
  const auto ratios = ratio_sequence(6, kOne, beta, 40);
  EXPECT_NEAR(ratios[0].convert_to<double>(), 1.25, 1e-12);
  // ratio - 1 = 2 (1-t)^{2(n+1)} / ((1+t)^{2(n+1)} - (1-t)^{2(n+1)}) = 2 / (3^{2(n+1)} - 1) at t = 1/2
  const double expected = 2.0 / (std::pow(3.0, 14) - 1.0);
  EXPECT_NEAR((ratios[6] - 1).convert_to<double>() / expected, 1.0, 1e-9);
  EXPECT_NEAR((ratios[6] - 1).convert_to<double>(), 4.18e-7, 1e-9);
}

TEST(RatioSequence, PeriodicProfileDecreasesToOne) {
  const auto profile = builtin_profiles(12)[1].profile;
  const auto ratios = ratio_sequence(10, profile, InverseTemperature(Rational(1, 2)), 50);
  for (std::size_t n = 1; n < ratios.size(); ++n) {
    EXPECT_LT(abs(ratios[n] - 1), abs(ratios[n - 1] - 1)) << n;
  }
}

TEST(NumericRecursion, AgreesWithExactRatio) {
  const InverseTemperature beta(0.7);
  const auto ratios = ratio_sequence(20, kOne, beta, 40);
  const auto numeric = recurse_global_numeric(20, kOne, beta);
  EXPECT_EQ(numeric.n, 20);
  EXPECT_TRUE(testing::close_relative(numeric.ratio, ratios[20].convert_to<double>(), 1e-12));
  const double z_plus = evaluate(closed_form_global(20, kOne).z_plus, beta);
  EXPECT_TRUE(testing::close_relative(numeric.log_z_plus, std::log(z_plus), 1e-12));
}

TEST(NumericRecursion, LongChainStaysFinite) {
  const auto numeric = recurse_global_numeric(100000, kOne, InverseTemperature(1.0));
  EXPECT_TRUE(std::isfinite(numeric.log_z_plus));
  EXPECT_NEAR(numeric.ratio, 1.0, 1e-12);
}

}  // namespace
}  // namespace spinchain
