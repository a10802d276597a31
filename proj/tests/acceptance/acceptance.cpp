// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and time
// budgets are fixed below; the process exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinchain/builtin.hpp"
#include "spinchain/chi_poly.hpp"
#include "spinchain/crystal.hpp"
#include "spinchain/error.hpp"
#include "spinchain/gibbs.hpp"
#include "spinchain/global_recursion.hpp"
#include "spinchain/json_io.hpp"
#include "spinchain/oracle.hpp"

namespace {

using namespace spinchain;
using Clock = std::chrono::steady_clock;

constexpr double kFloatTolerance = 1e-12;
constexpr double kRatioRelativeTolerance = 1e-9;
constexpr double kNormalizationTolerance = 1e-12;
constexpr double kBudgetGlobalSeconds = 10.0;
constexpr double kBudgetCrystalSeconds = 60.0;
constexpr double kBudgetIdentitySeconds = 10.0;
constexpr long kGlobalMaxN = 4;
constexpr std::size_t kCrystalMaxLength = 10;
constexpr long kPolyMaxN = 30;
constexpr long kRecurrenceMaxN = 40;
constexpr long kVandermondeMaxN = 50;
constexpr long kPlacementMaxN = 10;
constexpr const char* kCounterexamplePath = "printed_variant_counterexample.json";

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(Outcome& o) : o_(o) {}
  void require(bool ok, const std::string& what) {
    if (!ok && o_.pass) {
      o_.pass = false;
      o_.detail = what;
    }
  }

 private:
  Outcome& o_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// 1 ------------------------------------------------------------------------

Outcome global_equivalence() {
  Outcome o;
  Criterion c(o);
  const auto start = Clock::now();
  for (const auto& [name, profile] : builtin_profiles(kGlobalMaxN + 1)) {
    const auto recursive = recurse_global(kGlobalMaxN, profile);
    for (long n = 0; n <= kGlobalMaxN; ++n) {
      const auto closed = closed_form_global(n, profile);
      const auto plus = enumerate_global(n, profile, GlobalBoundary::plus);
      const auto pm = enumerate_global(n, profile, GlobalBoundary::plus_minus);
      const std::string where = name + " n=" + std::to_string(n);
      c.require(plus == recursive[n].z_plus && plus == closed.z_plus, "Z+ differs: " + where);
      c.require(pm == recursive[n].z_pm && pm == closed.z_pm, "Z+- differs: " + where);
    }
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < kBudgetGlobalSeconds, "took " + fmt(elapsed) + " s");
  if (o.pass) o.detail = "3 profiles, n=0.." + std::to_string(kGlobalMaxN) + ", " + fmt(elapsed) + " s";
  return o;
}

// 2 ------------------------------------------------------------------------

Outcome single_site_and_ratio() {
  Outcome o;
  Criterion c(o);
  const auto one = InteractionProfile::constant(1);
  const Rational tau(1, 2);
  const auto base = closed_form_global(0, one);
  c.require(evaluate_rational(base.z_plus, 1, tau) == Rational(5, 4), "Z+_0(tau=1/2) != 5/4");
  c.require(evaluate_rational(base.z_pm, 1, tau) == Rational(1), "Z+-_0(tau=1/2) != 1");
  const InverseTemperature beta(std::log(2.0));
  c.require(std::abs(evaluate(base.z_plus, beta) - 1.25) < kFloatTolerance, "float Z+_0 off");
  c.require(std::abs(evaluate(base.z_pm, beta) - 1.0) < kFloatTolerance, "float Z+-_0 off");

  // Prediction at n = 6: 2 (1/3)^14 / (1 - (1/3)^14).
  const Rational third(1, 3);
  const Rational predicted = 2 * power(third, 14) / (1 - power(third, 14));
  const auto six = closed_form_global(6, one);
  const Rational exact = evaluate_rational(six.z_plus, 1, tau) / evaluate_rational(six.z_pm, 1, tau) - 1;
  c.require(exact == predicted, "exact ratio-1 at n=6 differs from prediction");
  const auto ratios = ratio_sequence(6, one, beta, 40);
  const double measured = (ratios[6] - 1).convert_to<double>();
  const double target = predicted.convert_to<double>();
  const double rel = std::abs(measured - target) / target;
  c.require(rel < kRatioRelativeTolerance, "ratio-1 relative error " + fmt(rel));
  if (o.pass) o.detail = "|Z+_6/Z+-_6 - 1| = " + fmt(measured) + ", relative error " + fmt(rel);
  return o;
}

// 3 ------------------------------------------------------------------------

struct Counterexample {
  bool found = false;
  nlohmann::ordered_json json;
};

/// First (r, row) where the as-printed table disagrees with brute force on a
/// two-site window whose three couplings are pairwise distinct.
Counterexample printed_counterexample(const InteractionProfile& profile, long lo, long hi) {
  for (long m = lo; m + 2 <= hi; ++m) {
    const auto& a = profile.coupling_at(m);
    const auto& b = profile.coupling_at(m + 1);
    const auto& d = profile.coupling_at(m + 2);
    if (a == b || b == d || a == d) continue;
    const Interval window(m, m + 1);
    const auto printed = build_tables(window, profile, RecursionVariant::as_printed);
    {
      const std::size_t l = 2;
      const Interval& prefix = window;
      for (std::size_t r = 0; r <= l; ++r) {
        const std::array<std::tuple<const char*, EnergySpectrum, EnergySpectrum>, 2> rows{{
            {"X (+,+), r spins -1", printed.x(l, r), enumerate_crystal(prefix, profile, BoundaryPair::plus(), r, Spin::down)},
            {"Y (-,+), r spins +1", printed.y(l, r),
             enumerate_crystal(prefix, profile, BoundaryPair::plus_minus(), r, Spin::up)},
        }};
        for (const auto& [label, got, expected] : rows) {
          if (got == expected) continue;
          Counterexample ce;
          ce.found = true;
          ce.json = {{"window", {{"m", m}, {"n", m + 1}}},
                     {"couplings", {{"I_m", to_string(a)}, {"I_m+1", to_string(b)}, {"I_m+2", to_string(d)}}},
                     {"prefix_length", l},
                     {"r", r},
                     {"entry", label},
                     {"as_printed", spectrum_to_json(got)},
                     {"brute_force", spectrum_to_json(expected)}};
          return ce;
        }
      }
    }
  }
  return {};
}

Outcome crystal_equivalence() {
  Outcome o;
  Criterion c(o);
  const auto start = Clock::now();
  const long extent = static_cast<long>(kCrystalMaxLength) + 6;
  const auto profiles = builtin_profiles(extent);
  for (const auto& [name, profile] : profiles) {
    for (const long m : {-4L, 1L}) {
      const Interval window(m, m + static_cast<long>(kCrystalMaxLength) - 1);
      const auto table = build_tables(window, profile);
      for (std::size_t l = 0; l <= kCrystalMaxLength; ++l) {
        const Interval prefix(m, m + static_cast<long>(l) - 1);
        for (std::size_t r = 0; r <= l; ++r) {
          const std::string where = name + " m=" + std::to_string(m) + " l=" + std::to_string(l) + " r=" +
                                    std::to_string(r);
          c.require(table.x(l, r) == enumerate_crystal(prefix, profile, BoundaryPair::plus(), r, Spin::down),
                    "X differs: " + where);
          c.require(table.y(l, r) == enumerate_crystal(prefix, profile, BoundaryPair::plus_minus(), r, Spin::up),
                    "Y differs: " + where);
        }
      }
    }
  }

  const auto ce = printed_counterexample(profiles[2].profile, 1, extent);
  c.require(ce.found, "no counterexample to the as-printed variant was found");
  if (ce.found) {
    std::ofstream(kCounterexamplePath) << ce.json.dump(2) << '\n';
    std::cout << "  as-printed counterexample (" << kCounterexamplePath << "): " << ce.json.dump() << '\n';
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < kBudgetCrystalSeconds, "took " + fmt(elapsed) + " s");
  if (o.pass) o.detail = "3 profiles, lengths 0.." + std::to_string(kCrystalMaxLength) + ", " + fmt(elapsed) + " s";
  return o;
}

// 4 ------------------------------------------------------------------------

Outcome initial_conditions() {
  Outcome o;
  Criterion c(o);
  // I_m = 1, I_{m+1} = 10, I_{m+2} = 100 make every bond sum distinct.
  const long m = 3;
  const auto p = InteractionProfile::table(m, {Rational(1), Rational(10), Rational(100)});
  const auto plus = BoundaryPair::plus();
  auto crystal = [&](long last, std::size_t r) { return enumerate_crystal(Interval(m, last), p, plus, r, Spin::down); };
  auto expect = [](std::initializer_list<long> energies) {
    EnergySpectrum s;
    for (long e : energies) s.add_term(e, 1);
    return s;
  };
  c.require(crystal(m, 0) == expect({0}), "X^0_{m,m}");
  c.require(crystal(m, 1) == expect({1 + 10}), "X^1_{m,m}");
  c.require(crystal(m + 1, 0) == expect({0}), "X^0_{m,m+1}");
  c.require(crystal(m + 1, 1) == expect({1 + 10, 10 + 100}), "X^1_{m,m+1}");
  c.require(crystal(m + 1, 2) == expect({1 + 100}), "X^2_{m,m+1}");
  const auto down = [](std::size_t k) { return std::vector<Spin>(k, Spin::down); };
  c.require(window_energy(SpinConfiguration(Interval(m, m), down(1)), p, plus) == 11, "H(-) on [m,m]");
  c.require(window_energy(SpinConfiguration(Interval(m, m + 1), down(2)), p, plus) == 101, "H(-,-) on [m,m+1]");
  if (o.pass) o.detail = "5 of 5 values";
  return o;
}

// 5 ------------------------------------------------------------------------

Outcome ising_identities() {
  Outcome o;
  Criterion c(o);
  const auto start = Clock::now();
  const auto table = x_recursive_table(kPolyMaxN);
  for (long n = 0; n <= kPolyMaxN; ++n) {
    for (long r = 0; r <= n; ++r) {
      const auto closed = x_closed(n, r);
      c.require(closed == table[n][r], "x_recursive != x_closed at " + std::to_string(n) + "," + std::to_string(r));
      c.require(closed.value_at_one() == binomial(n, r), "chi=1 evaluation at " + std::to_string(n));
    }
  }
  for (long n = 2; n <= kRecurrenceMaxN; ++n) {
    for (long r = 1; r <= n; ++r) {
      for (long k = 1; k <= r; ++k) {
        c.require(coefficient_recurrence_holds(coefficient_closed_or_zero, n, r, k),
                  "coefficient recurrence at " + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k));
      }
    }
  }
  for (long n = 0; n <= kVandermondeMaxN; ++n) {
    for (long r = 0; r <= n; ++r) c.require(vandermonde_check(n, r), "vandermonde at " + std::to_string(n));
  }
  using P = SqrtChiPolynomial;
  for (long n = 5; n <= 10; ++n) {
    const auto chi = [](unsigned k, long coeff) { return P::chi_power(k, coeff); };
    c.require(table[n][0] == P::constant(1), "explicit X^0");
    c.require(table[n][1] == chi(1, n), "explicit X^1");
    c.require(table[n][2] == chi(1, n - 1) + chi(2, (n - 2) * (n - 1) / 2), "explicit X^2");
    c.require(table[n][3] == chi(1, n - 2) + chi(2, (n - 2) * (n - 3)) + chi(3, (n - 2) * (n - 3) * (n - 4) / 6),
              "explicit X^3");
    c.require(table[n][4] == chi(1, n - 3) + chi(2, 3 * (n - 3) * (n - 4) / 2) +
                                 chi(3, (n - 3) * (n - 4) * (n - 5) / 2) +
                                 chi(4, (n - 3) * (n - 4) * (n - 5) * (n - 6) / 24),
              "explicit X^4");
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < kBudgetIdentitySeconds, "took " + fmt(elapsed) + " s");
  if (o.pass) o.detail = fmt(elapsed) + " s";
  return o;
}

// 6 ------------------------------------------------------------------------

Outcome y_placement() {
  Outcome o;
  Criterion c(o);
  const auto report = resolve_y_placement(kPlacementMaxN);
  c.require(report.validated_passes, "validated Y placement disagrees with brute force");
  std::string printed_11;
  try {
    (void)y_closed_printed(1, 1);
    c.require(false, "printed placement at (1,1) divided exactly");
  } catch (const ConsistencyError&) {
    printed_11 = "s^-1 (" + (x_closed(2, 1) - x_closed(1, 0)).str() + ")";
  }
  c.require(!report.printed_passes, "printed placement unexpectedly passed");
  if (o.pass) {
    std::cout << "  printed placement at (n=1, r=1): " << printed_11 << " is not a polynomial\n";
    std::cout << "  first printed failure: " << report.printed_failure << '\n';
    o.detail = std::to_string(report.checked) + " entries exact; printed placement fails at (1,1)";
  }
  return o;
}

// 7 ------------------------------------------------------------------------

/// 1 / lcm of the coupling denominators on the window's bonds, so that every
/// energy is an integer multiple of it.
Rational common_unit(const InteractionProfile& profile, const Interval& w) {
  Integer l = 1;
  for (const auto& q : window_couplings(profile, w)) l = lcm(l, Integer(boost::multiprecision::denominator(q)));
  return Rational(1) / Rational(l);
}

Outcome completeness() {
  Outcome o;
  Criterion c(o);
  const InverseTemperature beta(Rational(3, 5));
  double worst = 0.0;
  for (const auto& [name, profile] : builtin_profiles(static_cast<long>(kCrystalMaxLength) + 2)) {
    for (std::size_t len = 1; len <= kCrystalMaxLength; ++len) {
      const Interval w(1, static_cast<long>(len));
      for (const auto b : {BoundaryPair::plus(), BoundaryPair::plus_minus(), BoundaryPair::minus(),
                           BoundaryPair{Spin::up, Spin::down}}) {
        EnergySpectrum total;
        for (std::size_t r = 0; r <= len; ++r) total += enumerate_crystal(w, profile, b, r, flip(b.left));
        c.require(total == enumerate_window(w, profile, b), "sum over r != window partition: " + name);

        Real sum = 0;
        for (const auto& p : magnetization_distribution(w, profile, b, beta)) sum += p;
        const double err = std::abs((sum - 1).convert_to<double>());
        worst = std::max(worst, err);
        c.require(err < kNormalizationTolerance, "distribution sums to 1 +- " + fmt(err));

        const auto flat = magnetization_distribution_exact(w, profile, b, common_unit(profile, w), 1);
        const Rational all = Rational(Integer(1) << len);
        for (std::size_t r = 0; r <= len; ++r) {
          c.require(flat[r] == Rational(binomial(static_cast<long>(len), static_cast<long>(r))) / all,
                    "beta=0 weight at r=" + std::to_string(r));
        }
      }
    }
  }
  if (o.pass) o.detail = "worst normalization error " + fmt(worst);
  return o;
}

// 8 ------------------------------------------------------------------------

bool capture(const std::string& command, std::string& output) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buffer{};
  output.clear();
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  return pclose(pipe) == 0;
}

Outcome determinism() {
  Outcome o;
  Criterion c(o);
  const std::string command = std::string("\"") + SPINCHAIN_CLI_PATH + "\" verify --nmax 3 --profiles builtin";
  std::string first, second;
  c.require(capture(command, first), "first verify run failed");
  c.require(capture(command, second), "second verify run failed");
  c.require(!first.empty() && first == second, "outputs differ");
  if (o.pass) o.detail = std::to_string(first.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 global oracle equivalence", global_equivalence},
      {"2 single-site values and asymptotic ratio", single_site_and_ratio},
      {"3 crystal oracle equivalence", crystal_equivalence},
      {"4 crystal initial conditions", initial_conditions},
      {"5 homogeneous-chain identities", ising_identities},
      {"6 Y placement resolution", y_placement},
      {"7 completeness and normalization", completeness},
      {"8 verify determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << " -- " << outcome.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
