#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "spinchain/model.hpp"
#include "spinchain/spectrum.hpp"

namespace spinchain {

/// Which index placement the right-extension recursion uses.
///
/// With X^r_l = (+,+) windows holding r spins -1 and Y^r_l = (-,+) windows
/// holding r spins +1, adding site n = m + l - 1 on the right with bond
/// factor e = e^{-b I_{n+1}}:
///
///   oracle_validated:  X^r_l = X^r_{l-1}     + e Y^{r-1}_{l-1}
///                      Y^r_l = Y^{r-1}_{l-1} + e X^r_{l-1}
///   as_printed:        X^r_l = X^{r-1}_{l-1} + e Y^r_{l-1}
///                      Y^r_l = Y^r_{l-1}     + e X^{r-1}_{l-1}
///
/// The as_printed placement reproduces neither the single-site values nor the
/// two-site values of the oracle and is kept only to exhibit that.
enum class RecursionVariant { oracle_validated, as_printed };

std::string_view to_string(RecursionVariant variant);
RecursionVariant parse_variant(std::string_view text);

/// Crystal partition functions for every prefix [m, m + l - 1] of a window,
/// l = 0..size. Rows are indexed by length l, columns by r = 0..l.
class CrystalTable {
 public:
  CrystalTable(Interval window, RecursionVariant variant, std::vector<Rational> couplings,
               std::vector<std::vector<EnergySpectrum>> x, std::vector<std::vector<EnergySpectrum>> y);

  const Interval& window() const { return window_; }
  RecursionVariant variant() const { return variant_; }
  std::size_t max_length() const { return x_.size() - 1; }

  /// Empty spectrum for r > length.
  const EnergySpectrum& x(std::size_t length, std::size_t r) const;
  const EnergySpectrum& y(std::size_t length, std::size_t r) const;

  const std::vector<EnergySpectrum>& x_row(std::size_t length) const;
  const std::vector<EnergySpectrum>& y_row(std::size_t length) const;

  /// I_{m + i}, i = 0..size + 1 - 1.
  const Rational& coupling(std::size_t i) const { return couplings_.at(i); }

 private:
  Interval window_;
  RecursionVariant variant_;
  std::vector<Rational> couplings_;
  std::vector<std::vector<EnergySpectrum>> x_;
  std::vector<std::vector<EnergySpectrum>> y_;
};

/// Builds every row, starting from the empty window:
/// X^0_0 = 1 and Y^0_0 = e^{-b I_m}.
CrystalTable build_tables(const Interval& window, const InteractionProfile& profile,
                          RecursionVariant variant = RecursionVariant::oracle_validated);

/// Only the full-window row; memory is two rows regardless of window length.
struct CrystalRow {
  std::size_t length = 0;
  std::vector<EnergySpectrum> x;
  std::vector<EnergySpectrum> y;
};

CrystalRow build_final_row(const Interval& window, const InteractionProfile& profile,
                           RecursionVariant variant = RecursionVariant::oracle_validated);

/// Y entry recovered from two X rows by solving the X update for Y, using
/// the table's placement:
///   oracle_validated:  Y^r_l = e^{+b I} (X^{r+1}_{l+1} - X^{r+1}_l)
///   as_printed:        Y^r_l = e^{+b I} (X^r_{l+1} - X^{r-1}_l)
/// with I = I_{m + l + 1}. Needs l < max_length (RangeError otherwise) and
/// throws ConsistencyError if the result differs from the stored entry.
EnergySpectrum y_from_x(const CrystalTable& table, std::size_t r, std::size_t length);

/// X rows from the second-order X-only recursion, I = I_n, J = I_{n+1}:
///   oracle_validated:  X^r_l = X^r_{l-1} + e^{-b(J-I)} (X^{r-1}_{l-1} - X^{r-1}_{l-2}) + e^{-b(I+J)} X^{r-1}_{l-2}
///   as_printed:        X^r_l = X^{r-1}_{l-1} + e^{-b(J-I)} (X^r_{l-1} - X^{r-1}_{l-2}) + e^{-b(I+J)} X^{r-1}_{l-2}
/// seeded with the empty window and the one- and two-site values
/// X^1_{m,m} = e^{-b(I_m + I_{m+1})}, X^1_{m,m+1} = e^{-b(I_m+I_{m+1})} + e^{-b(I_{m+1}+I_{m+2})},
/// X^2_{m,m+1} = e^{-b(I_m + I_{m+2})}. Result is indexed [l][r].
std::vector<std::vector<EnergySpectrum>> reduced_recursion(
    const Interval& window, const InteractionProfile& profile,
    RecursionVariant variant = RecursionVariant::oracle_validated);

}  // namespace spinchain
