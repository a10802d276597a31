#include "spinchain/crystal.hpp"

#include <string>
#include <utility>

#include "spinchain/error.hpp"

namespace spinchain {
namespace {

const EnergySpectrum kEmpty{};

using Row = std::vector<EnergySpectrum>;

const EnergySpectrum& entry(const Row& row, long r) {
  if (r < 0 || r >= static_cast<long>(row.size())) return kEmpty;
  return row[static_cast<std::size_t>(r)];
}

/// One right extension: rows of length l - 1 to rows of length l, with the
/// bond factor of the new right boundary bond `coupling`.
std::pair<Row, Row> extend(const Row& x_prev, const Row& y_prev, const Rational& coupling,
                           RecursionVariant variant) {
  const std::size_t length = x_prev.size();
  Row x(length + 1);
  Row y(length + 1);
  for (std::size_t r = 0; r <= length; ++r) {
    const long rr = static_cast<long>(r);
    if (variant == RecursionVariant::oracle_validated) {
      x[r] = add(entry(x_prev, rr), shift(entry(y_prev, rr - 1), coupling));
      y[r] = add(entry(y_prev, rr - 1), shift(entry(x_prev, rr), coupling));
    } else {
      x[r] = add(entry(x_prev, rr - 1), shift(entry(y_prev, rr), coupling));
      y[r] = add(entry(y_prev, rr), shift(entry(x_prev, rr - 1), coupling));
    }
  }
  return {std::move(x), std::move(y)};
}

void require_nonempty(const Interval& window) {
  if (window.empty()) throw ValidationError("crystal tables need a nonempty window");
}

}  // namespace

std::string_view to_string(RecursionVariant variant) {
  return variant == RecursionVariant::oracle_validated ? "oracle" : "printed";
}

RecursionVariant parse_variant(std::string_view text) {
  if (text == "oracle" || text == "oracle-validated") return RecursionVariant::oracle_validated;
  if (text == "printed" || text == "as-printed") return RecursionVariant::as_printed;
  throw ValidationError("unknown recursion variant '" + std::string(text) + "' (expected oracle|printed)");
}

CrystalTable::CrystalTable(Interval window, RecursionVariant variant, std::vector<Rational> couplings,
                           std::vector<Row> x, std::vector<Row> y)
    : window_(window), variant_(variant), couplings_(std::move(couplings)), x_(std::move(x)), y_(std::move(y)) {}

const EnergySpectrum& CrystalTable::x(std::size_t length, std::size_t r) const {
  return entry(x_row(length), static_cast<long>(r));
}

const EnergySpectrum& CrystalTable::y(std::size_t length, std::size_t r) const {
  return entry(y_row(length), static_cast<long>(r));
}

const Row& CrystalTable::x_row(std::size_t length) const {
  if (length >= x_.size()) throw RangeError("table has no row of length " + std::to_string(length));
  return x_[length];
}

const Row& CrystalTable::y_row(std::size_t length) const {
  if (length >= y_.size()) throw RangeError("table has no row of length " + std::to_string(length));
  return y_[length];
}

CrystalTable build_tables(const Interval& window, const InteractionProfile& profile, RecursionVariant variant) {
  require_nonempty(window);
  auto couplings = window_couplings(profile, window);
  std::vector<Row> xs{{EnergySpectrum::single(0)}};
  std::vector<Row> ys{{EnergySpectrum::single(couplings.front())}};
  for (std::size_t l = 1; l <= window.size(); ++l) {
    auto [x, y] = extend(xs.back(), ys.back(), couplings[l], variant);
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  return CrystalTable(window, variant, std::move(couplings), std::move(xs), std::move(ys));
}

CrystalRow build_final_row(const Interval& window, const InteractionProfile& profile, RecursionVariant variant) {
  require_nonempty(window);
  Row x{EnergySpectrum::single(0)};
  Row y{EnergySpectrum::single(profile.coupling_at(window.m()))};
  for (std::size_t l = 1; l <= window.size(); ++l) {
    auto next = extend(x, y, profile.coupling_at(window.m() + static_cast<long>(l)), variant);
    x = std::move(next.first);
    y = std::move(next.second);
  }
  return {window.size(), std::move(x), std::move(y)};
}

EnergySpectrum y_from_x(const CrystalTable& table, std::size_t r, std::size_t length) {
  if (length >= table.max_length()) {
    throw RangeError("y_from_x needs the X row of length " + std::to_string(length + 1));
  }
  if (r > length) return {};
  const Rational& coupling = table.coupling(length + 1);
  const long rr = static_cast<long>(r);
  const auto& longer = table.x_row(length + 1);
  const auto& shorter = table.x_row(length);
  EnergySpectrum diff = table.variant() == RecursionVariant::oracle_validated
                            ? subtract(entry(longer, rr + 1), entry(shorter, rr + 1))
                            : subtract(entry(longer, rr), entry(shorter, rr - 1));
  EnergySpectrum y = shift(diff, -coupling);
  if (y != table.y(length, r)) {
    throw ConsistencyError("Y^" + std::to_string(r) + " of length " + std::to_string(length) +
                           " recovered from X disagrees with the stored entry");
  }
  return y;
}

std::vector<Row> reduced_recursion(const Interval& window, const InteractionProfile& profile,
                                   RecursionVariant variant) {
  require_nonempty(window);
  const long m = window.m();
  const auto coupling = [&](long x) -> const Rational& { return profile.coupling_at(x); };

  std::vector<Row> xs;
  xs.push_back({EnergySpectrum::single(0)});
  xs.push_back({EnergySpectrum::single(0), EnergySpectrum::single(coupling(m) + coupling(m + 1))});
  if (window.size() >= 2) {
    EnergySpectrum one_down = EnergySpectrum::single(coupling(m) + coupling(m + 1));
    one_down.add_term(coupling(m + 1) + coupling(m + 2), 1);
    xs.push_back({EnergySpectrum::single(0), std::move(one_down),
                  EnergySpectrum::single(coupling(m) + coupling(m + 2))});
  }
  for (std::size_t l = 3; l <= window.size(); ++l) {
    const long n = m + static_cast<long>(l) - 1;
    const Rational& inner = coupling(n);
    const Rational& outer = coupling(n + 1);
    const Row& prev = xs[l - 1];
    const Row& prev2 = xs[l - 2];
    Row row(l + 1);
    row[0] = EnergySpectrum::single(0);
    for (std::size_t r = 1; r <= l; ++r) {
      const long rr = static_cast<long>(r);
      const bool validated = variant == RecursionVariant::oracle_validated;
      const EnergySpectrum& carried = validated ? entry(prev, rr) : entry(prev, rr - 1);
      const EnergySpectrum& swapped = validated ? entry(prev, rr - 1) : entry(prev, rr);
      EnergySpectrum value = carried;
      value += shift(subtract(swapped, entry(prev2, rr - 1)), outer - inner);
      value += shift(entry(prev2, rr - 1), inner + outer);
      row[r] = std::move(value);
    }
    xs.push_back(std::move(row));
  }
  xs.resize(window.size() + 1);
  return xs;
}

}  // namespace spinchain
