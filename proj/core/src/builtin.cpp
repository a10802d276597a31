#include "spinchain/builtin.hpp"

#include <algorithm>
#include <random>

namespace spinchain {

InteractionProfile random_symmetric_profile(long extent, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<Rational> candidates;
  for (long p = 1; p <= 9; ++p) {
    for (long q = 1; q <= 4; ++q) {
      Rational value(p, q);
      if (std::find(candidates.begin(), candidates.end(), value) == candidates.end()) candidates.push_back(value);
    }
  }
  std::vector<Rational> positive;
  // Raw engine output keeps the draws identical across standard libraries.
  while (static_cast<long>(positive.size()) < extent) {
    const auto p = static_cast<long>(engine() % 9) + 1;
    const auto q = static_cast<long>(engine() % 4) + 1;
    Rational value(p, q);
    if (std::find(positive.begin(), positive.end(), value) == positive.end()) positive.push_back(std::move(value));
    if (positive.size() == candidates.size()) break;
  }
  while (static_cast<long>(positive.size()) < extent) {
    positive.push_back(Rational(10 + static_cast<long>(positive.size() - candidates.size())));
  }

  std::vector<Rational> values;
  for (long x = 1 - extent; x <= extent; ++x) values.push_back(positive[static_cast<std::size_t>((x >= 1 ? x : 1 - x) - 1)]);
  return InteractionProfile::table(1 - extent, std::move(values));
}

std::vector<NamedProfile> builtin_profiles(long extent) {
  return {
      {"constant", InteractionProfile::constant(1)},
      {"periodic", symmetrized(InteractionProfile::periodic({Rational(1), Rational(2)}), extent)},
      {"random", random_symmetric_profile(extent, kBuiltinSeed)},
  };
}

}  // namespace spinchain
