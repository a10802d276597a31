#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinchain/model.hpp"

namespace spinchain {

struct NamedProfile {
  std::string name;
  InteractionProfile profile;
};

/// Mirror-symmetric table on [1 - extent, extent] whose couplings on x >= 1
/// are pairwise distinct rationals p/q, 1 <= p <= 9, 1 <= q <= 4, drawn from a
/// fixed-seed mt19937_64. Past the 25 such values the integers 10, 11, ... are
/// used in order.
InteractionProfile random_symmetric_profile(long extent, std::uint64_t seed);

/// The reference set used by `verify` and the acceptance suite, every member
/// mirror-symmetric on [1 - extent, extent]:
///   constant      I = 1
///   periodic      I_x = [1, 2][x mod 2] for x >= 1, mirrored onto x <= 0
///   random        random_symmetric_profile(extent, kBuiltinSeed)
std::vector<NamedProfile> builtin_profiles(long extent);

inline constexpr std::uint64_t kBuiltinSeed = 20090401;

}  // namespace spinchain
