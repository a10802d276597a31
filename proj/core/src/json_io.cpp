#include "spinchain/json_io.hpp"

#include <fstream>

#include "spinchain/error.hpp"

namespace spinchain {
namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ValidationError("expected a rational string, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw ValidationError(std::string("profile JSON is missing \"") + name + "\"");
  return *it;
}

}  // namespace

InteractionProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("profile JSON must be an object");
  const auto& kind = field(j, "kind");
  if (!kind.is_string()) throw ValidationError("profile \"kind\" must be a string");
  const auto name = kind.get<std::string>();
  if (name == "constant") return InteractionProfile::constant(rational_from_json(field(j, "value")));
  if (name == "periodic") return InteractionProfile::periodic(rationals_from_json(field(j, "values")));
  if (name == "table") {
    const auto& offset = field(j, "offset");
    if (!offset.is_number_integer()) throw ValidationError("table \"offset\" must be an integer");
    return InteractionProfile::table(offset.get<long>(), rationals_from_json(field(j, "values")));
  }
  throw ValidationError("unknown profile kind '" + name + "'");
}

nlohmann::json profile_to_json(const InteractionProfile& profile) {
  auto strings = [&] {
    auto arr = nlohmann::json::array();
    for (const auto& v : profile.values()) arr.push_back(to_string(v));
    return arr;
  };
  switch (profile.kind()) {
    case InteractionProfile::Kind::constant:
      return {{"kind", "constant"}, {"value", to_string(profile.values().front())}};
    case InteractionProfile::Kind::periodic:
      return {{"kind", "periodic"}, {"values", strings()}};
    case InteractionProfile::Kind::table:
      break;
  }
  return {{"kind", "table"}, {"offset", profile.offset()}, {"values", strings()}};
}

InteractionProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open profile file '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed profile file '" + path.string() + "': " + e.what());
  }
  return profile_from_json(j);
}

nlohmann::json spectrum_to_json(const EnergySpectrum& spectrum) {
  auto terms = nlohmann::json::array();
  for (const auto& [energy, count] : spectrum.terms()) terms.push_back({to_string(energy), to_string(count)});
  return {{"terms", terms}};
}

EnergySpectrum spectrum_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw ValidationError("spectrum JSON must be {\"terms\":[[E,N],...]}");
  }
  EnergySpectrum out;
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 2) throw ValidationError("spectrum term must be [E, N]");
    out.add_term(rational_from_json(term[0]), rational_from_json(term[1]));
  }
  return out;
}

}  // namespace spinchain
