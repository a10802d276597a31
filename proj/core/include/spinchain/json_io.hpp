#pragma once

#include <filesystem>

#include <json.hpp>

#include "spinchain/model.hpp"
#include "spinchain/spectrum.hpp"

namespace spinchain {

/// {"kind":"constant","value":"3/2"}
/// {"kind":"periodic","values":["1","2"]}
/// {"kind":"table","offset":-2,"values":["3","5","7"]}
/// Rationals are decimal or "p/q" strings (bare JSON integers are accepted).
InteractionProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const InteractionProfile& profile);
InteractionProfile load_profile(const std::filesystem::path& path);

/// {"terms":[["E","N"],...]} sorted by energy.
nlohmann::json spectrum_to_json(const EnergySpectrum& spectrum);
EnergySpectrum spectrum_from_json(const nlohmann::json& j);

}  // namespace spinchain
