#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gitstate/decision.hpp"
#include "gitstate/reduction.hpp"

namespace gitstate {

// 64-bit FNV-1a over raw bytes, lowercase hex.
std::string fnv1a64_hex(const std::string& bytes);

nlohmann::json exterior_to_json(const ExteriorVector& v);
ExteriorVector exterior_from_json(const nlohmann::json& j);

nlohmann::json sc_to_json(const SCInstance& inst);
SCInstance sc_from_json(const nlohmann::json& j);
nlohmann::json esc_to_json(const ESCInstance& inst);
ESCInstance esc_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const PolySystem& p);
PolySystem system_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);

// One polynomial per line; blank lines skipped.
std::vector<Polynomial> parse_ideal_lines(const std::string& text);

nlohmann::json parse_json(const std::string& text);  // wraps parse errors as UsageError

}  // namespace gitstate
