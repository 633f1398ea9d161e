#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "gonia/anthyphairesis.hpp"
#include "gonia/side_diameter.hpp"
#include "gonia/solid_angle.hpp"

namespace gonia {

// Big integers render as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings.
nlohmann::json json_int(const Int& v);

// {"kind":"finite"|"periodic"|"truncated","quotients":[...],"period":[...],
//  "gcd":"<magnitude>"|null}
nlohmann::json to_json(const AnthOutcome& outcome);

nlohmann::json to_json(const SideDiameterRow& row);
nlohmann::json to_json(const std::vector<SideDiameterRow>& rows);
std::string to_csv(const std::vector<SideDiameterRow>& rows);

// {"method":...,"excess_sr":...,"stderr":...|null,"clamp_budget_used":...}
nlohmann::json excess_result_json(const std::string& method, double excess,
                                  std::optional<double> stderr_value, double clamp_used);

nlohmann::json to_json(const SolidAngleRow& row);
nlohmann::json to_json(const std::vector<SolidAngleRow>& rows);
std::string to_csv(const std::vector<SolidAngleRow>& rows);

}  // namespace gonia
