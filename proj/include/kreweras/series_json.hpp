#pragma once

#include <json.hpp>

#include "kreweras/bseries.hpp"
#include "kreweras/tseries.hpp"

namespace kreweras {

// Golden-file schema: { "valuation": v, "coeffs": [ per t-power:
//   [ [ [exponent(s)...], "num/den" ], ... ] ] }
nlohmann::json to_json(const TSeries& s);
nlohmann::json to_json(const BSeries& s);
TSeries tseries_from_json(const nlohmann::json& j);
BSeries bseries_from_json(const nlohmann::json& j);

}  // namespace kreweras
