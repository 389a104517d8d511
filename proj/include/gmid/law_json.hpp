#pragma once

#include <json.hpp>

#include "gmid/law.hpp"

namespace gmid {

/// {"kind": "ggamma-mid", "family": "frechet", "alpha": 1.0, "beta": 1.0}
nlohmann::json law_to_json(const MaxLaw& law);
/// Throws std::invalid_argument on a malformed or out-of-range descriptor.
/// "beta" may be omitted for base and gmid.
MaxLaw law_from_json(const nlohmann::json& j);

}  // namespace gmid
