#pragma once

#include <json.hpp>

#include "octobil/bilinear_map.hpp"

namespace octobil {

/// {"r":int,"s":int,"k":int,"entries":[[t,i,j,"p/q"],...]}, entries sorted
/// by (t,i,j), values as reduced rational strings.
nlohmann::ordered_json tensor_to_json(const Tensor& t);

/// Parses and validates; throws std::invalid_argument on malformed input.
Tensor tensor_from_json(const nlohmann::json& j);

}  // namespace octobil
