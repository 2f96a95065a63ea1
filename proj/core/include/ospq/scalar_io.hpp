#pragma once

#include "ospq/scalar.hpp"

#include "json.hpp"

namespace ospq {

// Structured serialization of a Scalar: an array of term records
// {laurent: string, radical: string, params: {name: exponent, ...}}.
// Odd symbols are recorded with exponent 1; round trip is bit-exact.
nlohmann::json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const nlohmann::json& j);

} // namespace ospq
