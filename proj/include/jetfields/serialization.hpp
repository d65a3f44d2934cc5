#pragma once

#include "jetfields/derivation.hpp"
#include "jetfields/formal_map.hpp"
#include "jetfields/jet.hpp"

#include <json.hpp>

namespace jetfields {

// Interchange format. Rationals travel as decimal strings so nothing is
// rounded:
//   Jet        {"n":2,"order":3,"terms":[{"exp":[1,0],"num":"3","den":"2"},...]}
//   FormalMap  {"n":2,"order":3,"images":[Jet,...]}
//   Derivation {"n":2,"order":3,"coefficients":[Jet,...]}
// Terms appear in graded order. Readers reject malformed input with
// DomainError / DimensionError / PrecisionError.

nlohmann::json to_json(const Jet& f);
nlohmann::json to_json(const FormalMap& s);
nlohmann::json to_json(const Derivation& d);

Jet jet_from_json(const nlohmann::json& j);
FormalMap map_from_json(const nlohmann::json& j);
Derivation field_from_json(const nlohmann::json& j);

} // namespace jetfields
