#pragma once

#include <json.hpp>

#include "diffwitt/eqsys.hpp"
#include "diffwitt/envelope.hpp"
#include "diffwitt/findim.hpp"

namespace diffwitt {

using json = nlohmann::json;

/// Version stamped into every top-level document as "schema".
inline constexpr int kSchemaVersion = 1;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"m": 2, "terms": [{"c": "3/2", "e": [2, 1]}, ...]}
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// {"m": 2, "n": 2, "terms": [{"c": <poly>, "factors": [{"g": 1, "t": [2, 0]}]}]}
json to_json(const DiffPoly& f);
DiffPoly diffpoly_from_json(const json& j);

/// {"m": 1, "terms": [{"theta": [1], "c": <diffpoly>}]}
json to_json(const EnvElement& u);
EnvElement env_from_json(const json& j);

/// {"m": 2, "components": [<diffpoly>, <diffpoly>]}
json to_json(const VectorField& u);
VectorField vector_field_from_json(const json& j);

/// {"type": "vector_field", ...} or {"type": "poisson", "value": <diffpoly>}
json to_json(const Element& e);
Element element_from_json(const json& j);

/// {"dim": 4, "gamma": [[[...]]]}; entries are integers or "a/b" strings.
json to_json(const StructureConstants& alg);
StructureConstants structure_constants_from_json(const json& j);

/// {"schema": 1, "variety": "W1", "n": 1, "equations": ["[z1, V(x1)]", ...]}
json to_json(const EqSystem& s);
EqSystem eqsystem_from_json(const json& j);

} // namespace diffwitt
