#pragma once

#include <nlohmann/json.hpp>

#include "exlab/bounds.hpp"
#include "exlab/complex.hpp"
#include "exlab/rational.hpp"
#include "exlab/root_value.hpp"
#include "exlab/scenarios.hpp"

namespace exlab {

using Json = nlohmann::ordered_json;

// All *_from_json functions throw exlab::Error naming the offending field.

/// {"num": "p", "den": "q"}; integers are kept as decimal strings.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& json);

/// {"base": {...}, "root": k}
Json to_json(const RootValue& value);

/// {"n_vertices": n, "facets": [[...], ...], "labels": [...]}; labels only
/// when present.
Json to_json(const SimplicialComplex& complex);
/// Loads without canonicalising; run validate() on the result.
SimplicialComplex complex_from_json(const Json& json);

/// {"parties", "settings", "outcomes", "boxes", "table": [{"settings",
/// "outcomes", "p": "num/den"}]}, zero entries omitted.
Json to_json(const Behavior& behavior);
Behavior behavior_from_json(const Json& json);

/// Array of probabilities, each "p/q" text, an integer, or {"num","den"}.
Json to_json(const Assignment& assignment);
Assignment assignment_from_json(const Json& json);

Json to_json(const BoundResult& result);
Json to_json(const ProductBoundResult& result);
Json to_json(const Violation& violation, const SimplicialComplex& complex);

}  // namespace exlab
