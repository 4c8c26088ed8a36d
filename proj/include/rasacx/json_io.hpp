#pragma once

#include <string>

#include <json.hpp>

#include "rasacx/convex_function.hpp"
#include "rasacx/convex_order.hpp"
#include "rasacx/distribution.hpp"
#include "rasacx/majorization.hpp"

namespace rasacx {

using ordered_json = nlohmann::ordered_json;

// Distributions: {"atoms": [["point", "mass"], ...]} with rationals as
// strings. Readers validate exactly what the constructors validate and
// prefix errors with the offending key.
ordered_json to_json(const DiscreteDistribution& d);
DiscreteDistribution distribution_from_json(const nlohmann::json& j);

// Probability vectors: {"entries": ["p1", ...]}.
ordered_json to_json(const ProbVector& v);
ProbVector prob_vector_from_json(const nlohmann::json& j);

// Functions: {"kind": "hinge"|"abs"|"pwl"|"poly", ...} with kind-specific
// fields t / breakpoints+values / coefficients and optional domain [lo, hi].
ordered_json to_json(const ConvexTestFunction& f);
ConvexTestFunction function_from_json(const nlohmann::json& j);

ordered_json to_json(const CxVerdict& v);
ordered_json to_json(const std::vector<PinchStep>& steps);

// Parses the file as JSON; parse failures are rethrown as std::runtime_error
// carrying the path and byte position.
nlohmann::json load_json_file(const std::string& path);

}  // namespace rasacx
