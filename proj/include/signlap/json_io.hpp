#pragma once

#include <json.hpp>

#include "signlap/crossing.hpp"
#include "signlap/discriminants.hpp"
#include "signlap/ensemble.hpp"
#include "signlap/graph.hpp"
#include "signlap/spectral.hpp"
#include "signlap/stability.hpp"

namespace signlap {

using Json = nlohmann::json;

// Rationals travel as strings ("p" or "p/q"); a bare JSON integer is also
// accepted on input.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json rationals_to_json(std::span<const Rational> xs);
std::vector<Rational> rationals_from_json(const Json& j);

/// {"n": N, "edges": [{"u":..,"v":..,"w":"p/q"}, ...]}
SignedWeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const SignedWeightedGraph& g);

/// [n_-, n_0, n_+]
Json index_to_json(const SpectralIndex& index);
SpectralIndex index_from_json(const Json& j);

/// {"R": R, "coefficients": {"10": "5", ...}}, red 1 leftmost.
Json polynomial_to_json(const CrossingPolynomial& p);
CrossingPolynomial polynomial_from_json(const Json& j);

/// {"alpha": "..", "C": [..]}
Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json stability_to_json(const StabilityReport& report);
StabilityReport stability_from_json(const Json& j);

Json crossings_to_json(const RayCrossings& crossings);
RayCrossings crossings_from_json(const Json& j);

/// {"N":10, "M":[45], "samples":10000, "seed":1, "model":"gnm"}
EnsembleConfig ensemble_config_from_json(const Json& j);
Json summary_to_json(const SliceSummary& s);

}  // namespace signlap
