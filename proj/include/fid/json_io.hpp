#pragma once

#include <json.hpp>

#include "fid/decomposition.hpp"
#include "fid/free_module.hpp"
#include "fid/stability.hpp"

namespace fid {

using Json = nlohmann::json;

/// {"n": 4, "terms": [{"partition": [2,2], "multiplicity": "2"}, ...]}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"bases": d, "polynomials": [[c0, c1, ...], ...], "validated_range": [n0, n1], "exact": true}
/// Monomial coefficients as "p/q" strings.
Json to_json(const ExponentialFit& fit);
Json to_json(const PolynomialFit& fit);

Json to_json(const Plateau& plateau);
Json to_json(const StabilityReport& report);

/// Reads {"series": {"0": "1", "1": "2", ...}}; values may be strings or integers.
Series series_from_json(const Json& j);

}  // namespace fid
