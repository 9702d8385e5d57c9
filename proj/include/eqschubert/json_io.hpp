#pragma once

// JSON forms of polynomials, classes, lattice-path tuples and structure
// constant tables.

#include "json.hpp"

#include "eqschubert/gkm.hpp"
#include "eqschubert/latticepaths.hpp"

namespace eqschubert {

using Json = nlohmann::json;

/// [{"coeff": "<decimal>", "exps": [e_1, ..., e_n]}, ...] in canonical order.
Json to_json(const Polynomial& p);
/// Inverse of to_json. `nvars` fixes the ring; every "exps" must have that
/// length. Throws InvalidArgument on malformed input.
Polynomial polynomial_from_json(const Json& j, std::size_t nvars);

Json to_json(const Cell& cell);
Json to_json(const PathTuple& tuple);

/// {"d": d, "n": n, "restrictions": {"<v-literal>": polynomial, ...}}.
Json to_json(const EqClass& a);
/// Requires every fixed point of Gr(d,n) to be present.
EqClass eqclass_from_json(const Json& j);

/// [{"u": .., "v": .., "w": .., "c": polynomial}, ...].
Json to_json(const std::vector<StructConstEntry>& table);
std::vector<StructConstEntry> table_from_json(const Json& j, std::size_t d, std::size_t n);

}  // namespace eqschubert
