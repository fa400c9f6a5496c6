#pragma once

// JSON helpers.  All report output uses nlohmann's ordered_json so that key
// order is insertion order and byte-identical reruns are guaranteed.  Exact
// scalars serialize in two schemas:
//   short form (reports):  {"p":..,"q":..,"sp":..,"sq":..,"d":..}
//   long form (space files): {"p":..,"q":..,"sqrt_coeff_p":..,"sqrt_coeff_q":..,"d":..}
// where the value is p/q + (sp/sq)*sqrt(d).  Integers that fit in 64 bits are
// emitted as JSON numbers, larger ones as decimal strings.

#include <json.hpp>

#include "reebspec/exact.hpp"

namespace reebspec {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json scalar_to_json_short(const ExactScalar& x);
ExactScalar scalar_from_json_short(const Json& j);

Json scalar_to_json_long(const ExactScalar& x);
ExactScalar scalar_from_json_long(const Json& j);

// Short form plus a 12-digit certified decimal rendering under "dec".
Json scalar_to_json_with_decimal(const ExactScalar& x);

}  // namespace reebspec
