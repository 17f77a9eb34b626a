#pragma once

#include "grothkit/posets.hpp"
#include "grothkit/qsym.hpp"
#include "grothkit/ring.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace grothkit {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const Integer& c);
Integer integer_from_json(const Json& j);

Json to_json(const BetaPoly& p);
BetaPoly beta_poly_from_json(const Json& j);

// {"n", "D", "terms": [{"exp", "beta"}]} in canonical term order.
Json to_json(const TruncPoly& p);
TruncPoly trunc_poly_from_json(const Json& j);

// {"m", "less", "labels"}; "less" lists the cover relations.
Json to_json(const LabeledPoset& p);
LabeledPoset poset_from_json(const Json& j);

Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

// {"basis", "valid_deg", "terms": [{"index", "coeff": {"num", "den_pow2"}}]}
Json to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const Json& j);

// Terms in basis order, e.g. 4*GP(3,2) + 2b*GP(4,2) - b^2*GP(4,3)
std::string expansion_str(const BasisExpansion& e);

std::string latex(const BetaPoly& p);
std::string latex(const TruncPoly& p);
std::string latex(const BasisExpansion& e);

}  // namespace grothkit
