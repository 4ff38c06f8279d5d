#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hlkit/basis.hpp"
#include "hlkit/identities.hpp"
#include "hlkit/laurent_poly.hpp"
#include "hlkit/tableaux.hpp"
#include "hlkit/xpoly.hpp"

namespace hlkit {

using Json = nlohmann::ordered_json;

/// {"0": 1, "1": 2}; keys are t-exponents, values integers (strings when
/// they exceed 64 bits).
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"basis": "Qp", "coeffs": [{"partition": [2,1], "poly": {...}}]}
Json expansion_to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const Json& j);

/// {"vars": [...], "terms": [{"exponent": [...], "poly": {...}}], "text": "..."}
Json xpoly_to_json(const XPoly& p, const std::vector<std::string>& names = {});
XPoly xpoly_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);
Json chain_to_json(const PlanePartitionLayers& pp);

/// {"identity", "holds", "lhs", "rhs", "difference"}; lhs - rhs is included
/// only when the sides differ.
Json report_to_json(const IdentityReport& r);

}  // namespace hlkit
