#pragma once

#include <json.hpp>

#include "cocycle_lab/braidings.hpp"
#include "cocycle_lab/cohomology.hpp"
#include "cocycle_lab/hopf.hpp"
#include "cocycle_lab/klein.hpp"

namespace cocycle_lab::json_io {

using nlohmann::json;

json to_json(const FiniteAbelianGroup& g);
json to_json(const GroupElement& x);
json to_json(const CycScalar& x);
json to_json(const Cochain& c);
json to_json(const AbelianCocycle& ac);
json to_json(const GroupAlgebraTensor& t);
json to_json(const KleinCohomologyClass& c);
json to_json(const CohomologyReport& r);

FiniteAbelianGroup group_from_json(const json& j);
GroupElement element_from_json(const FiniteAbelianGroup& g, const json& j);
/// Accepts the {"conductor","coeffs"} object or an expression string such as "zeta3^2".
CycScalar scalar_from_json(const json& j);
/// Every tuple of G^degree must appear exactly once.
Cochain cochain_from_json(const json& j);
AbelianCocycle abelian_cocycle_from_json(const json& j);
GroupAlgebraTensor tensor_from_json(const json& j);

}  // namespace cocycle_lab::json_io
