#pragma once

#include <json.hpp>

#include "trop/dressian.hpp"
#include "trop/lp.hpp"
#include "trop/matroid.hpp"
#include "trop/plabic.hpp"
#include "trop/subdivision.hpp"
#include "trop/transversal.hpp"

namespace trop {

using json = nlohmann::json;

json subset_to_json(Mask s);
Mask subset_from_json(const json& j, int n);

json to_json(const PluckerVector& P);
// Rejects missing, repeated and non-finite entries.
PluckerVector plucker_from_json(const json& j);

json to_json(const Matroid& M);
Matroid matroid_from_json(const json& j);

json to_json(const Subdivision& D);
Subdivision subdivision_from_json(const json& j);

json to_json(const PlabicGraph& G);
PlabicGraph plabic_from_json(const json& j);

json to_json(const WebParameters& X);
WebParameters web_parameters_from_json(const json& j);

json to_json(const CellComplexOnPi& cx);
CellComplexOnPi cell_complex_from_json(const json& j);
CellComplexOnPi parse_cell_complex(const std::string& text);

json to_json(const RelationTuple& t);
json to_json(const DecoratedPermutation& p);
json to_json(const RegularityCertificate& c, int k = -1, int n = -1);
json to_json(const CounterexampleReport& r);

}  // namespace trop
