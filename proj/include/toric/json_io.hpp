#pragma once

#include <string>

#include <json.hpp>

#include "toric/atlas.hpp"
#include "toric/buildset.hpp"
#include "toric/digraph.hpp"
#include "toric/fan.hpp"
#include "toric/fano.hpp"
#include "toric/nested.hpp"

namespace toric {

// Interchange schema: {"ground": n, "members": [[1],[2],[1,2],...]} with
// 1-based element lists sorted by (size, lexicographic). Ground sets are
// always the consecutive range 1..n on the wire.
nlohmann::json building_set_to_json(const BuildingSet& b);
BuildingSet building_set_from_json(const nlohmann::json& j);

// {"nodes": n, "arrows": [[i,j],...]}
nlohmann::json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const nlohmann::json& j);

nlohmann::json nested_set_to_json(const NestedSet& n);
nlohmann::json fan_to_json(const Fan& f);
nlohmann::json fano_profile_to_json(const FanoProfile& p);
nlohmann::json criterion_to_json(const CriterionResult& r);
nlohmann::json witness_to_json(const WitnessWall& w);
nlohmann::json census_report_to_json(const CensusReport& r);
nlohmann::json threefold_report_to_json(const ThreefoldReport& r);

}  // namespace toric
