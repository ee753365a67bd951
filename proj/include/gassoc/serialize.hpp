// JSON views of models, polytopes and exchange graphs. Rationals are written
// as "p/q" strings, nodes are 1-based.
#pragma once

#include "gassoc/mutation.hpp"
#include "gassoc/polytope.hpp"

#include <json.hpp>

namespace gassoc {

using Json = nlohmann::ordered_json;

Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
IntVec int_vec_from_json(const Json& j);
RatVec rat_vec_from_json(const Json& j);

Json model_to_json(const ClusterModel& model);
Json polytope_to_json(const ClusterModel& model, const AssocPolytope& poly);
/// Inverse of polytope_to_json. Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
AssocPolytope polytope_from_json(const Json& j);
bool operator==(const AssocPolytope& a, const AssocPolytope& b);
Json exchange_graph_to_json(const ExchangeGraph& graph);

}  // namespace gassoc
