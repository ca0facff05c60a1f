#pragma once

#include <json.hpp>

#include "g2vir/graphs/census.hpp"
#include "g2vir/graphs/virasoro_graph.hpp"

namespace g2vir::graphs {

/// {"n":2,"edges":[[1,2]]}
[[nodiscard]] nlohmann::ordered_json to_json(const VirasoroGraph& g);
/// Inverse of to_json; validates the edge set.
[[nodiscard]] VirasoroGraph graph_from_json(const nlohmann::ordered_json& j);

/// {"n":2,"table":[{"K":0,"M":2,"count":1},...],"total":7}
[[nodiscard]] nlohmann::ordered_json to_json(const Census& c);

}  // namespace g2vir::graphs
