#include "g2vir/graphs/json.hpp"

#include <stdexcept>

namespace g2vir::graphs {

nlohmann::ordered_json to_json(const VirasoroGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.size();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [from, to] : g.edges()) j["edges"].push_back({from, to});
  return j;
}

VirasoroGraph graph_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph edge must be [i, j]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return VirasoroGraph::from_edges(j.at("n").get<int>(), edges);
}

nlohmann::ordered_json to_json(const Census& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["table"] = nlohmann::ordered_json::array();
  for (const auto& [km, count] : c.table) {
    nlohmann::ordered_json row;
    row["K"] = km.first;
    row["M"] = km.second;
    row["count"] = count;
    j["table"].push_back(std::move(row));
  }
  j["total"] = c.total();
  return j;
}

}  // namespace g2vir::graphs
