#include "pglgraph/graph_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "pglgraph/error.hpp"

namespace pglgraph {

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

double round12(double x) {
  const double r = std::strtod(format12(x).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["family"] = g.family;
  j["q"] = g.q;
  j["param"] = g.param ? nlohmann::json(*g.param) : nlohmann::json(nullptr);
  j["n"] = g.n();
  j["k"] = g.k();
  auto edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw error(errc::malformed_input, "graph JSON must be an object");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw error(errc::malformed_input, "edge must be a pair");
      edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    Graph g = Graph::from_edges(n, edges);
    g.family = j.value("family", std::string("custom"));
    g.q = j.value("q", 0u);
    if (j.contains("param") && !j["param"].is_null()) g.param = j["param"].get<std::uint32_t>();
    if (j.contains("k") && !g.adj.empty() && j["k"].get<std::size_t>() != g.k()) {
      throw error(errc::malformed_input, "declared k differs from the edge list");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::malformed_input, e.what());
  }
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph X_" << g.family;
  if (g.param) out << '_' << *g.param;
  out << " {\n";
  for (std::size_t i = 0; i < g.n(); ++i) out << "  " << i << ";\n";
  for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pglgraph
