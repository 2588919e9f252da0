#pragma once

#include <string>

#include <json.hpp>

#include "pglgraph/cayley.hpp"

namespace pglgraph {

/// Value rounded to 12 significant digits (negative zero becomes zero).
double round12(double x);
/// printf("%.12g").
std::string format12(double x);

/// {"family","q","param","n","k","edges":[[i,j],...]}
nlohmann::json graph_to_json(const Graph& g);
/// MalformedInput on schema violations.
Graph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const Graph& g);

}  // namespace pglgraph
