#pragma once

// Cayley graphs X_{HsH} = Cay(G/H, HsH/H) on the coset spaces, the cusp
// graph X_P, and basic structure analysis.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pglgraph/pgl2.hpp"

namespace pglgraph {

struct Graph {
  std::string family;  // "k", "u", "a", "cusp" or free text for ad hoc graphs
  std::uint32_t q = 0;
  std::optional<std::uint32_t> param;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbour lists

  std::size_t n() const noexcept { return adj.size(); }
  /// Maximum degree; equals the regularity for the graphs built here.
  std::size_t k() const noexcept;
  bool is_regular() const noexcept;
  std::size_t edge_count() const noexcept;
  /// Undirected edges (i, j) with i < j, in increasing order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  Eigen::MatrixXd adjacency() const;

  /// Builds from an edge list; rejects loops, repeated edges and bad indices.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
};

struct StructureReport {
  std::size_t n = 0;
  std::size_t k = 0;
  bool regular = false;
  std::size_t components = 0;
  bool bipartite = false;
};

/// Vertex xH is joined to x x_i H for every coset x_i H of the double coset.
Graph build_graph(const CosetSpace& space, const DoubleCoset& dc);

StructureReport analyze(const Graph& g);
/// Component label of each vertex, numbered in order of first appearance.
std::vector<std::uint32_t> component_labels(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices);

/// Nonzero column vectors of F_q^2 modulo F_p^x, joined when their determinant
/// lies in F_p^x. Vertex i is the i-th class ordered by canonical representative.
Graph build_cusp_graph(unsigned p, unsigned e);
/// Canonical representative (a, b) of each cusp-graph vertex.
std::vector<std::pair<elem, elem>> cusp_vertices(const FieldTable& f);

}  // namespace pglgraph
