#include "pglgraph/cayley.hpp"

#include <algorithm>
#include <deque>

#include "pglgraph/error.hpp"

namespace pglgraph {

std::size_t Graph::k() const noexcept {
  std::size_t k = 0;
  for (const auto& row : adj) k = std::max(k, row.size());
  return k;
}

bool Graph::is_regular() const noexcept {
  return std::all_of(adj.begin(), adj.end(), [&](const auto& row) { return row.size() == adj.front().size(); });
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adj) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < n(); ++i) {
    for (auto j : adj[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n(), n());
  for (std::size_t i = 0; i < n(); ++i) {
    for (auto j : adj[i]) a(i, j) = 1.0;
  }
  return a;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  Graph g;
  g.adj.resize(n);
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) throw error(errc::malformed_input, "edge endpoint out of range");
    if (i == j) throw error(errc::malformed_input, "self-loop at vertex " + std::to_string(i));
    g.adj[i].push_back(j);
    g.adj[j].push_back(i);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw error(errc::malformed_input, "repeated edge");
    }
  }
  return g;
}

Graph build_graph(const CosetSpace& space, const DoubleCoset& dc) {
  if (!is_symmetric(space, dc)) throw error(errc::asymmetric_coset, dc.label + " is not symmetric");
  const Pgl2& grp = space.group();
  Graph g;
  g.family = dc.kind == SubgroupKind::K ? "k" : dc.kind == SubgroupKind::U ? "u" : "a";
  g.q = grp.q();
  if (dc.param) g.param = *dc.param;
  g.adj.resize(space.size());
  for (std::uint32_t i = 0; i < space.size(); ++i) {
    auto& row = g.adj[i];
    row.reserve(dc.generators.size());
    for (const auto& x : dc.generators) row.push_back(space.index_of(grp.mul(space.reps()[i], x)));
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw error(errc::invalid_param, dc.label + ": multi-edge at vertex " + std::to_string(i));
    }
    if (std::binary_search(row.begin(), row.end(), i)) {
      throw error(errc::invalid_param, dc.label + ": loop at vertex " + std::to_string(i));
    }
  }
  for (std::uint32_t i = 0; i < g.n(); ++i) {
    for (auto j : g.adj[i]) {
      if (!std::binary_search(g.adj[j].begin(), g.adj[j].end(), i)) {
        throw error(errc::not_symmetric, "adjacency is not symmetric");
      }
    }
  }
  return g;
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  constexpr std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> label(g.n(), unset);
  std::uint32_t next = 0;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < g.n(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : g.adj[v]) {
        if (label[w] == unset) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

StructureReport analyze(const Graph& g) {
  StructureReport r;
  r.n = g.n();
  r.k = g.k();
  r.regular = g.is_regular();
  const auto labels = component_labels(g);
  r.components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

  std::vector<int> colour(g.n(), -1);
  r.bipartite = true;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < g.n() && r.bipartite; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.assign(1, s);
    while (!queue.empty() && r.bipartite) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : g.adj[v]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          r.bipartite = false;
          break;
        }
      }
    }
  }
  return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices) {
  std::vector<std::int64_t> pos(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<std::int64_t>(i);
  Graph h;
  h.family = g.family;
  h.q = g.q;
  h.param = g.param;
  h.adj.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (auto w : g.adj[vertices[i]]) {
      if (pos[w] >= 0) h.adj[i].push_back(static_cast<std::uint32_t>(pos[w]));
    }
    std::sort(h.adj[i].begin(), h.adj[i].end());
  }
  return h;
}

std::vector<std::pair<elem, elem>> cusp_vertices(const FieldTable& f) {
  const std::uint32_t q = f.order();
  const unsigned p = f.characteristic();
  std::vector<std::pair<elem, elem>> out;
  for (std::uint64_t code = 1; code < static_cast<std::uint64_t>(q) * q; ++code) {
    const elem a = static_cast<elem>(code % q);
    const elem b = static_cast<elem>(code / q);
    bool smallest = true;
    for (unsigned s = 2; s < p && smallest; ++s) {
      const elem k = f.from_int(s);
      smallest = f.mul(k, a) + static_cast<std::uint64_t>(q) * f.mul(k, b) > code;
    }
    if (smallest) out.emplace_back(a, b);
  }
  return out;
}

Graph build_cusp_graph(unsigned p, unsigned e) {
  const FieldTable f = FieldTable::build(p, e);
  const std::uint32_t q = f.order();
  const auto verts = cusp_vertices(f);
  // Class index of every nonzero vector.
  std::vector<std::uint32_t> cls(static_cast<std::size_t>(q) * q, 0);
  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    const auto [a, b] = verts[i];
    for (unsigned s = 1; s < p; ++s) {
      const elem k = f.from_int(s);
      cls[f.mul(k, a) + static_cast<std::size_t>(q) * f.mul(k, b)] = i;
    }
  }
  Graph g;
  g.family = "cusp";
  g.q = q;
  g.adj.resize(verts.size());
  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    const auto [a, b] = verts[i];
    // det((a,b),(c,d)) = ad - bc must be a nonzero element of F_p.
    for (std::uint64_t code = 1; code < static_cast<std::uint64_t>(q) * q; ++code) {
      const elem c = static_cast<elem>(code % q);
      const elem d = static_cast<elem>(code / q);
      const elem det = f.sub(f.mul(a, d), f.mul(b, c));
      if (det == 0 || !f.in_prime_field(det)) continue;
      g.adj[i].push_back(cls[code]);
    }
    auto& row = g.adj[i];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

}  // namespace pglgraph
