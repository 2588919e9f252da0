#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pglgraph/error.hpp"
#include "pglgraph/pipeline.hpp"
#include "pglgraph/spectra.hpp"

using namespace pglgraph;

namespace {

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return errc::invalid_param;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("eigenvalue examples") {
  CHECK(sym_eigenvalues(Eigen::MatrixXd::Identity(5, 5)) == std::vector<double>(5, 1.0));

  Eigen::MatrixXd k4 = Eigen::MatrixXd::Ones(4, 4) - Eigen::MatrixXd::Identity(4, 4);
  CHECK(oracle::max_abs_diff(sym_eigenvalues(k4), {3, -1, -1, -1}) < 1e-12);

  const auto c3 = Context::make_q(3);
  const auto ev = eigenvalues(build_family_graph(*c3, Family::k, 0));
  CHECK(oracle::max_abs_diff(ev, {4, 0, 0, 0, -2, -2}) < 1e-12);

  CHECK(sym_eigenvalues(Eigen::MatrixXd(0, 0)).empty());
  CHECK(sym_eigenvalues(Eigen::MatrixXd::Constant(1, 1, 2.5)) == std::vector<double>{2.5});
}

TEST_CASE("nonsymmetric input is rejected") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 1) = 1;
  CHECK(code_of([&] { sym_eigenvalues(a); }) == errc::not_symmetric);
}

TEST_CASE("QL iteration gives up on non-finite input") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(code_of([&] { tridiagonal_eigenvalues({nan, 1, 2}, {1, 1}); }) == errc::no_convergence);
}

TEST_CASE("agreement with the inertia-bisection oracle on random 8x8 integer matrices") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const auto a = oracle::random_symmetric_int(rng, n, -9, 9);
    const auto mine = sym_eigenvalues(a);
    CAPTURE(trial);
    CHECK(oracle::max_abs_diff(mine, oracle::bisection_eigenvalues(a)) < 1e-9);
    CHECK(oracle::max_abs_diff(mine, oracle::eigen_reference(a)) < 1e-9);
    CHECK(oracle::max_abs_diff(mine, jacobi_eigenvalues(a)) < 1e-9);
  }
}

TEST_CASE("tridiagonal reduction preserves the spectrum") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_symmetric_int(rng, 12, -5, 5);
    std::vector<double> d, e;
    tridiagonalize(a, d, e);
    REQUIRE(d.size() == 12);
    REQUIRE(e.size() == 11);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(12, 12);
    for (int i = 0; i < 12; ++i) t(i, i) = d[i];
    for (int i = 0; i < 11; ++i) t(i, i + 1) = t(i + 1, i) = e[i];
    CHECK(oracle::max_abs_diff(oracle::eigen_reference(t), oracle::eigen_reference(a)) < 1e-9);
    auto ql = tridiagonal_eigenvalues(d, e);
    std::sort(ql.rbegin(), ql.rend());
    CHECK(oracle::max_abs_diff(ql, oracle::eigen_reference(a)) < 1e-9);
  }
}

TEST_CASE("residuals of sampled eigenpairs") {
  const auto c = Context::make_q(7);
  for (auto family : {Family::k, Family::u, Family::a}) {
    const Graph g = build_family_graph(*c, family, family == Family::u ? 1 : 0);
    const auto a = g.adjacency();
    CHECK(sampled_residual(a, sym_eigenvalues(a), 10) <= 1e-8);
  }
}

TEST_CASE("random graphs: solver, moments and trace identities") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 5 + trial % 20, 0.3);
    const auto ev = sym_eigenvalues(g.adjacency());
    CHECK(oracle::max_abs_diff(ev, oracle::eigen_reference(g.adjacency())) < 1e-9);
    const auto m = moment_check(g, ev);
    CHECK(m.ok);
    CHECK(closed_walks(g, 0) == g.n());
    CHECK(closed_walks(g, 2) == 2 * g.edge_count());
    CHECK(closed_walks(g, 3) == 6 * oracle::triangles(g.adj));
    double s1 = 0, s3 = 0;
    for (double x : ev) s1 += x, s3 += x * x * x;
    CHECK(std::abs(s1) < 1e-9);
    CHECK(std::abs(s3 - 6.0 * oracle::triangles(g.adj)) < 1e-7);
  }
}

TEST_CASE("family graphs: lambda_max = k with multiplicity = components") {
  for (auto q : {3u, 5u, 7u, 9u}) {
    const auto c = Context::make_q(q);
    for (auto family : {Family::k, Family::u, Family::a}) {
      for (auto param : admissible_params(family, *c->field, c->delta())) {
        const Graph g = build_family_graph(*c, family, param);
        const auto ev = eigenvalues(g);
        const double k = double(g.k());
        CHECK(std::abs(ev.front() - k) < 1e-9);
        const auto mult = std::count_if(ev.begin(), ev.end(), [&](double x) { return std::abs(x - k) < 1e-6; });
        CHECK(std::size_t(mult) == analyze(g).components);
        double s2 = 0;
        for (double x : ev) s2 += x * x;
        CHECK(std::abs(s2 - double(g.n()) * k) < 1e-6 * g.n() * k);
        CHECK(moment_check(g, ev).ok);
      }
    }
  }
}

TEST_CASE("spectrum of a disjoint union is the union of the spectra") {
  for (auto q : {5u, 7u, 9u}) {
    const auto c = Context::make_q(q);
    const Graph g = build_family_graph(*c, Family::u, 1);
    const auto labels = component_labels(g);
    std::vector<double> parts;
    for (std::uint32_t comp = 0; comp < 2; ++comp) {
      std::vector<std::uint32_t> verts;
      for (std::uint32_t i = 0; i < g.n(); ++i)
        if (labels[i] == comp) verts.push_back(i);
      const auto ev = eigenvalues(induced_subgraph(g, verts));
      parts.insert(parts.end(), ev.begin(), ev.end());
    }
    CHECK(match_multiset(eigenvalues(g), parts, 1e-9).success);
  }
}

TEST_CASE("reports and certification") {
  const auto c = Context::make_q(7);
  auto report_of = [&](Family f, elem p) {
    const Graph g = build_family_graph(*c, f, p);
    return make_report(eigenvalues(g), g.k(), c->q());
  };
  const auto k = report_of(Family::k, 0);
  CHECK(k.ramanujan_bound == doctest::Approx(2 * std::sqrt(7.0)));
  CHECK(k.paper_bound == doctest::Approx(2 * std::sqrt(7.0)));
  CHECK(k.trivial.size() == 1);
  CHECK(certify(k).ramanujan);
  CHECK(certify(report_of(Family::u, 3)).ramanujan);
  const auto a = certify(report_of(Family::a, 0));
  CHECK(a.paper_bound_holds);

  // a nontrivial eigenvalue above 2 sqrt(k-1) breaks the certificate
  const auto bad = make_report({3, 2.9, 0, -1}, 3, 2);
  CHECK_FALSE(certify(bad).ramanujan);
  CHECK_FALSE(certify(bad).paper_bound_holds);

  const auto cl = cluster({4, 1e-9, -1e-9, -2, -2 + 1e-8}, 1e-6);
  REQUIRE(cl.size() == 3);
  CHECK(cl[1].multiplicity == 2);
  CHECK(cl[2].value == doctest::Approx(-2));
}

TEST_CASE("multiset matching") {
  const std::vector<double> x = {3, 1, -1, -1};
  const auto same = match_multiset(x, x);
  CHECK(same.success);
  CHECK(same.max_distance == 0);

  auto y = x;
  y[2] += 1e-3;
  const auto off = match_multiset(x, y);
  CHECK_FALSE(off.success);
  CHECK(off.max_distance == doctest::Approx(1e-3));

  CHECK(code_of([&] { match_multiset(x, {1, 2}); }) == errc::cardinality_mismatch);

  const auto c3 = Context::make_q(3);
  CHECK(match_multiset(eigenvalues(build_family_graph(*c3, Family::u, 1)), {3, 3, -1, -1, -1, -1, -1, -1}).success);

  CHECK(is_sub_multiset({-1, 3}, {3, 1, -1, -1}, 1e-9));
  CHECK(is_sub_multiset({-1, -1}, {3, 1, -1, -1}, 1e-9));
  CHECK_FALSE(is_sub_multiset({-1, -1, -1}, {3, 1, -1, -1}, 1e-9));
  CHECK_FALSE(is_sub_multiset({2}, {3, 1, -1, -1}, 1e-9));
}
