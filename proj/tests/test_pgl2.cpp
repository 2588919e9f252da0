#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pglgraph/context.hpp"
#include "pglgraph/error.hpp"
#include "pglgraph/pgl2.hpp"

using namespace pglgraph;

namespace {

const std::vector<std::uint32_t> kQs = {3, 5, 7, 9, 11, 13};

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return errc::invalid_param;
}

oracle::Mat to_mat(const PglElement& x) { return {x.a, x.b, x.c, x.d}; }

oracle::PolyField poly_of(const Context& ctx) {
  return {ctx.field->characteristic(), ctx.field->degree(), ctx.field->modulus()};
}

/// Subgroups written down from their definitions with oracle arithmetic.
std::vector<oracle::Mat> oracle_subgroup(const Context& ctx, SubgroupKind kind) {
  const auto pf = poly_of(ctx);
  const unsigned q = pf.q();
  std::vector<oracle::Mat> h;
  switch (kind) {
    case SubgroupKind::U:
      for (unsigned x = 0; x < q; ++x) h.push_back({1, x, 0, 1});
      break;
    case SubgroupKind::A:
      for (unsigned y = 1; y < q; ++y) h.push_back({y, 0, 0, 1});
      break;
    case SubgroupKind::K:
      h.push_back({1, 0, 0, 1});
      for (unsigned b = 0; b < q; ++b) h.push_back(oracle::canon(pf, {b, ctx.delta(), 1, b}));
      break;
  }
  return h;
}

/// The library decomposition as a set of cosets, each expanded with oracle arithmetic.
std::set<std::set<oracle::Mat>> expand(const Context& ctx, const CosetSpace& space, const DoubleCoset& dc) {
  const auto pf = poly_of(ctx);
  const auto h = oracle_subgroup(ctx, space.kind());
  std::set<std::set<oracle::Mat>> out;
  for (auto i : dc.cosets) {
    std::set<oracle::Mat> coset;
    for (const auto& y : h) coset.insert(oracle::mat_mul(pf, to_mat(space.reps()[i]), y));
    out.insert(coset);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical form and group operations") {
  const auto c3 = Context::make_q(3);
  const Pgl2& g3 = *c3->group;
  CHECK(g3.canonicalize(2, 0, 0, 2) == g3.identity());
  CHECK(g3.mul(g3.weyl(), g3.weyl()) == g3.identity());
  CHECK(g3.order() == 24);
  CHECK(Context::make_q(5)->group->order() == 120);
  CHECK(code_of([&] { g3.canonicalize(1, 2, 2, 1); }) == errc::singular_matrix);
  CHECK(code_of([&] { g3.canonicalize(0, 0, 0, 0); }) == errc::singular_matrix);

  for (auto q : {5u, 7u, 9u}) {
    const auto c = Context::make_q(q);
    const Pgl2& g = *c->group;
    const FieldTable& f = *c->field;
    CHECK(g.order() == std::size_t(q) * q * q - q);
    for (std::size_t i = 0; i < g.elements().size(); ++i) {
      const auto& x = g.elements()[i];
      REQUIRE(g.index(x) == i);
      if (i) REQUIRE(g.elements()[i - 1] < x);
      REQUIRE(g.det(x) != 0);
      REQUIRE(g.mul(x, g.inv(x)) == g.identity());
      for (elem s = 2; s < q; s += 3) {
        REQUIRE(g.canonicalize(f.mul(s, x.a), f.mul(s, x.b), f.mul(s, x.c), f.mul(s, x.d)) == x);
      }
    }
  }
}

TEST_CASE("multiplication is associative and matches oracle arithmetic") {
  std::mt19937 rng(1234);
  for (auto q : {5u, 9u, 13u}) {
    const auto c = Context::make_q(q);
    const Pgl2& g = *c->group;
    const auto pf = poly_of(*c);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int i = 0; i < 1000; ++i) {
      const auto& x = g.elements()[pick(rng)];
      const auto& y = g.elements()[pick(rng)];
      const auto& z = g.elements()[pick(rng)];
      REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      REQUIRE(to_mat(g.mul(x, y)) == oracle::mat_mul(pf, to_mat(x), to_mat(y)));
    }
  }
}

TEST_CASE("subgroups") {
  const auto c3 = Context::make_q(3);
  const auto k3 = c3->group->subgroup(SubgroupKind::K);
  CHECK(k3.size() == 4);
  bool has_order_4 = false;
  for (const auto& x : k3) {
    int n = 1;
    for (auto y = x; !(y == c3->group->identity()); y = c3->group->mul(y, x)) ++n;
    has_order_4 = has_order_4 || n == 4;
  }
  CHECK(has_order_4);

  for (auto q : kQs) {
    const auto c = Context::make_q(q);
    const Pgl2& g = *c->group;
    for (auto kind : {SubgroupKind::U, SubgroupKind::A, SubgroupKind::K}) {
      const auto h = g.subgroup(kind);
      const std::size_t expected = kind == SubgroupKind::U ? q : kind == SubgroupKind::A ? q - 1 : q + 1;
      CHECK(h.size() == expected);
      const std::set<PglElement> members(h.begin(), h.end());
      CHECK(members.size() == expected);
      for (const auto& x : h) {
        for (const auto& y : h) {
          REQUIRE(members.count(g.mul(x, y)));
          REQUIRE(g.mul(x, y) == g.mul(y, x));
        }
      }
    }
  }
}

TEST_CASE("coset spaces") {
  CHECK(Context::make_q(3)->mod_k->size() == 6);
  CHECK(Context::make_q(5)->mod_u->size() == 24);
  CHECK(Context::make_q(5)->mod_a->size() == 30);
  for (auto q : {3u, 5u, 7u, 9u}) {
    const auto c = Context::make_q(q);
    const Pgl2& g = *c->group;
    for (auto kind : {SubgroupKind::U, SubgroupKind::A, SubgroupKind::K}) {
      const CosetSpace& s = c->space(kind);
      CHECK(s.size() * s.subgroup().size() == g.order());
      std::vector<std::size_t> count(s.size(), 0);
      for (const auto& x : g.elements()) {
        const auto i = s.index_of(x);
        ++count[i];
        // x lies in reps[i] H, and reps[i] is the smallest element of that coset
        bool found = false;
        for (const auto& h : s.subgroup()) found = found || g.mul(s.reps()[i], h) == x;
        REQUIRE(found);
        REQUIRE_FALSE(x < s.reps()[i]);
      }
      for (auto n : count) CHECK(n == s.subgroup().size());
    }
  }
}

TEST_CASE("G = UAK") {
  for (auto q : {3u, 5u}) {
    const auto c = Context::make_q(q);
    const Pgl2& g = *c->group;
    std::set<PglElement> covered;
    for (const auto& u : g.subgroup(SubgroupKind::U))
      for (const auto& a : g.subgroup(SubgroupKind::A))
        for (const auto& k : g.subgroup(SubgroupKind::K)) covered.insert(g.mul(g.mul(u, a), k));
    CHECK(covered.size() == g.order());
  }
}

TEST_CASE("K double cosets") {
  const auto c3 = Context::make_q(3);
  CHECK(c3->delta() == 2);
  const auto sols = k_conic_solutions(*c3->field, 2, 0);
  CHECK(sols == std::vector<std::pair<elem, elem>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(k_double_coset(*c3->mod_k, 0).cosets.size() == 4);

  for (auto q : kQs) {
    const auto c = Context::make_q(q);
    const FieldTable& f = *c->field;
    CHECK(code_of([&] { k_double_coset(*c->mod_k, 1); }) == errc::forbidden_param);
    CHECK(code_of([&] { k_double_coset(*c->mod_k, f.neg(1)); }) == errc::forbidden_param);
    CHECK(admissible_params(Family::k, f, c->delta()).size() == q - 2);
    for (auto cc : admissible_params(Family::k, f, c->delta())) {
      CAPTURE(cc);
      const auto s = k_conic_solutions(f, c->delta(), cc);
      CHECK(s.size() == q + 1);
      CHECK(std::find(s.begin(), s.end(), std::make_pair(elem{1}, elem{0})) == s.end());
      const auto dc = k_double_coset(*c->mod_k, cc);
      CHECK(dc.cosets.size() == q + 1);
      CHECK(is_symmetric(*c->mod_k, dc));
      CHECK(std::count(dc.cosets.begin(), dc.cosets.end(), c->mod_k->identity_coset()) == 0);
    }
  }
}

TEST_CASE("U double cosets") {
  const auto c3 = Context::make_q(3);
  CHECK(u_double_coset(*c3->mod_u, 1).cosets.size() == 3);
  for (auto q : kQs) {
    const auto c = Context::make_q(q);
    const FieldTable& f = *c->field;
    CHECK(code_of([&] { u_double_coset(*c->mod_u, 0); }) == errc::zero_param);
    for (elem t = 1; t < q; ++t) {
      const auto dc = u_double_coset(*c->mod_u, t);
      CHECK(dc.cosets.size() == q);
      CHECK(is_symmetric(*c->mod_u, dc));
      // the inverse of each generator lies in U_t
      for (const auto& x : dc.generators) {
        const auto i = c->mod_u->index_of(c->group->inv(x));
        CHECK(std::count(dc.cosets.begin(), dc.cosets.end(), i) == 1);
      }
    }
    // U (r 0; 0 1) U is not symmetric for r != +-1
    for (elem r = 2; r < q; ++r) {
      if (r == f.neg(1)) continue;
      const auto dc = double_coset_of(*c->mod_u, c->group->canonicalize(r, 0, 0, 1));
      CHECK_FALSE(is_symmetric(*c->mod_u, dc));
    }
  }
}

TEST_CASE("A double cosets") {
  const auto c3 = Context::make_q(3);
  const auto a0 = a_double_coset(*c3->mod_a, 0);
  CHECK(a0.generators.size() == 2);
  CHECK(a0.cosets.size() == 2);
  for (auto q : kQs) {
    const auto c = Context::make_q(q);
    const FieldTable& f = *c->field;
    CHECK(code_of([&] { a_double_coset(*c->mod_a, 1); }) == errc::forbidden_param);
    CHECK(code_of([&] { a_double_coset(*c->mod_a, c->delta()); }) == errc::forbidden_param);
    const auto params = admissible_params(Family::a, f, c->delta());
    CHECK(params.size() == q - 2);
    for (auto cc : params) {
      const auto dc = a_double_coset(*c->mod_a, cc);
      CHECK(dc.cosets.size() == q - 1);
      REQUIRE(dc.measured_count.has_value());
      CHECK(*dc.measured_count == q - 1);
      CHECK(is_symmetric(*c->mod_a, dc));
    }
  }
}

TEST_CASE("parametric double cosets agree with brute-force H s H") {
  for (auto q : {3u, 5u, 7u, 9u}) {
    const auto c = Context::make_q(q);
    const auto pf = poly_of(*c);
    CAPTURE(q);
    for (auto family : {Family::k, Family::u, Family::a}) {
      const auto kind = subgroup_of(family);
      const CosetSpace& space = c->space(kind);
      const auto h = oracle_subgroup(*c, kind);
      for (elem param = 0; param < q; ++param) {
        if (!is_admissible(family, *c->field, c->delta(), param)) continue;
        CAPTURE(param);
        const DoubleCoset dc = family == Family::k   ? k_double_coset(space, param)
                               : family == Family::u ? u_double_coset(space, param)
                                                     : a_double_coset(space, param);
        const auto truth = oracle::double_coset_cosets(pf, h, to_mat(dc.generators.front()));
        CHECK(expand(*c, space, dc) == truth);
        const auto generic = double_coset_of(space, dc.generators.front());
        CHECK(expand(*c, space, generic) == truth);
      }
      const auto trivial = double_coset_of(space, c->group->identity());
      CHECK(trivial.cosets == std::vector<std::uint32_t>{space.identity_coset()});
    }
  }
}

TEST_CASE("double coset counts") {
  for (auto q : {3u, 5u, 7u}) {
    const auto c = Context::make_q(q);
    const auto pf = poly_of(*c);
    for (auto kind : {SubgroupKind::U, SubgroupKind::A, SubgroupKind::K}) {
      const auto h = oracle_subgroup(*c, kind);
      std::set<std::set<oracle::Mat>> classes;
      for (const auto& x : c->group->elements()) {
        std::set<oracle::Mat> hxh;
        for (const auto& h1 : h)
          for (const auto& h2 : h) hxh.insert(oracle::mat_mul(pf, oracle::mat_mul(pf, h1, to_mat(x)), h2));
        classes.insert(hxh);
      }
      CHECK(count_double_cosets(c->space(kind)) == classes.size());
    }
  }
}

TEST_CASE("argument checks") {
  const auto c = Context::make_q(5);
  CHECK(code_of([&] { k_double_coset(*c->mod_u, 0); }) == errc::invalid_param);
  CHECK(code_of([&] { u_double_coset(*c->mod_a, 1); }) == errc::invalid_param);
  CHECK(code_of([&] { subgroup_of(Family::cusp); }) == errc::invalid_param);
  CHECK(parse_family("K") == Family::k);
  CHECK(parse_family("cusp") == Family::cusp);
  CHECK_FALSE(parse_family("x").has_value());
  CHECK_FALSE(is_admissible(Family::u, *c->field, c->delta(), 5));
  CHECK(code_of([] { Context::make_q(6); }) == errc::not_prime);
  CHECK(code_of([] { Context::make_q(4); }) == errc::even_characteristic);
}
