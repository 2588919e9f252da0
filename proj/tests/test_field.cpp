#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "oracles.hpp"
#include "pglgraph/error.hpp"
#include "pglgraph/field.hpp"
#include "pglgraph/numtheory.hpp"

using namespace pglgraph;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kSmall = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
const std::vector<std::pair<unsigned, unsigned>> kLarger = {{5, 2}, {3, 3}, {7, 2}, {3, 4}, {5, 3}, {19, 1}};

oracle::PolyField poly_of(const FieldTable& f) {
  return {f.characteristic(), f.degree(), f.modulus()};
}

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return errc::invalid_param;
}

}  // namespace

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_power(9) == std::make_pair(3u, 2u));
  CHECK(prime_power(125) == std::make_pair(5u, 3u));
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(1).has_value());
}

TEST_CASE("build examples") {
  const auto f3 = FieldTable::build(3, 1);
  CHECK(f3.order() == 3);
  CHECK(f3.generator() == 2);

  const auto f5 = FieldTable::build(5, 1);
  CHECK(f5.generator() == 2);
  std::vector<elem> cycle;
  for (int k = 1; k <= 4; ++k) cycle.push_back(f5.pow(2, k));
  CHECK(cycle == std::vector<elem>{2, 4, 3, 1});

  const auto f9 = FieldTable::build(3, 2);
  CHECK(f9.order() == 9);
  CHECK(poly_of(f9).order(f9.generator()) == 8);
  for (elem a = 0; a < 9; ++a) CHECK(f9.pow(a, 9) == a);
}

TEST_CASE("build errors") {
  CHECK(code_of([] { FieldTable::build(4, 1); }) == errc::not_prime);
  CHECK(code_of([] { FieldTable::build(1, 1); }) == errc::not_prime);
  CHECK(code_of([] { FieldTable::build(2, 3); }) == errc::even_characteristic);
  CHECK(code_of([] { FieldTable::build(3, 10); }) == errc::cap_exceeded);
  CHECK(code_of([] { FieldTable::build(131, 2); }) == errc::cap_exceeded);
  CHECK_NOTHROW(FieldTable::build(127, 2));
}

TEST_CASE("modulus is the first irreducible and the generator the first primitive element") {
  for (auto [p, e] : kSmall) {
    for (unsigned ee : {e, e + 1}) {
      const auto f = FieldTable::build(p, ee);
      CAPTURE(f.order());
      const auto pf = poly_of(f);
      REQUIRE(oracle::is_irreducible(p, f.modulus()));
      // every earlier candidate is reducible
      for (unsigned code = 0; code < pf.q(); ++code) {
        auto m = pf.digits(code);
        m.push_back(1);
        if (m == f.modulus()) break;
        CHECK_FALSE(oracle::is_irreducible(p, m));
      }
      for (elem g = 1; g < f.generator(); ++g) CHECK(pf.order(g) < f.order() - 1);
      CHECK(pf.order(f.generator()) == f.order() - 1);
    }
  }
}

TEST_CASE("arith examples") {
  const auto f3 = FieldTable::build(3, 1);
  CHECK(f3.inv(2) == 2);
  const auto f5 = FieldTable::build(5, 1);
  CHECK(f5.inv(3) == 2);
  const auto f9 = FieldTable::build(3, 2);
  for (elem a = 1; a < 9; ++a) CHECK(f9.mul(a, f9.inv(a)) == 1);
  CHECK(code_of([&] { f9.inv(0); }) == errc::division_by_zero);
  CHECK(code_of([&] { f9.div(1, 0); }) == errc::division_by_zero);
}

TEST_CASE("table arithmetic agrees with polynomial arithmetic") {
  SUBCASE("exhaustive for q <= 13") {
    for (auto [p, e] : kSmall) {
      const auto f = FieldTable::build(p, e);
      const auto pf = poly_of(f);
      CAPTURE(f.order());
      for (elem a = 0; a < f.order(); ++a) {
        for (elem b = 0; b < f.order(); ++b) {
          REQUIRE(f.mul(a, b) == pf.mul(a, b));
          REQUIRE(f.add(a, b) == pf.add(a, b));
          REQUIRE(f.add(f.sub(a, b), b) == a);
        }
      }
    }
  }
  SUBCASE("1000 random pairs for larger q") {
    std::mt19937 rng(20240611);
    for (auto [p, e] : kLarger) {
      const auto f = FieldTable::build(p, e);
      const auto pf = poly_of(f);
      std::uniform_int_distribution<elem> pick(0, f.order() - 1);
      for (int i = 0; i < 1000; ++i) {
        const elem a = pick(rng), b = pick(rng);
        REQUIRE(f.mul(a, b) == pf.mul(a, b));
        REQUIRE(f.mul(a, b) == f.mul_poly(a, b));
        REQUIRE(f.add(a, b) == pf.add(a, b));
        if (b) REQUIRE(f.mul(f.div(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("log and exp tables") {
  for (auto [p, e] : kSmall) {
    const auto f = FieldTable::build(p, e);
    const std::uint32_t n = f.order() - 1;
    for (elem x = 1; x < f.order(); ++x) CHECK(f.exp(f.log(x)) == x);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) REQUIRE(f.mul(f.exp(i), f.exp(j)) == f.exp((i + j) % n));
    }
    CHECK(code_of([&] { f.log(0); }) == errc::division_by_zero);
  }
}

TEST_CASE("Frobenius, squares and the nonsquare") {
  for (auto [p, e] : kSmall) {
    const auto f = FieldTable::build(p, e);
    const std::uint32_t q = f.order();
    CAPTURE(q);
    for (elem a = 0; a < q; ++a) CHECK(f.pow(a, q) == a);
    std::size_t nonsquares = 0;
    for (elem a = 1; a < q; ++a) {
      bool brute = false;
      for (elem b = 1; b < q; ++b) brute = brute || f.mul(b, b) == a;
      CHECK(f.is_square(a) == brute);
      if (!brute) ++nonsquares;
      if (brute) {
        const auto r = f.sqrt(a);
        REQUIRE(r.has_value());
        CHECK(f.mul(*r, *r) == a);
      } else {
        CHECK_FALSE(f.sqrt(a).has_value());
      }
    }
    CHECK(nonsquares == (q - 1) / 2);
    const elem delta = find_nonsquare(f);
    CHECK(delta == f.generator());
    CHECK(f.pow(delta, (q - 1) / 2) == f.neg(1));
  }
  CHECK(find_nonsquare(FieldTable::build(3, 1)) == 2);
  CHECK(find_nonsquare(FieldTable::build(5, 1)) == 2);
  CHECK(find_nonsquare(FieldTable::build(7, 1)) == 3);
}

TEST_CASE("absolute trace") {
  for (auto [p, e] : kSmall) {
    const auto f = FieldTable::build(p, e);
    for (elem a = 0; a < f.order(); ++a) {
      elem t = 0, x = a;
      for (unsigned i = 0; i < e; ++i, x = f.frobenius(x)) t = f.add(t, x);
      REQUIRE(f.in_prime_field(t));
      CHECK(f.abs_trace(a) == t);
    }
  }
}

TEST_CASE("extension field examples") {
  auto f3 = std::make_shared<const FieldTable>(FieldTable::build(3, 1));
  const auto e3 = ExtFieldTable::build(f3, 2);
  CHECK(e3.order() == 9);
  std::size_t units = 0, kernel = 0;
  for (xelem z = 1; z < 9; ++z) {
    ++units;
    if (e3.norm(z) == 1) ++kernel;
  }
  CHECK(units == 8);
  CHECK(kernel == 4);
  CHECK(e3.norm(e3.sqrt_delta()) == f3->neg(2));
  CHECK(e3.trace(e3.sqrt_delta()) == 0);
  const xelem z = e3.make(1, 1);
  CHECK(e3.norm(z) == 2);
  CHECK(e3.trace(z) == 2);
  CHECK(code_of([&] { ExtFieldTable::build(f3, 1); }) == errc::delta_is_square);
}

TEST_CASE("extension field invariants") {
  for (auto [p, e] : kSmall) {
    auto f = std::make_shared<const FieldTable>(FieldTable::build(p, e));
    const auto x = ExtFieldTable::build(f, find_nonsquare(*f));
    const std::uint32_t q = f->order();
    CAPTURE(q);
    std::vector<std::size_t> fiber(q, 0);
    for (xelem z = 0; z < x.order(); ++z) {
      const elem u = x.re(z), v = x.im(z);
      const elem direct = f->sub(f->mul(u, u), f->mul(x.delta(), f->mul(v, v)));
      REQUIRE(x.norm(z) == direct);
      REQUIRE(x.trace(z) == f->add(u, u));
      REQUIRE(x.conj(z) == x.pow(z, q));
      REQUIRE(x.trace(z) == x.add(z, x.conj(z)));
      REQUIRE(x.embed(x.norm(z)) == x.mul(z, x.conj(z)));
      REQUIRE(x.pow(z, static_cast<std::int64_t>(q) * q) == z);
      if (z == 0) continue;
      ++fiber[x.norm(z)];
      REQUIRE(x.exp(x.log(z)) == z);
      REQUIRE(f->pow(x.norm(z), q - 1) == 1);
      REQUIRE(x.pow(z, static_cast<std::int64_t>(q) * q - 1) == 1);
    }
    CHECK(fiber[0] == 0);
    for (elem a = 1; a < q; ++a) CHECK(fiber[a] == q + 1);
    for (elem a = 0; a < q; ++a) {
      CHECK(x.norm(x.embed(a)) == f->mul(a, a));
      CHECK(x.trace(x.embed(a)) == f->add(a, a));
    }
  }
}

TEST_CASE("extension multiplication agrees with the defining rule") {
  std::mt19937 rng(7);
  for (auto [p, e] : kSmall) {
    auto f = std::make_shared<const FieldTable>(FieldTable::build(p, e));
    const auto x = ExtFieldTable::build(f, find_nonsquare(*f));
    std::uniform_int_distribution<xelem> pick(0, x.order() - 1);
    for (int i = 0; i < 1000; ++i) {
      const xelem a = pick(rng), b = pick(rng);
      REQUIRE(x.mul(a, b) == x.mul_direct(a, b));
      if (b) REQUIRE(x.mul(x.mul(a, x.inv(b)), b) == a);
    }
  }
}
