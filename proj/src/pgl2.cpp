#include "pglgraph/pgl2.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "pglgraph/error.hpp"

namespace pglgraph {

const char* to_string(SubgroupKind kind) noexcept {
  switch (kind) {
    case SubgroupKind::U: return "U";
    case SubgroupKind::A: return "A";
    case SubgroupKind::K: return "K";
  }
  return "?";
}

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::k: return "k";
    case Family::u: return "u";
    case Family::a: return "a";
    case Family::cusp: return "cusp";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) noexcept {
  if (s == "k" || s == "K") return Family::k;
  if (s == "u" || s == "U") return Family::u;
  if (s == "a" || s == "A") return Family::a;
  if (s == "cusp") return Family::cusp;
  return std::nullopt;
}

SubgroupKind subgroup_of(Family family) {
  switch (family) {
    case Family::k: return SubgroupKind::K;
    case Family::u: return SubgroupKind::U;
    case Family::a: return SubgroupKind::A;
    case Family::cusp: break;
  }
  throw error(errc::invalid_param, "the cusp family has no coset space");
}

Pgl2::Pgl2(std::shared_ptr<const FieldTable> field, elem delta)
    : field_(std::move(field)), delta_(delta) {
  const FieldTable& f = *field_;
  const std::uint64_t q = f.order();
  const std::uint64_t q4 = q * q * q * q;
  if (q4 > (1ull << 28)) throw error(errc::cap_exceeded, "group too large to enumerate");
  dense_index_.assign(q4, -1);
  elements_.reserve(q * q * q - q);
  for (elem a = 0; a < q; ++a) {
    for (elem b = 0; b < q; ++b) {
      for (elem c = 0; c < q; ++c) {
        for (elem d = 0; d < q; ++d) {
          const elem first = a ? a : b ? b : c ? c : d;
          if (first != 1) continue;
          if (f.mul(a, d) == f.mul(b, c)) continue;
          const PglElement x{a, b, c, d};
          dense_index_[key(x)] = static_cast<std::int32_t>(elements_.size());
          elements_.push_back(x);
        }
      }
    }
  }
}

std::uint64_t Pgl2::key(const PglElement& x) const noexcept {
  const std::uint64_t q = field_->order();
  return ((static_cast<std::uint64_t>(x.a) * q + x.b) * q + x.c) * q + x.d;
}

PglElement Pgl2::canonicalize(elem a, elem b, elem c, elem d) const {
  const FieldTable& f = *field_;
  if (f.mul(a, d) == f.mul(b, c)) throw error(errc::singular_matrix, "determinant is zero");
  const elem first = a ? a : b ? b : c ? c : d;
  const elem s = f.inv(first);
  return {f.mul(a, s), f.mul(b, s), f.mul(c, s), f.mul(d, s)};
}

PglElement Pgl2::mul(const PglElement& x, const PglElement& y) const {
  const FieldTable& f = *field_;
  return canonicalize(f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                      f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d)));
}

PglElement Pgl2::inv(const PglElement& x) const {
  const FieldTable& f = *field_;
  return canonicalize(x.d, f.neg(x.b), f.neg(x.c), x.a);
}

PglElement Pgl2::weyl() const { return canonicalize(0, 1, field_->neg(1), 0); }

elem Pgl2::det(const PglElement& x) const {
  const FieldTable& f = *field_;
  return f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c));
}

std::uint32_t Pgl2::index(const PglElement& x) const {
  const std::int32_t i = dense_index_[key(x)];
  if (i < 0) throw error(errc::invalid_param, "element is not canonical");
  return static_cast<std::uint32_t>(i);
}

std::vector<PglElement> Pgl2::subgroup(SubgroupKind kind) const {
  const FieldTable& f = *field_;
  std::vector<PglElement> out;
  switch (kind) {
    case SubgroupKind::U:
      for (elem x = 0; x < q(); ++x) out.push_back(canonicalize(1, x, 0, 1));
      break;
    case SubgroupKind::A:
      for (elem y = 1; y < q(); ++y) out.push_back(canonicalize(y, 0, 0, 1));
      break;
    case SubgroupKind::K:
      out.push_back(identity());
      for (elem b = 0; b < q(); ++b) out.push_back(canonicalize(b, delta_, 1, b));
      break;
  }
  (void)f;
  return out;
}

CosetSpace::CosetSpace(std::shared_ptr<const Pgl2> group, SubgroupKind kind)
    : group_(std::move(group)), kind_(kind) {
  const Pgl2& g = *group_;
  subgroup_ = g.subgroup(kind);
  constexpr std::uint32_t unset = ~0u;
  coset_of_.assign(g.order(), unset);
  for (const auto& x : g.elements()) {
    if (coset_of_[g.index(x)] != unset) continue;
    const auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(x);
    for (const auto& h : subgroup_) coset_of_[g.index(g.mul(x, h))] = id;
  }
}

std::vector<std::pair<elem, elem>> k_conic_solutions(const FieldTable& f, elem delta, elem c) {
  std::vector<std::pair<elem, elem>> out;
  const elem rhs = f.sub(f.mul(c, c), 1);
  for (elem y = 0; y < f.order(); ++y) {
    const elem yc = f.add(y, c);
    for (elem x = 0; x < f.order(); ++x) {
      if (f.sub(f.mul(yc, yc), f.mul(delta, f.mul(x, x))) == rhs) out.emplace_back(y, x);
    }
  }
  return out;
}

namespace {

// Loops and multi-edges are construction errors.
void validate_cosets(const CosetSpace& space, const DoubleCoset& dc) {
  std::unordered_set<std::uint32_t> seen;
  for (auto i : dc.cosets) {
    if (!seen.insert(i).second) {
      throw error(errc::invalid_param, dc.label + ": repeated coset (multi-edge)");
    }
  }
  if (seen.count(space.identity_coset())) {
    throw error(errc::invalid_param, dc.label + ": contains the identity coset (loop)");
  }
  if (!is_symmetric(space, dc)) throw error(errc::asymmetric_coset, dc.label + " is not symmetric");
}

void expect_kind(const CosetSpace& space, SubgroupKind kind) {
  if (space.kind() != kind) {
    throw error(errc::invalid_param, std::string("coset space is G/") + to_string(space.kind()) +
                                         ", expected G/" + to_string(kind));
  }
}

}  // namespace

DoubleCoset k_double_coset(const CosetSpace& space, elem c) {
  expect_kind(space, SubgroupKind::K);
  const Pgl2& g = space.group();
  const FieldTable& f = g.field();
  if (c == 1 || c == f.neg(1)) throw error(errc::forbidden_param, "K_c needs c != +-1");
  DoubleCoset dc{SubgroupKind::K, "K_" + std::to_string(c), c, {}, {}, std::nullopt};
  for (const auto& [y, x] : k_conic_solutions(f, g.delta(), c)) {
    const PglElement s = g.canonicalize(y, f.mul(g.delta(), x), 0, 1);
    dc.generators.push_back(s);
    dc.cosets.push_back(space.index_of(s));
  }
  validate_cosets(space, dc);
  return dc;
}

DoubleCoset u_double_coset(const CosetSpace& space, elem t) {
  expect_kind(space, SubgroupKind::U);
  const Pgl2& g = space.group();
  const FieldTable& f = g.field();
  if (t == 0) throw error(errc::zero_param, "U_t needs t != 0");
  DoubleCoset dc{SubgroupKind::U, "U_" + std::to_string(t), t, {}, {}, std::nullopt};
  for (elem c = 0; c < f.order(); ++c) {
    const PglElement s = g.canonicalize(c, t, f.neg(1), 0);
    dc.generators.push_back(s);
    dc.cosets.push_back(space.index_of(s));
  }
  validate_cosets(space, dc);
  return dc;
}

DoubleCoset a_double_coset(const CosetSpace& space, elem c) {
  expect_kind(space, SubgroupKind::A);
  const Pgl2& g = space.group();
  const FieldTable& f = g.field();
  if (c == 1 || c == g.delta()) throw error(errc::forbidden_param, "A_c needs c not in {1, delta}");
  DoubleCoset dc{SubgroupKind::A, "A_" + std::to_string(c), c, {}, {}, std::nullopt};
  const elem dmc = f.sub(g.delta(), c);
  const elem omc = f.sub(1, c);
  for (elem x = 1; x < f.order(); ++x) {
    const PglElement s = g.canonicalize(x, f.mul(x, dmc), 1, omc);
    dc.generators.push_back(s);
    dc.cosets.push_back(space.index_of(s));
  }
  const auto generic = double_coset_of(space, g.canonicalize(1, dmc, 1, omc));
  dc.measured_count = generic.cosets.size();
  std::set<std::uint32_t> lhs(dc.cosets.begin(), dc.cosets.end());
  std::set<std::uint32_t> rhs(generic.cosets.begin(), generic.cosets.end());
  if (lhs != rhs) throw error(errc::invalid_param, dc.label + ": coset union differs from A s A");
  validate_cosets(space, dc);
  return dc;
}

DoubleCoset double_coset_of(const CosetSpace& space, const PglElement& s) {
  const Pgl2& g = space.group();
  DoubleCoset dc{space.kind(), "generic", std::nullopt, {}, {}, std::nullopt};
  std::set<std::uint32_t> seen;
  for (const auto& h : space.subgroup()) {
    const PglElement x = g.mul(h, s);
    if (seen.insert(space.index_of(x)).second) {
      dc.generators.push_back(x);
      dc.cosets.push_back(space.index_of(x));
    }
  }
  return dc;
}

bool is_symmetric(const CosetSpace& space, const DoubleCoset& dc) {
  const Pgl2& g = space.group();
  std::unordered_set<std::uint32_t> members(dc.cosets.begin(), dc.cosets.end());
  return std::all_of(dc.generators.begin(), dc.generators.end(), [&](const PglElement& x) {
    return members.count(space.index_of(g.inv(x))) > 0;
  });
}

std::size_t count_double_cosets(const CosetSpace& space) {
  const Pgl2& g = space.group();
  std::vector<bool> seen(space.size(), false);
  std::size_t orbits = 0;
  for (std::uint32_t i = 0; i < space.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    for (const auto& h : space.subgroup()) seen[space.index_of(g.mul(h, space.reps()[i]))] = true;
  }
  return orbits;
}

bool is_admissible(Family family, const FieldTable& f, elem delta, elem param) {
  if (param >= f.order()) return false;
  switch (family) {
    case Family::k: return param != 1 && param != f.neg(1);
    case Family::u: return param != 0;
    case Family::a: return param != 1 && param != delta;
    case Family::cusp: return false;
  }
  return false;
}

std::vector<elem> admissible_params(Family family, const FieldTable& f, elem delta) {
  std::vector<elem> out;
  for (elem c = 0; c < f.order(); ++c) {
    if (is_admissible(family, f, delta, c)) out.push_back(c);
  }
  return out;
}

}  // namespace pglgraph
