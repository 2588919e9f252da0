#include "pglgraph/characters.hpp"

#include <cmath>
#include <numbers>

#include "pglgraph/error.hpp"

namespace pglgraph {

namespace {

std::vector<cplx> roots_of_unity(std::uint32_t n) {
  std::vector<cplx> z(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    z[k] = {std::cos(t), std::sin(t)};
  }
  return z;
}

}  // namespace

const char* to_string(RepKind kind) noexcept {
  switch (kind) {
    case RepKind::discrete: return "discrete";
    case RepKind::steinberg: return "steinberg";
    case RepKind::principal: return "principal";
  }
  return "?";
}

std::string label(const RepParam& rep) {
  switch (rep.kind) {
    case RepKind::discrete: return "discrete(Lambda_" + std::to_string(rep.param) + ")";
    case RepKind::steinberg: return "steinberg(mu_" + std::to_string(rep.param) + ")";
    case RepKind::principal: return "principal(mu_" + std::to_string(rep.param) + ")";
  }
  return "?";
}

Characters::Characters(std::shared_ptr<const FieldTable> field,
                       std::shared_ptr<const ExtFieldTable> ext)
    : field_(std::move(field)), ext_(std::move(ext)) {
  zeta_qm1_ = roots_of_unity(q() - 1);
  zeta_qp1_ = roots_of_unity(q() + 1);
  zeta_p_ = roots_of_unity(field_->characteristic());
}

cplx Characters::mult(MultChar c, elem x, bool zero_extend) const {
  if (x == 0) {
    if (zero_extend) return 0.0;
    throw error(errc::eval_at_zero, "multiplicative character at 0");
  }
  const std::uint64_t k = static_cast<std::uint64_t>(c.j) * field_->log(x);
  return zeta_qm1_[k % (q() - 1)];
}

cplx Characters::add(AddChar psi, elem x) const noexcept {
  return zeta_p_[field_->abs_trace(field_->mul(psi.a, x))];
}

cplx Characters::torus(TorusChar l, xelem z) const {
  if (z == 0) throw error(errc::eval_at_zero, "torus character at 0");
  const std::uint64_t k = static_cast<std::uint64_t>(l.j) * ext_->log(z);
  return zeta_qp1_[k % (q() + 1)];
}

cplx Characters::gauss(MultChar c, AddChar psi) const {
  if (psi.a == 0) throw error(errc::trivial_psi, "Gauss sum needs a nontrivial psi");
  cplx s = 0.0;
  for (elem x = 1; x < q(); ++x) s += mult(c, x) * add(psi, x);
  return s;
}

cplx Characters::gauss_ext(TorusChar l, MultChar c, AddChar psi) const {
  if (psi.a == 0) throw error(errc::trivial_psi, "Gauss sum needs a nontrivial psi");
  cplx s = 0.0;
  for (xelem z = 1; z < ext_->order(); ++z) {
    s += torus(l, z) * mult(c, ext_->norm(z)) * add(psi, ext_->trace(z));
  }
  return s;
}

cplx Characters::epsilon(const RepParam& rep, MultChar c, AddChar psi) const {
  switch (rep.kind) {
    case RepKind::discrete: {
      const TorusChar l{rep.param % (q() + 1)};
      if (squares_to_one(l)) throw error(errc::invalid_param, "discrete series needs Lambda^2 != 1");
      return -gauss_ext(l, c, psi);
    }
    case RepKind::steinberg:
    case RepKind::principal: {
      const MultChar mu{rep.param % (q() - 1)};
      if ((rep.kind == RepKind::steinberg) != squares_to_one(mu)) {
        throw error(errc::invalid_param, rep.kind == RepKind::steinberg
                                             ? "Steinberg needs mu^2 = 1"
                                             : "principal series needs mu^2 != 1");
      }
      return gauss(product(mu, c), psi) * gauss(product(inverse(mu), c), psi);
    }
  }
  throw error(errc::invalid_param, "unknown representation kind");
}

cplx Characters::norm_one_sum(TorusChar l) const {
  if (squares_to_one(l)) throw error(errc::invalid_param, "norm-one sum needs Lambda^2 != 1");
  const xelem one = ext_->embed(1);
  const xelem minus_one = ext_->embed(field_->neg(1));
  cplx s = 0.0;
  for (xelem z = 1; z < ext_->order(); ++z) {
    if (ext_->norm(z) != 1 || z == minus_one) continue;
    s += torus(l, ext_->add(one, z));
  }
  return s;
}

std::vector<RepParam> Characters::discrete_series() const {
  std::vector<RepParam> out;
  for (std::uint32_t j = 1; 2 * j < q() + 1; ++j) out.push_back({RepKind::discrete, j});
  return out;
}

std::vector<RepParam> Characters::steinberg() const {
  return {{RepKind::steinberg, 0}, {RepKind::steinberg, (q() - 1) / 2}};
}

std::vector<RepParam> Characters::principal_series() const {
  std::vector<RepParam> out;
  for (std::uint32_t j = 1; 2 * j < q() - 1; ++j) out.push_back({RepKind::principal, j});
  return out;
}

std::vector<RepParam> Characters::all_reps() const {
  auto out = steinberg();
  for (const auto& r : principal_series()) out.push_back(r);
  for (const auto& r : discrete_series()) out.push_back(r);
  return out;
}

unsigned Characters::degree(const RepParam& rep) const {
  switch (rep.kind) {
    case RepKind::discrete: return q() - 1;
    case RepKind::steinberg: return q();
    case RepKind::principal: return q() + 1;
  }
  return 0;
}

}  // namespace pglgraph
