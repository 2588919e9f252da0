#include "pglgraph/predicted.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pglgraph/error.hpp"

namespace pglgraph {

namespace {

constexpr double imag_tolerance = 1e-9;

double real_part(cplx v, const std::string& what) {
  if (std::abs(v.imag()) > imag_tolerance) {
    throw error(errc::invalid_param, what + " has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

void check_k_param(const FieldTable& f, elem c) {
  if (c >= f.order()) throw error(errc::invalid_param, "parameter outside F_q");
  if (c == 1 || c == f.neg(1)) throw error(errc::forbidden_param, "K_c needs c != +-1");
}

void check_a_param(const Context& ctx, elem c) {
  if (c >= ctx.q()) throw error(errc::invalid_param, "parameter outside F_q");
  if (c == 1 || c == ctx.delta()) throw error(errc::forbidden_param, "A_c needs c not in {1, delta}");
}

void check_torus(const Characters& ch, TorusChar l) {
  if (ch.squares_to_one(l)) throw error(errc::invalid_param, "Lambda^2 must be nontrivial");
}

}  // namespace

std::size_t PredictedSpectrum::total() const noexcept {
  std::size_t t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::vector<double> PredictedSpectrum::expanded() const {
  std::vector<double> out;
  out.reserve(total());
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double k_eigen_nondiscrete(const Context& ctx, MultChar mu, elem c) {
  const FieldTable& f = *ctx.field;
  check_k_param(f, c);
  if (mu.j % (ctx.q() - 1) == 0) throw error(errc::invalid_param, "mu must be nontrivial");
  cplx s = 0.0;
  for (const auto& [y, x] : k_conic_solutions(f, ctx.delta(), c)) s += ctx.chars->mult(mu, y);
  return real_part(s, "K eigenvalue for mu_" + std::to_string(mu.j));
}

namespace {

// (y, x) must lie on the conic for an admissible c; c is determined by y, x.
void check_conic_point(const Context& ctx, elem y, elem x) {
  const FieldTable& f = *ctx.field;
  if (y == 0 || y >= f.order() || x >= f.order()) throw error(errc::invalid_param, "y must be a unit");
  const elem num = f.sub(f.mul(ctx.delta(), f.mul(x, x)), f.add(1, f.mul(y, y)));
  const elem c = f.div(num, f.add(y, y));
  if (c == 1 || c == f.neg(1)) throw error(errc::invalid_param, "(y, x) lies on a forbidden conic");
}

}  // namespace

cplx s_yx(const Context& ctx, TorusChar lambda, elem y, elem x) {
  const FieldTable& f = *ctx.field;
  const ExtFieldTable& ext = *ctx.ext;
  const Characters& ch = *ctx.chars;
  check_torus(ch, lambda);
  check_conic_point(ctx, y, x);
  const elem delta = ctx.delta();
  const elem half = f.inv(f.from_int(2));
  const elem yp1 = f.add(y, 1);
  cplx s = 0.0;
  for (elem b = 0; b < f.order(); ++b) {
    const elem n = f.mul(y, f.sub(f.mul(b, b), delta));
    const elem t = f.sub(f.neg(f.mul(yp1, b)), f.mul(delta, x));
    // w = u + v sqrt(delta) with 2u = t and u^2 - delta v^2 = n.
    const elem u = f.mul(t, half);
    const elem v2 = f.div(f.sub(f.mul(u, u), n), delta);
    if (v2 == 0) {
      s += ch.torus(lambda, ext.make(u, 0));
    } else if (const auto v = f.sqrt(v2)) {
      s += ch.torus(lambda, ext.make(u, *v));
      s += ch.torus(lambda, ext.make(u, f.neg(*v)));
    }
  }
  return -s - (y == 1 ? 1.0 : 0.0);
}

cplx s_yx_brute(const Context& ctx, TorusChar lambda, elem y, elem x) {
  const FieldTable& f = *ctx.field;
  const ExtFieldTable& ext = *ctx.ext;
  check_torus(*ctx.chars, lambda);
  check_conic_point(ctx, y, x);
  const elem delta = ctx.delta();
  cplx s = 0.0;
  for (elem b = 0; b < f.order(); ++b) {
    const elem n = f.mul(y, f.sub(f.mul(b, b), delta));
    const elem t = f.sub(f.neg(f.mul(f.add(y, 1), b)), f.mul(delta, x));
    for (xelem w = 1; w < ext.order(); ++w) {
      if (ext.norm(w) == n && ext.trace(w) == t) s += ctx.chars->torus(lambda, w);
    }
  }
  return -s - (y == 1 ? 1.0 : 0.0);
}

double k_eigen_discrete(const Context& ctx, TorusChar lambda, elem c) {
  const FieldTable& f = *ctx.field;
  check_k_param(f, c);
  check_torus(*ctx.chars, lambda);
  const auto sols = k_conic_solutions(f, ctx.delta(), c);
  cplx s = 0.0;
  for (const auto& [y, x] : sols) s += s_yx(ctx, lambda, y, x);
  return real_part(s / static_cast<double>(sols.size()), "K eigenvalue for Lambda_" + std::to_string(lambda.j));
}

PredictedSpectrum u_predicted_spectrum(const Context& ctx, elem t) {
  if (t == 0) throw error(errc::zero_param, "U_t needs t != 0");
  if (t >= ctx.q()) throw error(errc::invalid_param, "parameter outside F_q");
  const Characters& ch = *ctx.chars;
  const double q = ctx.q();
  const double nu_t = ch.mult(ch.quadratic(), t).real();
  PredictedSpectrum ps;
  ps.entries.push_back({q, 0, 1, "trivial"});
  ps.entries.push_back({nu_t * q, 0, 1, "sign"});
  ps.entries.push_back({-1.0, 0, ctx.q(), label(ch.steinberg()[0])});
  ps.entries.push_back({-nu_t, 0, ctx.q(), label(ch.steinberg()[1])});
  for (const auto& rep : ch.principal_series()) {
    ps.entries.push_back({std::sqrt(q), 0, ctx.q() + 1, label(rep)});
    ps.entries.push_back({-std::sqrt(q), 0, ctx.q() + 1, label(rep)});
  }
  return ps;
}

double a_eigen_nondiscrete(const Context& ctx, MultChar mu, elem c) {
  check_a_param(ctx, c);
  const FieldTable& f = *ctx.field;
  if (mu.j % (ctx.q() - 1) == 0) throw error(errc::invalid_param, "mu must be nontrivial");
  const elem delta = ctx.delta();
  const elem dmc = f.sub(delta, c);
  const elem omc = f.sub(1, c);
  const elem skip = f.div(omc, dmc);
  const elem dm1 = f.sub(delta, 1);
  cplx s = 0.0;
  for (elem x = 1; x < f.order(); ++x) {
    if (x == 1 || x == skip) continue;
    const elem den = f.mul(f.sub(x, 1), f.sub(f.mul(x, dmc), omc));
    s += ctx.chars->mult(mu, f.div(f.mul(x, dm1), den));
  }
  return real_part(s, "A eigenvalue for mu_" + std::to_string(mu.j));
}

double a_eigen_generic(const Context& ctx, const RepParam& rep, elem c, AddChar psi) {
  check_a_param(ctx, c);
  const Characters& ch = *ctx.chars;
  const FieldTable& f = *ctx.field;
  if (psi.a == 0) throw error(errc::trivial_psi, "psi must be nontrivial");
  if (rep.kind == RepKind::steinberg && rep.param % (ctx.q() - 1) == 0) {
    throw error(errc::invalid_param, "the Steinberg representation with trivial mu has a 2-dim block");
  }
  const std::uint32_t m = ctx.q() - 1;
  const elem r = f.div(f.sub(1, c), f.sub(1, ctx.delta()));
  cplx s = 0.0;
  for (std::uint32_t j = 0; j < m; ++j) {
    const MultChar beta{j};
    const cplx g = ch.gauss(ch.inverse(beta), psi);
    s += ch.mult(beta, r) * g * g * ch.epsilon(rep, beta, psi);
  }
  const double q = ctx.q();
  return real_part(s / ((q - 1) * q), "A eigenvalue for " + label(rep));
}

double a_eigen_kloosterman(const Context& ctx, const RepParam& rep, elem c, AddChar psi) {
  check_a_param(ctx, c);
  const Characters& ch = *ctx.chars;
  const FieldTable& f = *ctx.field;
  const ExtFieldTable& ext = *ctx.ext;
  if (psi.a == 0) throw error(errc::trivial_psi, "psi must be nontrivial");
  const elem r = f.div(f.sub(1, c), f.sub(1, ctx.delta()));
  // Kloosterman sum K(m) = sum_x psi(x + m/x), tabulated over m.
  std::vector<cplx> kl(f.order(), 0.0);
  for (elem mm = 0; mm < f.order(); ++mm) {
    for (elem x = 1; x < f.order(); ++x) kl[mm] += ch.add(psi, f.add(x, f.div(mm, x)));
  }
  const double q = ctx.q();
  cplx s = 0.0;
  if (rep.kind == RepKind::discrete) {
    const TorusChar l{rep.param};
    check_torus(ch, l);
    for (xelem z = 1; z < ext.order(); ++z) {
      s += ch.torus(l, z) * ch.add(psi, ext.trace(z)) * kl[f.mul(r, ext.norm(z))];
    }
    return real_part(-s / q, "A eigenvalue for " + label(rep));
  }
  const MultChar mu{rep.param % (ctx.q() - 1)};
  if (mu.j == 0) throw error(errc::invalid_param, "mu must be nontrivial");
  for (elem u = 1; u < f.order(); ++u) {
    for (elem z = 1; z < f.order(); ++z) {
      s += ch.mult(mu, u) * ch.add(psi, u) * ch.mult(ch.inverse(mu), z) * ch.add(psi, z) *
           kl[f.mul(r, f.mul(u, z))];
    }
  }
  return real_part(s / q, "A eigenvalue for " + label(rep));
}

Block a_psi0_block(std::uint32_t qi) {
  const double q = qi;
  Block b;
  b.matrix.resize(3, 3);
  b.matrix << 0, q - 1, 0, 1, q - 3, 1, 0, q - 1, 0;
  b.pairs.push_back({0.0, Eigen::Vector3d(1, 0, -1)});
  b.pairs.push_back({q - 1, Eigen::Vector3d(1, 1, 1)});
  b.pairs.push_back({-2.0, Eigen::Vector3d((1 - q) / 2, 1, (1 - q) / 2)});
  return b;
}

Block a_steinberg1_block(std::uint32_t qi) {
  const double q = qi;
  Block b;
  b.matrix.resize(2, 2);
  b.matrix << -(q + 1) / q, 1 / q, (q * q - 1) / q, -(q - 1) / q;
  b.pairs.push_back({0.0, Eigen::Vector2d(1, q + 1)});
  b.pairs.push_back({-2.0, Eigen::Vector2d(1, -(q - 1))});
  return b;
}

unsigned expected_fixed_dim(const Characters& ch, const RepParam& rep, SubgroupKind kind) {
  const bool st1 = rep.kind == RepKind::steinberg && rep.param % (ch.q() - 1) == 0;
  switch (kind) {
    case SubgroupKind::K: return st1 ? 0 : 1;
    case SubgroupKind::U:
      return rep.kind == RepKind::discrete ? 0 : rep.kind == RepKind::steinberg ? 1 : 2;
    case SubgroupKind::A: return st1 ? 2 : 1;
  }
  return 0;
}

std::vector<FixedDim> fixed_space_dims(const Characters& ch, SubgroupKind kind) {
  std::vector<FixedDim> out;
  out.push_back({"trivial", 1, 1});
  out.push_back({"sign", 1, kind == SubgroupKind::U ? 1u : 0u});
  for (const auto& rep : ch.all_reps()) out.push_back({label(rep), ch.degree(rep), expected_fixed_dim(ch, rep, kind)});
  return out;
}

PredictedSpectrum assemble_predicted(const Context& ctx, Family family, elem param) {
  const Characters& ch = *ctx.chars;
  const std::uint32_t q = ctx.q();
  PredictedSpectrum ps;
  switch (family) {
    case Family::k: {
      check_k_param(*ctx.field, param);
      ps.entries.push_back({double(q + 1), 0, 1, "trivial"});
      for (const auto& rep : ch.all_reps()) {
        if (rep.kind == RepKind::steinberg && rep.param == 0) continue;
        const double v = rep.kind == RepKind::discrete ? k_eigen_discrete(ctx, TorusChar{rep.param}, param)
                                                       : k_eigen_nondiscrete(ctx, MultChar{rep.param}, param);
        ps.entries.push_back({v, 0, ch.degree(rep), label(rep)});
      }
      break;
    }
    case Family::u:
      ps = u_predicted_spectrum(ctx, param);
      break;
    case Family::a: {
      check_a_param(ctx, param);
      ps.entries.push_back({double(q - 1), 0, 1, "trivial"});
      for (const auto& rep : ch.all_reps()) {
        if (rep.kind == RepKind::steinberg && rep.param == 0) {
          for (const auto& pr : a_steinberg1_block(q).pairs) ps.entries.push_back({pr.value, 0, q, label(rep)});
          continue;
        }
        ps.entries.push_back({a_eigen_generic(ctx, rep, param), 0, ch.degree(rep), label(rep)});
      }
      break;
    }
    case Family::cusp:
      throw error(errc::invalid_param, "no predicted spectrum for the cusp graph");
  }
  const auto space_size = ctx.space(subgroup_of(family)).size();
  std::size_t bookkeeping = 0;
  for (const auto& d : fixed_space_dims(ch, subgroup_of(family))) bookkeeping += std::size_t(d.degree) * d.dim;
  if (ps.total() != space_size || bookkeeping != space_size) {
    throw error(errc::dimension_mismatch, "predicted " + std::to_string(ps.total()) + " eigenvalues for " +
                                              std::to_string(space_size) + " cosets");
  }
  return ps;
}

}  // namespace pglgraph
