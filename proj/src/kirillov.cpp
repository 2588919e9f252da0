#include "pglgraph/kirillov.hpp"

#include <cmath>

#include "pglgraph/error.hpp"
#include "pglgraph/predicted.hpp"

namespace pglgraph {

BruhatForm bruhat(const Pgl2& g, const PglElement& x) {
  const FieldTable& f = g.field();
  if (x.c == 0) return {false, f.div(x.b, x.d), f.div(x.a, x.d), 0};
  const elem cinv = f.inv(x.c);
  return {true, f.mul(x.a, cinv), f.mul(g.det(x), f.mul(cinv, cinv)), f.mul(x.d, cinv)};
}

PglElement recompose(const Pgl2& g, const BruhatForm& b) {
  const PglElement small = g.canonicalize(b.y, b.x1, 0, 1);  // u_x1 h_y
  if (!b.big) return small;
  return g.mul(g.mul(small, g.weyl()), g.canonicalize(1, b.x2, 0, 1));
}

Representation::Representation(std::shared_ptr<const Context> ctx, RepParam rep, AddChar psi)
    : ctx_(std::move(ctx)), rep_(rep), psi_(psi) {
  const Characters& ch = *ctx_->chars;
  const std::uint32_t q = ctx_->q();
  if (psi.a == 0) throw error(errc::trivial_psi, "Kirillov model needs a nontrivial psi");
  switch (rep.kind) {
    case RepKind::discrete:
      if (ch.squares_to_one(TorusChar{rep.param % (q + 1)})) {
        throw error(errc::invalid_param, "discrete series needs Lambda^2 != 1");
      }
      dim_ = q - 1;
      break;
    case RepKind::steinberg:
      mu_ = {rep.param % (q - 1)};
      if (!ch.squares_to_one(mu_)) throw error(errc::invalid_param, "Steinberg needs mu^2 = 1");
      dim_ = q;
      break;
    case RepKind::principal:
      mu_ = {rep.param % (q - 1)};
      if (ch.squares_to_one(mu_)) throw error(errc::invalid_param, "principal series needs mu^2 != 1");
      dim_ = q + 1;
      break;
  }

  const std::uint32_t m = q - 1;
  std::vector<cplx> gauss(m);
  for (std::uint32_t j = 0; j < m; ++j) gauss[j] = ch.gauss(MultChar{j}, psi_);

  u_cache_.resize(q);
  u_cache_[0] = CMatrix::Identity(dim_, dim_);
  for (elem s = 1; s < q; ++s) {
    CMatrix u = CMatrix::Identity(dim_, dim_);
    for (std::uint32_t a = 0; a < m; ++a) {
      for (std::uint32_t b = 0; b < m; ++b) {
        // beta alpha^-1 (s) Gamma(alpha beta^-1, psi) / (q-1)
        const MultChar ba{(b + m - a) % m};
        u(b, a) = ch.mult(ba, s) * gauss[(a + m - b) % m] / static_cast<double>(m);
      }
    }
    u_cache_[s] = std::move(u);
  }

  const double qd = q;
  w_ = CMatrix::Zero(dim_, dim_);
  for (std::uint32_t a = 0; a < m; ++a) {
    const MultChar alpha{a};
    const cplx ea = eps(alpha);
    w_(ch.inverse(alpha).j, a) += ea / qd;
    if (rep.kind == RepKind::steinberg && ch.product(alpha, mu_).j == 0) {
      w_(*index_d0(), a) += -ea * (qd * qd - 1) / qd;
    } else if (rep.kind == RepKind::principal) {
      if (ch.product(alpha, mu_).j == 0) w_(*index_d0(), a) += -ea * (qd - 1) / qd;
      if (ch.product(alpha, ch.inverse(mu_)).j == 0) w_(*index_dinf(), a) += -ea * (qd - 1) / qd;
    }
  }
  const MultChar mu_inv = ch.inverse(mu_);
  if (rep.kind == RepKind::steinberg) {
    const cplx e = -eps(mu_inv) / qd;
    w_(mu_inv.j, *index_d0()) += e;
    w_(*index_d0(), *index_d0()) += e;
  } else if (rep.kind == RepKind::principal) {
    const cplx e0 = -eps(mu_) / qd;
    w_(mu_inv.j, *index_d0()) += e0;
    w_(*index_dinf(), *index_d0()) += e0;
    const cplx e1 = -eps(mu_inv) / qd;
    w_(mu_.j, *index_dinf()) += e1;
    w_(*index_d0(), *index_dinf()) += e1;
  }
}

cplx Representation::eps(MultChar c) const { return ctx_->chars->epsilon(rep_, c, psi_); }

std::optional<Eigen::Index> Representation::index_d0() const noexcept {
  if (rep_.kind == RepKind::discrete) return std::nullopt;
  return static_cast<Eigen::Index>(ctx_->q() - 1);
}

std::optional<Eigen::Index> Representation::index_dinf() const noexcept {
  if (rep_.kind != RepKind::principal) return std::nullopt;
  return static_cast<Eigen::Index>(ctx_->q());
}

CMatrix Representation::act_h(elem r) const {
  if (r == 0) throw error(errc::zero_param, "h_r needs r != 0");
  const Characters& ch = *ctx_->chars;
  CMatrix h = CMatrix::Zero(dim_, dim_);
  for (std::uint32_t j = 0; j + 1 < ctx_->q(); ++j) h(j, j) = ch.mult(MultChar{j}, r);
  if (auto i = index_d0()) h(*i, *i) = ch.mult(mu_, r);
  if (auto i = index_dinf()) h(*i, *i) = ch.mult(ch.inverse(mu_), r);
  return h;
}

CMatrix Representation::act_u(elem s) const {
  if (s >= ctx_->q()) throw error(errc::invalid_param, "element outside F_q");
  return u_cache_[s];
}

CMatrix Representation::act_w() const { return w_; }

CMatrix Representation::matrix(const PglElement& g) const {
  const BruhatForm b = bruhat(*ctx_->group, g);
  CMatrix m = u_cache_[b.x1] * act_h(b.y);
  if (b.big) m = m * w_ * u_cache_[b.x2];
  return m;
}

CMatrix Representation::projector(SubgroupKind kind) const {
  const auto elems = ctx_->group->subgroup(kind);
  CMatrix p = CMatrix::Zero(dim_, dim_);
  for (const auto& h : elems) p += matrix(h);
  return p / static_cast<double>(elems.size());
}

std::vector<CVector> Representation::fixed_vectors(SubgroupKind kind) const {
  const CMatrix p = projector(kind);
  const Eigen::ColPivHouseholderQR<CMatrix> qr(p);
  // Absolute threshold: the entries of P are O(1) and a zero projector must have rank 0.
  unsigned rank = 0;
  for (Eigen::Index i = 0; i < dim_; ++i) rank += std::abs(qr.matrixR()(i, i)) > 1e-8 ? 1 : 0;
  const unsigned expected = expected_fixed_dim(*ctx_->chars, rep_, kind);
  const double trace = p.trace().real();
  if (rank != expected || std::abs(trace - expected) > 1e-8) {
    throw error(errc::rank_mismatch, label(rep_) + " under " + to_string(kind) + ": rank " +
                                         std::to_string(rank) + ", expected " + std::to_string(expected));
  }
  const CMatrix q = qr.householderQ() * CMatrix::Identity(dim_, rank);
  std::vector<CVector> out;
  for (unsigned i = 0; i < rank; ++i) out.push_back(q.col(i));
  return out;
}

CMatrix Representation::hecke_on_fixed(const CosetSpace& space, const DoubleCoset& dc) const {
  const auto basis = fixed_vectors(space.kind());
  const auto r = static_cast<Eigen::Index>(basis.size());
  if (r == 0) return CMatrix(0, 0);
  CMatrix b(dim_, r);
  for (Eigen::Index i = 0; i < r; ++i) b.col(i) = basis[i];
  CMatrix image = CMatrix::Zero(dim_, r);
  for (const auto& x : dc.generators) image += matrix(x) * b;
  return b.colPivHouseholderQr().solve(image);
}

cplx Representation::whittaker_value(const CVector& v, const PglElement& g) const {
  const CVector w = matrix(g) * v;
  return w.head(ctx_->q() - 1).sum();
}

CVector Representation::whittaker_lift(const CVector& v, const CosetSpace& space) const {
  if (v.size() != dim_) throw error(errc::dimension_mismatch, "vector length differs from the model");
  const double scale = std::max(1.0, v.norm());
  for (const auto& h : space.subgroup()) {
    if ((matrix(h) * v - v).norm() > 1e-9 * scale) {
      throw error(errc::not_fixed, "vector is not fixed by " + std::string(to_string(space.kind())));
    }
  }
  CVector out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out(i) = whittaker_value(v, space.reps()[i]);
  return out;
}

cplx w_lambda_closed_form(const Context& ctx, TorusChar lambda, elem y) {
  const FieldTable& f = *ctx.field;
  const ExtFieldTable& ext = *ctx.ext;
  const Characters& ch = *ctx.chars;
  if (y == 0 || y >= f.order()) throw error(errc::invalid_param, "y must be a unit");
  if (ch.squares_to_one(lambda)) throw error(errc::invalid_param, "Lambda^2 must be nontrivial");
  const double q = ctx.q();
  const cplx gamma = ch.gauss_ext(lambda, ch.trivial(), ch.base_psi());
  if (y == 1) return -gamma * ch.norm_one_sum(lambda) / q + q;
  const TorusChar bar = ch.conjugate(lambda);
  const xelem shift = ext.embed(f.div(f.add(y, 1), f.from_int(2)));
  const xelem one = ext.embed(1);
  cplx s = 0.0;
  for (xelem z = 1; z < ext.order(); ++z) {
    if (ext.norm(z) != y) continue;
    s += ch.torus(bar, ext.add(one, ext.mul(shift, ext.inv(z))));
  }
  return -gamma * s / q;
}

CVector w_lambda_lift(std::shared_ptr<const Context> ctx, TorusChar lambda) {
  const std::uint32_t q = ctx->q();
  const CosetSpace& space = *ctx->mod_k;
  CVector total = CVector::Zero(space.size());
  for (elem a = 1; a < q; ++a) {
    const Representation pi(ctx, {RepKind::discrete, lambda.j}, AddChar{a});
    CVector theta = CVector::Ones(pi.dim());
    const CVector v = pi.projector(SubgroupKind::K) * theta * (double(q + 1) / double(q - 1));
    total += pi.whittaker_lift(v, space);
  }
  return total;
}

double verify_eigenpair(const Graph& g, const CVector& f, cplx lambda) {
  if (static_cast<std::size_t>(f.size()) != g.n()) throw error(errc::dimension_mismatch, "function length differs from n");
  const double norm = f.norm();
  if (norm < 1e-12) throw error(errc::zero_function, "eigenfunction vanishes");
  double r2 = 0.0;
  for (std::size_t i = 0; i < g.n(); ++i) {
    cplx s = -lambda * f(i);
    for (auto j : g.adj[i]) s += f(j);
    r2 += std::norm(s);
  }
  return std::sqrt(r2) / norm;
}

CVector k_eigenfunction(const Context& ctx, MultChar mu) {
  const CosetSpace& space = *ctx.mod_k;
  const Pgl2& g = *ctx.group;
  const FieldTable& f = *ctx.field;
  CVector out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    bool found = false;
    for (const auto& k : space.subgroup()) {
      const PglElement b = g.mul(space.reps()[i], k);
      if (b.c != 0) continue;
      out(i) = ctx.chars->mult(mu, f.div(b.a, b.d));
      found = true;
      break;
    }
    if (!found) throw error(errc::invalid_param, "coset meets no upper triangular element");
  }
  return out;
}

CVector u_eigenfunction_g(const Context& ctx, MultChar mu) {
  const CosetSpace& space = *ctx.mod_u;
  const FieldTable& f = *ctx.field;
  CVector out = CVector::Zero(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& x = space.reps()[i];
    if (x.c == 0) out(i) = ctx.chars->mult(mu, f.div(x.a, x.d));
  }
  return out;
}

CVector u_eigenfunction_h(const Context& ctx, MultChar mu) {
  const CosetSpace& space = *ctx.mod_u;
  const FieldTable& f = *ctx.field;
  CVector out = CVector::Zero(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& x = space.reps()[i];
    if (x.c != 0) out(i) = ctx.chars->mult(mu, f.div(ctx.group->det(x), f.mul(x.c, x.c)));
  }
  return out;
}

CVector a_eigenfunction(const Context& ctx, MultChar mu) {
  const CosetSpace& space = *ctx.mod_a;
  const FieldTable& f = *ctx.field;
  CVector out = CVector::Zero(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& x = space.reps()[i];
    if (x.c != 0 && x.d != 0) out(i) = ctx.chars->mult(mu, f.neg(f.div(ctx.group->det(x), f.mul(x.c, x.d))));
  }
  return out;
}

CVector a_double_coset_indicator(const Context& ctx, int which) {
  if (which < 1 || which > 3) throw error(errc::invalid_param, "double coset index must be 1, 2 or 3");
  const CosetSpace& space = *ctx.mod_a;
  CVector out = CVector::Zero(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& x = space.reps()[i];
    const int cls = x.c == 0 ? 1 : x.d == 0 ? 3 : 2;
    if (cls == which) out(i) = 1.0;
  }
  return out;
}

}  // namespace pglgraph
