#pragma once

// Kirillov models of the irreducible representations of degree > 1, the
// Bruhat factorization used to evaluate them on arbitrary group elements,
// H-fixed vectors and the Whittaker functions they lift to on G/H.

#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pglgraph/cayley.hpp"
#include "pglgraph/context.hpp"

namespace pglgraph {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// g = u_x1 h_y (small cell) or g = u_x1 h_y w u_x2 (big cell).
struct BruhatForm {
  bool big = false;
  elem x1 = 0;
  elem y = 1;
  elem x2 = 0;
};

BruhatForm bruhat(const Pgl2& g, const PglElement& x);
PglElement recompose(const Pgl2& g, const BruhatForm& b);

/// pi on the basis chi_0..chi_{q-2}, then D_0 (Steinberg, principal), then
/// D_inf (principal). Matrices act on column vectors.
class Representation {
 public:
  Representation(std::shared_ptr<const Context> ctx, RepParam rep, AddChar psi);

  const RepParam& rep() const noexcept { return rep_; }
  AddChar psi() const noexcept { return psi_; }
  const Context& context() const noexcept { return *ctx_; }
  Eigen::Index dim() const noexcept { return dim_; }
  std::optional<Eigen::Index> index_d0() const noexcept;
  std::optional<Eigen::Index> index_dinf() const noexcept;

  CMatrix act_h(elem r) const;
  CMatrix act_u(elem s) const;
  CMatrix act_w() const;
  CMatrix matrix(const PglElement& g) const;

  /// Average of pi(h) over the subgroup.
  CMatrix projector(SubgroupKind kind) const;
  /// Basis of the H-fixed vectors; RankMismatch unless its size is d_pi.
  std::vector<CVector> fixed_vectors(SubgroupKind kind) const;
  /// Sum over the double coset generators of pi(x_i), restricted to the fixed space
  /// in the basis returned by fixed_vectors.
  CMatrix hecke_on_fixed(const CosetSpace& space, const DoubleCoset& dc) const;

  /// W_v(g) = (pi(g) v)(1) on the coset representatives. NotFixed unless v is H-fixed.
  CVector whittaker_lift(const CVector& v, const CosetSpace& space) const;
  /// (pi(g) v)(1) for a single group element.
  cplx whittaker_value(const CVector& v, const PglElement& g) const;

 private:
  cplx eps(MultChar c) const;

  std::shared_ptr<const Context> ctx_;
  RepParam rep_;
  AddChar psi_;
  Eigen::Index dim_ = 0;
  MultChar mu_{};  // Steinberg and principal
  std::vector<CMatrix> u_cache_;
  CMatrix w_;
};

/// Closed form of W_Lambda on h_y = diag(y, 1).
cplx w_lambda_closed_form(const Context& ctx, TorusChar lambda, elem y);
/// W_Lambda = sum over psi != psi^0 of the normalized K-fixed lifts, as a function on G/K.
CVector w_lambda_lift(std::shared_ptr<const Context> ctx, TorusChar lambda);

/// ||A f - lambda f|| / ||f||; ZeroFunction if f vanishes.
double verify_eigenpair(const Graph& g, const CVector& f, cplx lambda);

/// f_mu(gK) = mu(a/d) where gk = (a b; 0 d) for some k in K.
CVector k_eigenfunction(const Context& ctx, MultChar mu);
/// g_mu(gU) = mu(a/d) on c = 0; h_mu(gU) = mu(det/c^2) on c != 0 (zero elsewhere).
CVector u_eigenfunction_g(const Context& ctx, MultChar mu);
CVector u_eigenfunction_h(const Context& ctx, MultChar mu);
/// f_mu(gA) = mu(-det/(cd)) when cd != 0, else 0.
CVector a_eigenfunction(const Context& ctx, MultChar mu);
/// Characteristic functions of U(1 0;0 1)A, U(0 1;-1 1)A, U(0 delta;1 0)A.
CVector a_double_coset_indicator(const Context& ctx, int which);

}  // namespace pglgraph
