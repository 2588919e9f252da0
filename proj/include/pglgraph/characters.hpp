#pragma once

// Characters of F_q (additive and multiplicative), torus characters of
// E^x / F^x, Gauss sums and the epsilon factors that pin down the action of the
// Weyl element in the Kirillov models.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pglgraph/field.hpp"

namespace pglgraph {

using cplx = std::complex<double>;

/// chi_j(g^k) = zeta_{q-1}^{jk}.
struct MultChar {
  std::uint32_t j = 0;
  friend bool operator==(MultChar, MultChar) = default;
};

/// psi^a(x) = exp(2 pi i AbsTr(a x) / p).
struct AddChar {
  elem a = 0;
  friend bool operator==(AddChar, AddChar) = default;
};

/// Lambda_j(h^k) = zeta_{q+1}^{jk}, h the generator of E^x. Trivial on F^x.
struct TorusChar {
  std::uint32_t j = 0;
  friend bool operator==(TorusChar, TorusChar) = default;
};

enum class RepKind { discrete, steinberg, principal };

/// An irreducible representation of PGL_2(F_q) of degree > 1. For discrete
/// series `param` indexes a TorusChar, otherwise a MultChar mu.
struct RepParam {
  RepKind kind = RepKind::principal;
  std::uint32_t param = 0;
  friend bool operator==(const RepParam&, const RepParam&) = default;
};

const char* to_string(RepKind kind) noexcept;
std::string label(const RepParam& rep);

class Characters {
 public:
  Characters(std::shared_ptr<const FieldTable> field, std::shared_ptr<const ExtFieldTable> ext);

  const FieldTable& field() const noexcept { return *field_; }
  const ExtFieldTable& ext() const noexcept { return *ext_; }
  std::shared_ptr<const FieldTable> field_ptr() const noexcept { return field_; }
  std::shared_ptr<const ExtFieldTable> ext_ptr() const noexcept { return ext_; }
  std::uint32_t q() const noexcept { return field_->order(); }

  MultChar trivial() const noexcept { return {0}; }
  MultChar quadratic() const noexcept { return {(q() - 1) / 2}; }
  MultChar inverse(MultChar c) const noexcept { return {(q() - 1 - c.j) % (q() - 1)}; }
  MultChar product(MultChar a, MultChar b) const noexcept { return {(a.j + b.j) % (q() - 1)}; }
  TorusChar conjugate(TorusChar l) const noexcept { return {(q() + 1 - l.j) % (q() + 1)}; }
  AddChar base_psi() const noexcept { return {1}; }
  bool squares_to_one(MultChar c) const noexcept { return (2 * c.j) % (q() - 1) == 0; }
  bool squares_to_one(TorusChar l) const noexcept { return (2 * l.j) % (q() + 1) == 0; }

  /// chi(x). With zero_extend the value at 0 is 0 instead of an error.
  cplx mult(MultChar c, elem x, bool zero_extend = false) const;
  cplx add(AddChar psi, elem x) const noexcept;
  cplx torus(TorusChar l, xelem z) const;

  /// Sum over F^x of chi(x) psi(x).
  cplx gauss(MultChar c, AddChar psi) const;
  /// Sum over E^x of Lambda(z) chi(N z) psi(Tr z).
  cplx gauss_ext(TorusChar l, MultChar c, AddChar psi) const;
  cplx epsilon(const RepParam& rep, MultChar c, AddChar psi) const;
  /// Sum of Lambda(1+z) over norm-one z != -1.
  cplx norm_one_sum(TorusChar l) const;

  /// Canonical parameters (one per equivalence class).
  std::vector<RepParam> discrete_series() const;
  std::vector<RepParam> steinberg() const;
  std::vector<RepParam> principal_series() const;
  std::vector<RepParam> all_reps() const;
  unsigned degree(const RepParam& rep) const;

 private:
  std::shared_ptr<const FieldTable> field_;
  std::shared_ptr<const ExtFieldTable> ext_;
  std::vector<cplx> zeta_qm1_;  // zeta_{q-1}^k
  std::vector<cplx> zeta_qp1_;  // zeta_{q+1}^k
  std::vector<cplx> zeta_p_;    // zeta_p^k
};

}  // namespace pglgraph
