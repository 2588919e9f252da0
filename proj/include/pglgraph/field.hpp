#pragma once

// Finite fields F_q (q = p^e, p odd) and the quadratic extension E = F_q(sqrt(delta)).
//
// Elements of F_q are encoded as integers 0..q-1 whose base-p digits are the
// polynomial coefficients modulo the defining polynomial (digit i is the
// coefficient of x^i). Elements of E are encoded as u + q*v for u + v*sqrt(delta).

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace pglgraph {

using elem = std::uint32_t;   // element of F_q
using xelem = std::uint32_t;  // element of E

inline constexpr std::uint32_t default_field_cap = 1u << 14;

class FieldTable {
 public:
  /// Builds F_{p^e}. The modulus is the first monic irreducible polynomial in
  /// the enumeration order of its lower coefficients (read as a base-p integer),
  /// and the generator is the smallest element index of order q-1.
  static FieldTable build(unsigned p, unsigned e, std::uint32_t cap = default_field_cap);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Coefficients c_0..c_e of the monic modulus (c_e = 1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  elem generator() const noexcept { return generator_; }

  elem add(elem a, elem b) const noexcept;
  elem sub(elem a, elem b) const noexcept { return add(a, neg_[b]); }
  elem neg(elem a) const noexcept { return neg_[a]; }
  elem mul(elem a, elem b) const noexcept;
  elem inv(elem a) const;
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem pow(elem a, std::int64_t n) const;

  /// Discrete logarithm base the generator, in 0..q-2. Undefined at 0.
  std::uint32_t log(elem a) const;
  elem exp(std::int64_t k) const noexcept;

  /// Image of an integer in the prime field.
  elem from_int(std::int64_t n) const noexcept;
  /// Base-p digits (polynomial coefficients), length e.
  std::vector<unsigned> digits(elem a) const;
  elem from_digits(const std::vector<unsigned>& d) const;

  bool is_square(elem a) const noexcept;
  std::optional<elem> sqrt(elem a) const;
  /// Absolute trace F_q -> F_p, returned as a residue 0..p-1.
  unsigned abs_trace(elem a) const noexcept { return abs_trace_[a]; }
  elem frobenius(elem a) const { return pow(a, p_); }
  /// True when a lies in the prime subfield F_p.
  bool in_prime_field(elem a) const noexcept { return a < p_; }

  /// Multiplication by schoolbook polynomial arithmetic; independent of the
  /// log tables and kept for cross-checking them.
  elem mul_poly(elem a, elem b) const;

 private:
  FieldTable() = default;

  unsigned p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  elem generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<elem> exp_;
  std::vector<elem> neg_;
  std::vector<std::uint32_t> abs_trace_;
  std::vector<std::int32_t> sqrt_;  // -1 for nonsquares
};

/// The nonsquare used throughout: the field generator.
elem find_nonsquare(const FieldTable& f);

class ExtFieldTable {
 public:
  static ExtFieldTable build(std::shared_ptr<const FieldTable> base, elem delta);

  const FieldTable& base() const noexcept { return *base_; }
  elem delta() const noexcept { return delta_; }
  std::uint32_t order() const noexcept { return qq_; }
  xelem generator() const noexcept { return generator_; }

  xelem make(elem u, elem v) const noexcept { return u + base_->order() * v; }
  xelem embed(elem a) const noexcept { return a; }
  elem re(xelem z) const noexcept { return z % base_->order(); }
  elem im(xelem z) const noexcept { return z / base_->order(); }
  xelem sqrt_delta() const noexcept { return make(0, 1); }
  bool in_base(xelem z) const noexcept { return im(z) == 0; }

  xelem add(xelem a, xelem b) const noexcept;
  xelem sub(xelem a, xelem b) const noexcept;
  xelem mul(xelem a, xelem b) const noexcept;
  /// Product from the defining rule (u1+v1 s)(u2+v2 s) = (u1u2 + delta v1v2) + (u1v2 + u2v1) s.
  xelem mul_direct(xelem a, xelem b) const noexcept;
  xelem inv(xelem a) const;
  xelem pow(xelem a, std::int64_t n) const;
  /// Galois conjugate z^q.
  xelem conj(xelem z) const noexcept;

  elem norm(xelem z) const noexcept;
  elem trace(xelem z) const noexcept;

  std::uint32_t log(xelem z) const;
  xelem exp(std::int64_t k) const noexcept;

 private:
  ExtFieldTable() = default;

  std::shared_ptr<const FieldTable> base_;
  elem delta_ = 0;
  std::uint32_t qq_ = 0;
  xelem generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<xelem> exp_;
};

}  // namespace pglgraph
