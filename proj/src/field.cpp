#include "pglgraph/field.hpp"

#include <algorithm>
#include <string>

#include "pglgraph/error.hpp"
#include "pglgraph/numtheory.hpp"

namespace pglgraph {

namespace {

using poly = std::vector<unsigned>;

// Remainder of a modulo the monic polynomial m, coefficients mod p.
poly poly_mod(poly a, const poly& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool divides(const poly& d, const poly& f, unsigned p) {
  const poly r = poly_mod(f, d, p);
  return std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const poly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      poly g(d + 1, 0);
      std::uint64_t t = k;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

poly poly_mulmod(const poly& a, const poly& b, const poly& m, unsigned p) {
  poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<unsigned>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  r = poly_mod(std::move(r), m, p);
  r.resize(m.size() - 1, 0);
  return r;
}

}  // namespace

FieldTable FieldTable::build(unsigned p, unsigned e, std::uint32_t cap) {
  if (p < 2 || !is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
  if (p == 2) throw error(errc::even_characteristic, "characteristic 2 is not supported");
  if (e == 0) throw error(errc::invalid_param, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > cap) {
      throw error(errc::cap_exceeded, "field order exceeds cap " + std::to_string(cap));
    }
  }

  FieldTable f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);

  for (std::uint32_t k = 0; k < f.q_; ++k) {
    poly m = f.digits(k);
    m.push_back(1);
    if (is_irreducible(m, p)) {
      f.modulus_ = std::move(m);
      break;
    }
  }

  f.neg_.resize(f.q_);
  for (elem a = 0; a < f.q_; ++a) {
    auto d = f.digits(a);
    for (auto& c : d) c = (p - c) % p;
    f.neg_[a] = f.from_digits(d);
  }

  // Generator: smallest element whose order is exactly q-1.
  const std::uint64_t n = f.q_ - 1;
  const auto primes = prime_factors(n);
  auto power = [&](elem a, std::uint64_t k) {
    elem r = 1;
    elem b = a;
    while (k) {
      if (k & 1) r = f.mul_poly(r, b);
      b = f.mul_poly(b, b);
      k >>= 1;
    }
    return r;
  };
  for (elem g = 1; g < f.q_; ++g) {
    bool ok = (n == 1) ? (g == 1) : true;
    for (auto r : primes) {
      if (power(g, n / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      f.generator_ = g;
      break;
    }
  }

  f.exp_.resize(n);
  f.log_.assign(f.q_, 0);
  elem x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    f.exp_[i] = x;
    f.log_[x] = i;
    x = f.mul_poly(x, f.generator_);
  }

  f.abs_trace_.resize(f.q_);
  for (elem a = 0; a < f.q_; ++a) {
    elem t = 0;
    elem conj = a;
    for (unsigned i = 0; i < e; ++i) {
      t = f.add(t, conj);
      conj = f.pow(conj, p);
    }
    f.abs_trace_[a] = t;  // lies in the prime field, so the index is the residue
  }

  f.sqrt_.assign(f.q_, -1);
  for (elem a = 0; a < f.q_; ++a) {
    const elem s = f.mul(a, a);
    if (f.sqrt_[s] < 0) f.sqrt_[s] = static_cast<std::int32_t>(a);
  }
  return f;
}

std::vector<unsigned> FieldTable::digits(elem a) const {
  std::vector<unsigned> d(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

elem FieldTable::from_digits(const std::vector<unsigned>& d) const {
  elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
  return a;
}

elem FieldTable::add(elem a, elem b) const noexcept {
  if (e_ == 1) return (a + b) % p_;
  elem r = 0;
  elem scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

elem FieldTable::mul(elem a, elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  std::uint32_t k = log_[a] + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

elem FieldTable::inv(elem a) const {
  if (a == 0) throw error(errc::division_by_zero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

elem FieldTable::pow(elem a, std::int64_t n) const {
  if (a == 0) {
    if (n > 0) return 0;
    if (n == 0) return 1;
    throw error(errc::division_by_zero, "negative power of zero");
  }
  return exp(static_cast<std::int64_t>(log_[a]) * n);
}

std::uint32_t FieldTable::log(elem a) const {
  if (a == 0) throw error(errc::division_by_zero, "log of zero");
  return log_[a];
}

elem FieldTable::exp(std::int64_t k) const noexcept {
  const std::int64_t n = q_ - 1;
  return exp_[static_cast<std::size_t>(((k % n) + n) % n)];
}

elem FieldTable::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = p_;
  return static_cast<elem>(((n % p) + p) % p);
}

bool FieldTable::is_square(elem a) const noexcept { return sqrt_[a] >= 0; }

std::optional<elem> FieldTable::sqrt(elem a) const {
  if (sqrt_[a] < 0) return std::nullopt;
  return static_cast<elem>(sqrt_[a]);
}

elem FieldTable::mul_poly(elem a, elem b) const {
  return from_digits(poly_mulmod(digits(a), digits(b), modulus_, p_));
}

elem find_nonsquare(const FieldTable& f) { return f.generator(); }

ExtFieldTable ExtFieldTable::build(std::shared_ptr<const FieldTable> base, elem delta) {
  const FieldTable& f = *base;
  if (delta == 0 || f.is_square(delta)) {
    throw error(errc::delta_is_square, "delta must be a nonsquare");
  }
  ExtFieldTable x;
  x.base_ = std::move(base);
  x.delta_ = delta;
  const std::uint32_t q = f.order();
  x.qq_ = q * q;

  const std::uint64_t n = x.qq_ - 1;
  const auto primes = prime_factors(n);
  auto power = [&](xelem a, std::uint64_t k) {
    xelem r = 1;
    xelem b = a;
    while (k) {
      if (k & 1) r = x.mul_direct(r, b);
      b = x.mul_direct(b, b);
      k >>= 1;
    }
    return r;
  };
  for (xelem g = 1; g < x.qq_; ++g) {
    bool ok = true;
    for (auto r : primes) {
      if (power(g, n / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      x.generator_ = g;
      break;
    }
  }

  x.exp_.resize(n);
  x.log_.assign(x.qq_, 0);
  xelem z = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    x.exp_[i] = z;
    x.log_[z] = i;
    z = x.mul_direct(z, x.generator_);
  }
  return x;
}

xelem ExtFieldTable::add(xelem a, xelem b) const noexcept {
  const FieldTable& f = *base_;
  return make(f.add(re(a), re(b)), f.add(im(a), im(b)));
}

xelem ExtFieldTable::sub(xelem a, xelem b) const noexcept {
  const FieldTable& f = *base_;
  return make(f.sub(re(a), re(b)), f.sub(im(a), im(b)));
}

xelem ExtFieldTable::mul_direct(xelem a, xelem b) const noexcept {
  const FieldTable& f = *base_;
  const elem u1 = re(a), v1 = im(a), u2 = re(b), v2 = im(b);
  return make(f.add(f.mul(u1, u2), f.mul(delta_, f.mul(v1, v2))),
              f.add(f.mul(u1, v2), f.mul(u2, v1)));
}

xelem ExtFieldTable::mul(xelem a, xelem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  std::uint32_t k = log_[a] + log_[b];
  if (k >= qq_ - 1) k -= qq_ - 1;
  return exp_[k];
}

xelem ExtFieldTable::inv(xelem a) const {
  if (a == 0) throw error(errc::division_by_zero, "inverse of zero in extension");
  return exp_[(qq_ - 1 - log_[a]) % (qq_ - 1)];
}

xelem ExtFieldTable::pow(xelem a, std::int64_t n) const {
  if (a == 0) {
    if (n > 0) return 0;
    if (n == 0) return 1;
    throw error(errc::division_by_zero, "negative power of zero in extension");
  }
  return exp(static_cast<std::int64_t>(log_[a]) * n);
}

xelem ExtFieldTable::conj(xelem z) const noexcept { return make(re(z), base_->neg(im(z))); }

elem ExtFieldTable::norm(xelem z) const noexcept {
  const FieldTable& f = *base_;
  const elem u = re(z), v = im(z);
  return f.sub(f.mul(u, u), f.mul(delta_, f.mul(v, v)));
}

elem ExtFieldTable::trace(xelem z) const noexcept {
  const FieldTable& f = *base_;
  return f.add(re(z), re(z));
}

std::uint32_t ExtFieldTable::log(xelem z) const {
  if (z == 0) throw error(errc::division_by_zero, "log of zero in extension");
  return log_[z];
}

xelem ExtFieldTable::exp(std::int64_t k) const noexcept {
  const std::int64_t n = qq_ - 1;
  return exp_[static_cast<std::size_t>(((k % n) + n) % n)];
}

}  // namespace pglgraph
