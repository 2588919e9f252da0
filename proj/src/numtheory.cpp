#include "pglgraph/numtheory.hpp"

namespace pglgraph {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n) {
  const auto ps = prime_factors(n);
  if (ps.size() != 1) return std::nullopt;
  unsigned e = 0;
  while (n > 1) {
    n /= ps[0];
    ++e;
  }
  return std::make_pair(static_cast<unsigned>(ps[0]), e);
}

}  // namespace pglgraph
