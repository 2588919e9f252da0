#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pglgraph {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (p, e) with n = p^e, or nullopt when n is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n);

}  // namespace pglgraph
