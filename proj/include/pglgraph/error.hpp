#pragma once

#include <stdexcept>
#include <string>

namespace pglgraph {

enum class errc {
  not_prime,
  even_characteristic,
  cap_exceeded,
  division_by_zero,
  delta_is_square,
  eval_at_zero,
  trivial_psi,
  invalid_param,
  singular_matrix,
  forbidden_param,
  zero_param,
  asymmetric_coset,
  not_symmetric,
  no_convergence,
  cardinality_mismatch,
  dimension_mismatch,
  rank_mismatch,
  not_fixed,
  zero_function,
  malformed_input,
};

const char* to_string(errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace pglgraph
