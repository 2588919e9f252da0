#include "pglgraph/error.hpp"

namespace pglgraph {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::delta_is_square: return "DeltaIsSquare";
    case errc::eval_at_zero: return "EvalAtZero";
    case errc::trivial_psi: return "TrivialPsi";
    case errc::invalid_param: return "InvalidParam";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::forbidden_param: return "ForbiddenParam";
    case errc::zero_param: return "ZeroParam";
    case errc::asymmetric_coset: return "AsymmetricCoset";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::no_convergence: return "NoConvergence";
    case errc::cardinality_mismatch: return "CardinalityMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::not_fixed: return "NotFixed";
    case errc::zero_function: return "ZeroFunction";
    case errc::malformed_input: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace pglgraph
