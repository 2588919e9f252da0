#pragma once

// Everything derived from a single field size: F_q, E, characters, G and the
// three coset spaces. Immutable once built; shared between jobs.

#include <memory>

#include "pglgraph/characters.hpp"
#include "pglgraph/field.hpp"
#include "pglgraph/pgl2.hpp"

namespace pglgraph {

struct Context {
  std::shared_ptr<const FieldTable> field;
  std::shared_ptr<const ExtFieldTable> ext;
  std::shared_ptr<const Characters> chars;
  std::shared_ptr<const Pgl2> group;
  std::shared_ptr<const CosetSpace> mod_k;
  std::shared_ptr<const CosetSpace> mod_u;
  std::shared_ptr<const CosetSpace> mod_a;

  static std::shared_ptr<const Context> make(unsigned p, unsigned e);
  /// Resolves q to (p, e); NotPrime if q is not a prime power.
  static std::shared_ptr<const Context> make_q(std::uint32_t q);

  std::uint32_t q() const noexcept { return field->order(); }
  elem delta() const noexcept { return group->delta(); }
  const CosetSpace& space(SubgroupKind kind) const;
};

}  // namespace pglgraph
