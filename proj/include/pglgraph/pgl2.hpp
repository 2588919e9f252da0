#pragma once

// PGL_2(F_q): canonical elements, the abelian subgroups U, A, K, the coset
// spaces G/H and the symmetric double cosets that define the graphs.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pglgraph/field.hpp"

namespace pglgraph {

/// A matrix (a b; c d) scaled so that its first nonzero entry (row-major) is 1.
struct PglElement {
  elem a = 1, b = 0, c = 0, d = 1;
  friend auto operator<=>(const PglElement&, const PglElement&) = default;
};

enum class SubgroupKind { U, A, K };
enum class Family { k, u, a, cusp };

const char* to_string(SubgroupKind kind) noexcept;
const char* to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view s) noexcept;
SubgroupKind subgroup_of(Family family);

class Pgl2 {
 public:
  Pgl2(std::shared_ptr<const FieldTable> field, elem delta);

  const FieldTable& field() const noexcept { return *field_; }
  elem delta() const noexcept { return delta_; }
  std::uint32_t q() const noexcept { return field_->order(); }

  PglElement canonicalize(elem a, elem b, elem c, elem d) const;
  PglElement mul(const PglElement& x, const PglElement& y) const;
  PglElement inv(const PglElement& x) const;
  PglElement identity() const noexcept { return {1, 0, 0, 1}; }
  /// w = (0 1; -1 0).
  PglElement weyl() const;
  /// Determinant of the canonical representative.
  elem det(const PglElement& x) const;
  bool contains_upper_triangular(const PglElement& x) const noexcept { return x.c == 0; }

  std::size_t order() const noexcept { return elements_.size(); }
  /// All of G, sorted lexicographically.
  const std::vector<PglElement>& elements() const noexcept { return elements_; }
  std::uint32_t index(const PglElement& x) const;

  /// U = {(1 x; 0 1)}, A = {(y 0; 0 1)}, K = {(b delta; 1 b)} plus the identity.
  std::vector<PglElement> subgroup(SubgroupKind kind) const;

 private:
  std::uint64_t key(const PglElement& x) const noexcept;

  std::shared_ptr<const FieldTable> field_;
  elem delta_;
  std::vector<PglElement> elements_;
  std::vector<std::int32_t> dense_index_;
};

class CosetSpace {
 public:
  CosetSpace(std::shared_ptr<const Pgl2> group, SubgroupKind kind);

  const Pgl2& group() const noexcept { return *group_; }
  std::shared_ptr<const Pgl2> group_ptr() const noexcept { return group_; }
  SubgroupKind kind() const noexcept { return kind_; }
  const std::vector<PglElement>& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return reps_.size(); }
  /// Lexicographically smallest element of each coset gH, in increasing order.
  const std::vector<PglElement>& reps() const noexcept { return reps_; }
  std::uint32_t index_of(const PglElement& g) const { return coset_of_[group_->index(g)]; }
  std::uint32_t identity_coset() const { return index_of(group_->identity()); }

 private:
  std::shared_ptr<const Pgl2> group_;
  SubgroupKind kind_;
  std::vector<PglElement> subgroup_;
  std::vector<PglElement> reps_;
  std::vector<std::uint32_t> coset_of_;
};

/// H s H written as a union of cosets x_i H.
struct DoubleCoset {
  SubgroupKind kind = SubgroupKind::K;
  std::string label;
  std::optional<elem> param;
  std::vector<std::uint32_t> cosets;  // indices into the coset space
  std::vector<PglElement> generators; // x_i, one per coset
  /// Coset count of H s H measured by direct enumeration (A family only).
  std::optional<std::size_t> measured_count;
};

/// Solutions (y, x) of (y + c)^2 - delta x^2 = c^2 - 1, sorted.
std::vector<std::pair<elem, elem>> k_conic_solutions(const FieldTable& f, elem delta, elem c);

DoubleCoset k_double_coset(const CosetSpace& space, elem c);
DoubleCoset u_double_coset(const CosetSpace& space, elem t);
DoubleCoset a_double_coset(const CosetSpace& space, elem c);
/// Ground truth: the cosets h s H for h in H.
DoubleCoset double_coset_of(const CosetSpace& space, const PglElement& s);

bool is_symmetric(const CosetSpace& space, const DoubleCoset& dc);
/// Number of H-double cosets in G (orbits of H acting on G/H from the left).
std::size_t count_double_cosets(const CosetSpace& space);

/// Parameters for which the family's double coset is admissible, increasing.
std::vector<elem> admissible_params(Family family, const FieldTable& f, elem delta);
bool is_admissible(Family family, const FieldTable& f, elem delta, elem param);

}  // namespace pglgraph
