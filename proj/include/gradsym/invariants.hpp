#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradsym/algebra.hpp"

namespace gradsym {

Subspace center(const GradedAlgebra& a);
/// {x : xs = sx for all s in S}.
Subspace centralizer(const GradedAlgebra& a, const Subspace& s);
/// Span of all [e_i, e_j].
Subspace commutator_subspace(const GradedAlgebra& a);
/// Span of [e_i, e_j] with deg(e_i) deg(e_j) = e.
Subspace graded_commutator_space(const GradedAlgebra& a);
/// Degrees with a nonzero component, sorted.
std::vector<GroupElem> support(const GradedAlgebra& a);

struct InvertibilityResult {
  bool invertible = false;
  Vector inverse;
};

InvertibilityResult is_invertible(const Element& x);

struct ComponentInvertibility {
  bool has_invertible = false;
  /// An invertible element of A_g when one exists over the base field.
  Vector witness;
  /// 1 if found over the base field, r > 1 if only over F_{q^r}, 0 if none up to degree 3.
  std::uint32_t extension_degree = 0;
  bool identically_singular = false;
};

ComponentInvertibility component_has_invertible(const GradedAlgebra& a, GroupElem g);

inline constexpr std::uint64_t kMaxDivisionScan = 1'000'000;

struct DivisionVerdict {
  enum class Status { Yes, No, Unknown };
  Status status = Status::Unknown;
  /// Yes: "exhaustive", "one-dimensional", "quaternion-norm-form" or
  /// "irreducible-minimal-polynomial".
  std::string certificate;
  std::uint64_t scan_size = 0;
  /// No: a nonzero homogeneous element that is not invertible.
  Vector witness;
  std::string justification;
};

DivisionVerdict is_graded_division(const GradedAlgebra& a);

/// Nonzero, homogeneous and with singular left multiplication.
bool is_division_witness(const GradedAlgebra& a, const Vector& w);

std::string status_name(DivisionVerdict::Status s);

}  // namespace gradsym
