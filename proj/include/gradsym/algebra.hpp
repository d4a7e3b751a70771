#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradsym/group.hpp"
#include "gradsym/linalg.hpp"

namespace gradsym {

inline constexpr std::size_t kMaxAlgebraDim = 64;

struct StructureTerm {
  std::uint32_t index;
  Scalar coeff;

  bool operator==(const StructureTerm& o) const { return index == o.index && coeff == o.coeff; }
};

/// Raw description of a G-graded algebra: e_i e_j = sum_k c_ij^k e_k.
struct AlgebraData {
  Field field;
  Group group;
  std::size_t dim = 0;
  std::vector<GroupElem> degrees;
  /// dim*dim lists, entry i*dim+j holds the nonzero c_ij^k sorted by k.
  std::vector<std::vector<StructureTerm>> products;
  Vector unit;
  std::vector<std::string> labels;
};

struct ValidationReport {
  std::vector<std::string> problems;
  std::vector<std::array<std::uint32_t, 3>> associativity_failures;
  /// (i, j, k) with c_ij^k != 0 but deg k != deg i * deg j.
  std::vector<std::array<std::uint32_t, 3>> grading_failures;
  /// Basis indices where 1 e_i != e_i or e_i 1 != e_i.
  std::vector<std::uint32_t> unit_failures;
  bool unit_inhomogeneous = false;

  bool ok() const {
    return problems.empty() && associativity_failures.empty() && grading_failures.empty() &&
           unit_failures.empty() && !unit_inhomogeneous;
  }
  std::string summary() const;
};

enum class ValidationDepth { Exhaustive, FirstFailure };

ValidationReport validate_data(const AlgebraData& data, ValidationDepth depth = ValidationDepth::Exhaustive);

/// Immutable handle to a validated finite-dimensional graded algebra.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;

  /// Validates and throws Error(ValidationError) carrying the report summary.
  static GradedAlgebra make(AlgebraData data);
  /// Skips validation; used by callers that validate separately.
  static GradedAlgebra make_unchecked(AlgebraData data);

  bool valid() const noexcept { return d_ != nullptr; }
  const Field& field() const { return d_->field; }
  const Group& group() const { return d_->group; }
  std::size_t dim() const { return d_->dim; }
  GroupElem degree(std::size_t i) const { return d_->degrees[i]; }
  const std::vector<GroupElem>& degrees() const { return d_->degrees; }
  const std::vector<StructureTerm>& product(std::size_t i, std::size_t j) const {
    return d_->products[i * d_->dim + j];
  }
  const Vector& unit() const { return d_->unit; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  std::string label(std::size_t i) const;
  const AlgebraData& data() const { return *d_; }

  Vector zero() const { return zero_vector(field(), dim()); }
  Vector basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector commutator(const Vector& x, const Vector& y) const;
  /// Column j is x e_j.
  Matrix left_multiplication(const Vector& x) const;
  /// Basis indices of degree g.
  std::vector<std::size_t> component_indices(GroupElem g) const;
  /// Degree of x if x is nonzero and homogeneous.
  std::optional<GroupElem> homogeneous_degree(const Vector& x) const;

  bool same_object(const GradedAlgebra& o) const noexcept { return d_ == o.d_; }
  /// Structural equality (field, group, degrees, structure constants, unit, labels).
  bool operator==(const GradedAlgebra& o) const;

 private:
  std::shared_ptr<const AlgebraData> d_;
};

/// An element tied to its owning algebra.
struct Element {
  GradedAlgebra owner;
  Vector coords;
};

Element multiply(const Element& x, const Element& y);

ValidationReport algebra_validate(const GradedAlgebra& a, ValidationDepth depth = ValidationDepth::Exhaustive);

/// Two-sided inverse of x, if x is invertible.
std::optional<Vector> inverse(const GradedAlgebra& a, const Vector& x);

/// Unique two-sided unit of raw structure constants, if any.
std::optional<Vector> solve_unit(const AlgebraData& data);

/// Accumulates structure constants pair by pair before finalizing.
class StructureBuilder {
 public:
  StructureBuilder(Field f, std::size_t dim);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  std::vector<std::vector<StructureTerm>> finish() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<StructureTerm>> acc_;
};

}  // namespace gradsym
