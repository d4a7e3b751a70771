#pragma once

// Sparse multivariate polynomials, matrices of linear forms and their
// determinants, and deterministic search for non-vanishing points.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradsym/linalg.hpp"

namespace gradsym {

using Exponent = std::vector<std::uint16_t>;

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(Field f, std::size_t num_vars) : field_(std::move(f)), num_vars_(num_vars) {}
  static MultiPoly constant(const Field& f, std::size_t num_vars, const Scalar& c);
  /// t_{i+1}
  static MultiPoly variable(const Field& f, std::size_t num_vars, std::size_t i);
  /// sum_r coeffs[r] t_{r+1}
  static MultiPoly linear(const Field& f, const Vector& coeffs);

  const Field& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  unsigned total_degree() const;
  const Terms& terms() const noexcept { return terms_; }

  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Scalar& c) const;

  Scalar evaluate(const Vector& point) const;
  MultiPoly mapped(const FieldEmbedding& emb) const;

  /// Graded-lex order with explicit exponents, e.g. "t1^2 + 4*t2^2".
  std::string to_string() const;

  bool operator==(const MultiPoly& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }

 private:
  void check_compatible(const MultiPoly& o) const;

  Field field_;
  std::size_t num_vars_ = 0;
  Terms terms_;
};

/// A d x d matrix whose entries are linear forms in t_1..t_m.
struct GramPencil {
  Field field;
  std::size_t dim = 0;
  std::size_t num_vars = 0;
  std::vector<MultiPoly> entries;  // row-major

  const MultiPoly& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
  MultiPoly& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  Matrix evaluate(const Vector& point) const;
};

inline constexpr std::size_t kMaxCofactorDim = 12;
inline constexpr std::uint64_t kMaxExhaustivePoints = 10'000'000;

/// det = constant * prod(factors); factors are the determinants of the
/// irreducible diagonal blocks after permuting rows and columns.
struct FactoredDeterminant {
  Scalar constant;
  std::vector<MultiPoly> factors;
  std::size_t num_vars = 0;

  bool identically_zero() const;
  unsigned total_degree() const;
  MultiPoly expand() const;
};

FactoredDeterminant pencil_det_factored(const GramPencil& p);
MultiPoly pencil_det(const GramPencil& p);

struct NonvanishingPoint {
  enum class Status { Found, NoneOverField, IdenticallyZero };
  Status status = Status::IdenticallyZero;
  /// Coordinates of the point; over `point_field`.
  Vector point;
  Field point_field;
  /// 1 when found over the base field; r when first found over F_{q^r};
  /// 0 when no point exists over extensions of degree <= 3.
  std::uint32_t extension_degree = 0;
};

NonvanishingPoint nonvanishing_point(const MultiPoly& p, const Field& f);
NonvanishingPoint nonvanishing_point(const FactoredDeterminant& d, const Field& f);

}  // namespace gradsym
