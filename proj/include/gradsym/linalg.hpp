#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradsym/field.hpp"

namespace gradsym {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& a);
/// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

class Subspace;

/// Dense matrix over an exact field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_col(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& o) const;
  /// M v
  Vector apply(const Vector& v) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// In-place Gauss-Jordan elimination; returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);
/// Some x with A x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// A coordinate subspace of F^n stored as a reduced row-echelon basis with no
/// zero rows, so equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& generators);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis; throws if v is not in the subspace.
  Vector coordinates(const Vector& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Vector reduce(Vector v) const;

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Subspace kernel;
};

RrefResult rref_rank_kernel(const Matrix& m);
/// Null space {v : M v = 0}.
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
/// Vectors of w completing a basis of u to a basis of w (u must lie in w).
std::vector<Vector> quotient_basis(const Subspace& u, const Subspace& w);
/// {x : sum_i x_i v_i = 0 for all v in u}, as a subspace of the dual coordinates.
Subspace annihilator(const Subspace& u);

}  // namespace gradsym
