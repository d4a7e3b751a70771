#pragma once

// Exact fields: prime fields F_p, extensions F_p[t]/(f) and the rationals.
//
// A finite-field element is stored as its canonical code c_0 + c_1 p + ... +
// c_{n-1} p^{n-1}, where c_i are the coefficients of its representative of
// degree < n. Rationals are GMP fractions kept in lowest terms.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gradsym/error.hpp"

namespace gradsym {

class Scalar;

namespace detail {
struct FieldData;
}

class Field {
 public:
  Field() = default;

  static Field rationals();
  static Field prime(std::uint32_t p);
  /// `modulus` lists c_0..c_n of a monic polynomial of degree n >= 1; entries
  /// are reduced mod p. Degree 1 collapses to the prime field.
  static Field extension(std::uint32_t p, const std::vector<std::int64_t>& modulus);
  /// F_{p^n} with the first irreducible monic modulus in code order.
  static Field standard_extension(std::uint32_t p, std::uint32_t n);
  /// Validated constructor: characteristic 0 means Q (modulus must be absent).
  static Field make(std::uint32_t characteristic,
                    const std::optional<std::vector<std::int64_t>>& modulus);

  bool valid() const noexcept { return data_ != nullptr; }
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  /// Monic modulus c_0..c_n; empty for prime fields and Q.
  const std::vector<std::uint32_t>& modulus() const;
  bool is_finite() const;
  /// Number of elements, 0 for Q.
  std::uint64_t order() const;
  Field prime_field() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Element with the given canonical code (finite fields only).
  Scalar element(std::uint32_t code) const;
  /// Element sum_i coeffs[i] t^i, reduced mod p (finite fields only).
  Scalar from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  /// The class of t (finite fields only).
  Scalar generator() const;
  /// Parses "3", "-1/2" (Q) or an integer (finite fields).
  Scalar parse(const std::string& text) const;

  std::string name() const;

  /// Structural equality: same characteristic, degree and modulus.
  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  const detail::FieldData* data() const noexcept { return data_.get(); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
  friend class Scalar;
};

class Scalar {
 public:
  Scalar() = default;

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inv() const;
  Scalar pow(std::uint64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical code (finite fields).
  std::uint32_t code() const;
  /// Value (Q).
  const mpq_class& rational() const;
  /// Coefficients c_0..c_{n-1} over F_p (finite fields).
  std::vector<std::uint32_t> coeffs() const;

  std::string to_string() const;

 private:
  Scalar(Field f, std::uint32_t code) : field_(std::move(f)), v_(code) {}
  Scalar(Field f, mpq_class q) : field_(std::move(f)), v_(std::move(q)) {}
  void require_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> v_{std::uint32_t{0}};
  friend class Field;
};

/// x -> x^p.
Scalar frobenius(const Scalar& x);

/// Field homomorphism from `source` into `target`. For prime fields and Q
/// this is the canonical map; for an extension F_p[t]/(f) the image of t is
/// the least root of f in `target` (by code).
class FieldEmbedding {
 public:
  FieldEmbedding(const Field& source, const Field& target);
  Scalar operator()(const Scalar& x) const;
  const Field& source() const noexcept { return source_; }
  const Field& target() const noexcept { return target_; }

 private:
  Field source_;
  Field target_;
  std::optional<Scalar> generator_image_;
};

bool is_prime(std::uint64_t n);

namespace poly_fp {
// Dense polynomials over F_p, coefficient i of t^i, no trailing zeros.
using Poly = std::vector<std::uint32_t>;
void trim(Poly& a);
Poly mod(Poly a, const Poly& m, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// Returns a monic factor of degree in [1, deg f / 2] if one exists.
std::optional<Poly> find_factor(const Poly& f, std::uint32_t p);
}  // namespace poly_fp

}  // namespace gradsym
