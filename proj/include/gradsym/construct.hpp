#pragma once

// Constructors for the graded algebras used throughout the library.

#include <functional>
#include <string>
#include <vector>

#include "gradsym/algebra.hpp"

namespace gradsym {

/// The field itself as a one-dimensional algebra concentrated in degree e.
GradedAlgebra scalar_algebra(const Field& f, const Group& g = Group::trivial());

GradedAlgebra group_algebra(const Field& f, const Group& g);

/// K as an algebra over its prime field with basis 1, t, ..., t^{n-1}.
GradedAlgebra field_as_algebra(const Field& k, const std::string& var = "t");

/// Matrix over the prime field of x -> x^{p^power} in the basis t^i of K.
Matrix frobenius_matrix(const Field& k, std::uint32_t power);

struct CrossedProductSpec {
  GradedAlgebra coefficients;
  Group group;
  /// sigma[g]: column j is sigma(g)(d_j).
  std::vector<Matrix> sigma;
  /// alpha[g * |G| + h], coordinates in the coefficient algebra.
  std::vector<Vector> alpha;

  const Vector& alpha_at(GroupElem g, GroupElem h) const { return alpha[g * group.order() + h]; }
};

/// Basis (d_i, g) at index g * dim(D) + i, degree g, with
/// (a g)(b h) = a sigma(g)(b) alpha(g,h) gh.
GradedAlgebra crossed_product(const CrossedProductSpec& spec);

/// Rescales the section so that alpha(g, g^{-1}) = 1 whenever ord(g) > 2.
CrossedProductSpec normalize_section(const CrossedProductSpec& spec);

/// Crossed-product data of A relative to a homogeneous section u_g
/// (u_g of degree g, invertible); the coefficient algebra is A_e.
CrossedProductSpec crossed_product_spec_from(const GradedAlgebra& a, const std::vector<Vector>& section);

/// K^sigma[C_n] with sigma(g^i) = Frobenius^i and alpha = 1, over the prime field.
CrossedProductSpec frobenius_crossed_product_spec(const Field& k, std::uint32_t n, const std::string& var = "t");

struct GoodGradingSpec {
  std::size_t n = 1;
  std::vector<GroupElem> sigmas;
  GradedAlgebra delta;
};

/// M_n(Delta)(sigma_1..sigma_n): basis e_ij (x) delta at index (i n + j) dim(Delta) + delta,
/// of degree sigma_i^{-1} deg(delta) sigma_j.
GradedAlgebra good_matrix_algebra(const GoodGradingSpec& spec);

/// Trivially graded M_n(F).
GradedAlgebra matrix_algebra(const Field& f, std::size_t n);

/// (F_{p^p}/F_p, Frobenius, 1) with K = F_p(x), x^p = x + 1.
GradedAlgebra cyclic_algebra(std::uint32_t p);
CrossedProductSpec cyclic_algebra_spec(std::uint32_t p);

/// Basis 1, i, j, k with i^2 = a, j^2 = b, ij = k = -ji, graded by C_2 x C_2.
GradedAlgebra quaternion_algebra(const Field& f, const Scalar& a, const Scalar& b);
CrossedProductSpec quaternion_spec(const Field& f, const Scalar& a, const Scalar& b);

/// Basis 1, c, x, cx with c^2 = 1, x^2 = 0, xc = -cx, trivially graded.
GradedAlgebra sweedler_algebra(const Field& f);

/// A + A* with (a, f)(a', f') = (aa', af' + fa').
GradedAlgebra trivial_extension(const GradedAlgebra& a);

GradedAlgebra direct_product(const GradedAlgebra& a, const GradedAlgebra& b);
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

/// Same structure constants over F_{p^{nm}}.
GradedAlgebra scalar_extension(const GradedAlgebra& a, std::uint32_t m);

GradedAlgebra ungrade(const GradedAlgebra& a);

/// The unital subalgebra on the stored basis of S.
GradedAlgebra subspace_algebra(const GradedAlgebra& a, const Subspace& s, bool graded = true);

Subspace homogeneous_component(const GradedAlgebra& a, GroupElem g);

}  // namespace gradsym
