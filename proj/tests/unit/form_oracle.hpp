#pragma once

// Direct checks of the defining clauses of (graded) symmetric and Frobenius
// forms, by enumeration over small finite fields. No Gram matrices involved.

#include <optional>
#include <vector>

#include "gradsym/algebra.hpp"
#include "oracles.hpp"

namespace oracle {

// Every nonzero element of A (graded = false) or every nonzero homogeneous element.
inline std::vector<gradsym::Vector> candidate_generators(const gradsym::GradedAlgebra& a, bool graded) {
  std::vector<gradsym::Vector> out;
  if (!graded) {
    for (auto& v : all_vectors(a.field(), a.dim()))
      if (!gradsym::is_zero(v)) out.push_back(std::move(v));
    return out;
  }
  for (gradsym::GroupElem g = 0; g < a.group().order(); ++g) {
    const auto idx = a.component_indices(g);
    for (const auto& c : all_vectors(a.field(), idx.size())) {
      if (gradsym::is_zero(c)) continue;
      gradsym::Vector v = a.zero();
      for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = c[r];
      out.push_back(std::move(v));
    }
  }
  return out;
}

inline gradsym::Scalar evaluate(const gradsym::Vector& lambda, const gradsym::Vector& x) {
  return gradsym::dot(lambda, x);
}

inline bool satisfies_constraints(const gradsym::GradedAlgebra& a, const gradsym::Vector& lambda, bool graded,
                                  bool symmetric) {
  if (graded)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.degree(i) != gradsym::Group::identity() && !lambda[i].is_zero()) return false;
  if (symmetric)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (evaluate(lambda, a.multiply(a.basis_vector(i), a.basis_vector(j))) !=
            evaluate(lambda, a.multiply(a.basis_vector(j), a.basis_vector(i))))
          return false;
  return true;
}

// True iff Ker lambda contains the left ideal A x for no candidate generator x.
inline bool kernel_has_no_ideal(const gradsym::GradedAlgebra& a, const gradsym::Vector& lambda,
                                const std::vector<gradsym::Vector>& generators) {
  for (const auto& x : generators) {
    bool inside = true;
    for (std::size_t i = 0; i < a.dim() && inside; ++i)
      if (!evaluate(lambda, a.multiply(a.basis_vector(i), x)).is_zero()) inside = false;
    if (inside) return false;
  }
  return true;
}

// Searches all of F^d for a functional meeting the definition directly.
inline std::optional<gradsym::Vector> find_form(const gradsym::GradedAlgebra& a, bool graded, bool symmetric) {
  const auto gens = candidate_generators(a, graded);
  for (const auto& lambda : all_vectors(a.field(), a.dim()))
    if (satisfies_constraints(a, lambda, graded, symmetric) && kernel_has_no_ideal(a, lambda, gens)) return lambda;
  return std::nullopt;
}

// All linear combinations of the given functionals (finite fields).
inline std::vector<gradsym::Vector> all_combinations(const gradsym::Field& f, std::size_t n,
                                                     const std::vector<gradsym::Vector>& basis) {
  std::vector<gradsym::Vector> out;
  for (const auto& c : all_vectors(f, basis.size())) {
    gradsym::Vector v = gradsym::zero_vector(f, n);
    for (std::size_t r = 0; r < basis.size(); ++r) v = gradsym::add(v, gradsym::scale(c[r], basis[r]));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace oracle
