#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradsym/construct.hpp"
#include "gradsym/poly.hpp"

namespace gradsym {

enum class Mode { GradedSymmetric, GradedFrobenius, Symmetric, Frobenius };

std::string mode_name(Mode m);
/// Accepts "graded-symmetric", "graded-frobenius", "symmetric", "frobenius".
Mode parse_mode(const std::string& s);
bool is_graded_mode(Mode m);
bool is_symmetric_mode(Mode m);

/// lambda(e_i) = coords[i].
struct LinearFunctional {
  Vector coords;
  Scalar operator()(const Vector& x) const { return dot(coords, x); }
};

inline constexpr std::size_t kMaxTraceSpaceDim = 8;

/// Functionals vanishing on every A_g, g != e, and, when `symmetric`, on the
/// graded commutator space. Stored in dual coordinates.
Subspace graded_trace_space(const GradedAlgebra& a, bool symmetric);

/// Entry (i, j) is sum_r t_r lambda_r(e_i e_j).
GramPencil gram_pencil(const GradedAlgebra& a, const std::vector<Vector>& functionals);

/// The matrix lambda(e_i e_j).
Matrix gram_matrix(const GradedAlgebra& a, const LinearFunctional& lambda);

enum class VerdictStatus { Yes, No, NoOverBaseField };
enum class Refutation { None, TraceSpaceZero, GramDetIdenticallyZero, NoPointOverField };

std::string verdict_status_name(VerdictStatus s);
std::string refutation_name(Refutation r);

struct SymmetryVerdict {
  Mode mode = Mode::GradedSymmetric;
  VerdictStatus status = VerdictStatus::No;
  std::optional<LinearFunctional> witness;
  Refutation refutation = Refutation::None;
  /// Degree of the least extension carrying a witness (NoOverBaseField), 0 if none up to 3.
  std::uint32_t extension_degree = 0;
  Field extension_field;
  std::vector<std::string> extension_witness;
  std::size_t gram_rank = 0;
  std::size_t trace_space_dim = 0;
  std::size_t dim = 0;
  /// Set when the graded-division shortcut applied: [graded commutators] is a proper subspace of A_e.
  std::optional<bool> division_criterion;

  bool yes() const { return status == VerdictStatus::Yes; }
};

struct DecideOptions {
  bool division_fast_path = true;
};

SymmetryVerdict decide_form_existence(const GradedAlgebra& a, Mode mode, const DecideOptions& opts = {});

struct CertificateReport {
  bool vanishes_off_identity = true;
  bool symmetric = true;
  std::size_t gram_rank = 0;
  std::size_t dim = 0;
  bool passed = false;
  std::vector<std::string> failures;
};

CertificateReport verify_certificate(const GradedAlgebra& a, const LinearFunctional& lambda, Mode mode);

struct ReductionCheck {
  std::size_t kernel_dim = 0;
  std::size_t components_checked = 0;
  bool holds = true;
};

/// For lambda vanishing off e: every homogeneous component of every vector in
/// the kernel of the Gram matrix generates a graded left ideal inside Ker lambda.
ReductionCheck check_gram_reduction(const GradedAlgebra& a, const LinearFunctional& lambda);

/// lambda = sum_g mu o sigma(g) on the coefficient algebra.
LinearFunctional average_functional(const CrossedProductSpec& spec, const LinearFunctional& mu);

/// lambda-bar(sum a_g g) = lambda(a_e) on crossed_product(spec).
LinearFunctional lift_functional(const CrossedProductSpec& spec, const LinearFunctional& lambda);

/// Lambda(x) = lambda(tr x) on M = good_matrix_algebra(spec).
LinearFunctional matrix_trace_functional(const GoodGradingSpec& spec, const GradedAlgebra& m,
                                         const LinearFunctional& lambda);

}  // namespace gradsym
