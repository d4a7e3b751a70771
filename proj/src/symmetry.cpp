#include "gradsym/symmetry.hpp"

#include "gradsym/invariants.hpp"

namespace gradsym {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::GradedSymmetric:
      return "graded-symmetric";
    case Mode::GradedFrobenius:
      return "graded-frobenius";
    case Mode::Symmetric:
      return "symmetric";
    case Mode::Frobenius:
      return "frobenius";
  }
  return "graded-symmetric";
}

Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::GradedSymmetric, Mode::GradedFrobenius, Mode::Symmetric, Mode::Frobenius})
    if (mode_name(m) == s) return m;
  throw Error(ErrorKind::ParseError, "unknown mode '" + s + "'");
}

bool is_graded_mode(Mode m) { return m == Mode::GradedSymmetric || m == Mode::GradedFrobenius; }
bool is_symmetric_mode(Mode m) { return m == Mode::GradedSymmetric || m == Mode::Symmetric; }

std::string verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Yes:
      return "yes";
    case VerdictStatus::No:
      return "no";
    case VerdictStatus::NoOverBaseField:
      return "no-over-base-field";
  }
  return "no";
}

std::string refutation_name(Refutation r) {
  switch (r) {
    case Refutation::None:
      return "none";
    case Refutation::TraceSpaceZero:
      return "trace-space-zero";
    case Refutation::GramDetIdenticallyZero:
      return "gram-det-identically-zero";
    case Refutation::NoPointOverField:
      return "no-point-over-field";
  }
  return "none";
}

Subspace graded_trace_space(const GradedAlgebra& a, bool symmetric) {
  std::vector<Vector> killed;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.degree(i) != Group::identity()) killed.push_back(a.basis_vector(i));
  if (symmetric)
    for (auto& v : graded_commutator_space(a).basis_vectors()) killed.push_back(std::move(v));
  return annihilator(Subspace::span(a.field(), a.dim(), killed));
}

GramPencil gram_pencil(const GradedAlgebra& a, const std::vector<Vector>& functionals) {
  if (functionals.empty()) throw Error(ErrorKind::EmptyTraceSpace, "no functionals to build a pencil from");
  const Field& f = a.field();
  const std::size_t d = a.dim(), m = functionals.size();
  GramPencil p{f, d, m, std::vector<MultiPoly>(d * d, MultiPoly(f, m))};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < m; ++r) {
        Scalar c = f.zero();
        for (const auto& t : a.product(i, j)) c += t.coeff * functionals[r][t.index];
        if (c.is_zero()) continue;
        Exponent e(m, 0);
        e[r] = 1;
        p.at(i, j).add_term(e, c);
      }
  return p;
}

Matrix gram_matrix(const GradedAlgebra& a, const LinearFunctional& lambda) {
  const std::size_t d = a.dim();
  Matrix g(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(i, j)) g(i, j) += t.coeff * lambda.coords[t.index];
  return g;
}

SymmetryVerdict decide_form_existence(const GradedAlgebra& a, Mode mode, const DecideOptions& opts) {
  SymmetryVerdict v;
  v.mode = mode;
  const GradedAlgebra b = is_graded_mode(mode) ? a : ungrade(a);
  v.dim = b.dim();
  if (mode == Mode::GradedSymmetric && opts.division_fast_path &&
      is_graded_division(b).status == DivisionVerdict::Status::Yes) {
    v.division_criterion =
        graded_commutator_space(b).dim() < homogeneous_component(b, Group::identity()).dim();
  }
  const Subspace l = graded_trace_space(b, is_symmetric_mode(mode));
  v.trace_space_dim = l.dim();
  if (l.dim() == 0) {
    v.status = VerdictStatus::No;
    v.refutation = Refutation::TraceSpaceZero;
    return v;
  }
  if (l.dim() > kMaxTraceSpaceDim)
    throw Error(ErrorKind::DimensionTooLarge,
                "trace space has dimension " + std::to_string(l.dim()) + " (at most 8 unknowns supported)");
  const auto basis = l.basis_vectors();
  const auto det = pencil_det_factored(gram_pencil(b, basis));
  const auto pt = nonvanishing_point(det, b.field());
  switch (pt.status) {
    case NonvanishingPoint::Status::IdenticallyZero:
      v.status = VerdictStatus::No;
      v.refutation = Refutation::GramDetIdenticallyZero;
      return v;
    case NonvanishingPoint::Status::NoneOverField: {
      v.status = VerdictStatus::NoOverBaseField;
      v.refutation = Refutation::NoPointOverField;
      v.extension_degree = pt.extension_degree;
      if (pt.extension_degree > 0) {
        v.extension_field = pt.point_field;
        FieldEmbedding emb(b.field(), pt.point_field);
        Vector lam = zero_vector(pt.point_field, b.dim());
        for (std::size_t r = 0; r < basis.size(); ++r)
          for (std::size_t i = 0; i < b.dim(); ++i) lam[i] += pt.point[r] * emb(basis[r][i]);
        for (const auto& s : lam) v.extension_witness.push_back(s.to_string());
      }
      return v;
    }
    case NonvanishingPoint::Status::Found:
      break;
  }
  LinearFunctional lam{zero_vector(b.field(), b.dim())};
  for (std::size_t r = 0; r < basis.size(); ++r) axpy(lam.coords, pt.point[r], basis[r]);
  v.gram_rank = rank(gram_matrix(b, lam));
  if (v.gram_rank != b.dim())
    throw Error(ErrorKind::InvalidArgument, "witness Gram matrix is singular despite a nonzero determinant");
  v.status = VerdictStatus::Yes;
  v.witness = std::move(lam);
  return v;
}

CertificateReport verify_certificate(const GradedAlgebra& a, const LinearFunctional& lambda, Mode mode) {
  CertificateReport rep;
  rep.dim = a.dim();
  if (lambda.coords.size() != a.dim()) {
    rep.failures.push_back("functional has " + std::to_string(lambda.coords.size()) + " coordinates, expected " +
                           std::to_string(a.dim()));
    rep.vanishes_off_identity = rep.symmetric = false;
    return rep;
  }
  for (const auto& c : lambda.coords)
    if (c.field() != a.field()) {
      rep.failures.push_back("functional is over a different field");
      rep.vanishes_off_identity = rep.symmetric = false;
      return rep;
    }
  if (is_graded_mode(mode))
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.degree(i) != Group::identity() && !lambda.coords[i].is_zero()) {
        rep.vanishes_off_identity = false;
        rep.failures.push_back("lambda(" + a.label(i) + ") != 0 off the identity component");
        break;
      }
  if (is_symmetric_mode(mode))
    for (std::size_t i = 0; i < a.dim() && rep.symmetric; ++i)
      for (std::size_t j = i + 1; j < a.dim(); ++j)
        if (!lambda(a.commutator(a.basis_vector(i), a.basis_vector(j))).is_zero()) {
          rep.symmetric = false;
          rep.failures.push_back("lambda([" + a.label(i) + "," + a.label(j) + "]) != 0");
          break;
        }
  rep.gram_rank = rank(gram_matrix(a, lambda));
  if (rep.gram_rank != a.dim())
    rep.failures.push_back("Gram matrix has rank " + std::to_string(rep.gram_rank) + " < " + std::to_string(a.dim()));
  rep.passed = rep.failures.empty();
  return rep;
}

ReductionCheck check_gram_reduction(const GradedAlgebra& a, const LinearFunctional& lambda) {
  ReductionCheck out;
  const Subspace ker = kernel(gram_matrix(a, lambda));
  out.kernel_dim = ker.dim();
  for (const auto& x : ker.basis_vectors())
    for (GroupElem g = 0; g < a.group().order(); ++g) {
      Vector xg = a.zero();
      for (auto i : a.component_indices(g)) xg[i] = x[i];
      if (is_zero(xg)) continue;
      ++out.components_checked;
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (!lambda(a.multiply(a.basis_vector(i), xg)).is_zero()) out.holds = false;
    }
  return out;
}

LinearFunctional average_functional(const CrossedProductSpec& spec, const LinearFunctional& mu) {
  const GradedAlgebra& d = spec.coefficients;
  const Group& G = spec.group;
  const Field& f = d.field();
  if (f.characteristic() != 0 && G.order() % f.characteristic() == 0)
    throw Error(ErrorKind::CharacteristicDividesGroupOrder,
                "characteristic " + std::to_string(f.characteristic()) + " divides |G| = " + std::to_string(G.order()));
  if (mu.coords.size() != d.dim()) throw Error(ErrorKind::InvalidArgument, "mu has the wrong length");
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = i + 1; j < d.dim(); ++j)
      if (!mu(d.commutator(d.basis_vector(i), d.basis_vector(j))).is_zero())
        throw Error(ErrorKind::AsymmetricMu, "mu([" + d.label(i) + "," + d.label(j) + "]) != 0");
  if (mu(d.unit()).is_zero()) throw Error(ErrorKind::InvalidArgument, "mu(1) must be nonzero");
  LinearFunctional lam{zero_vector(f, d.dim())};
  for (GroupElem g = 0; g < G.order(); ++g)
    for (std::size_t j = 0; j < d.dim(); ++j) lam.coords[j] += mu(spec.sigma[g].col(j));
  for (GroupElem h = 0; h < G.order(); ++h)
    for (std::size_t j = 0; j < d.dim(); ++j)
      if (lam(spec.sigma[h].col(j)) != lam.coords[j])
        throw Error(ErrorKind::ValidationError, "averaged functional is not invariant under sigma(" + G.label(h) + ")");
  if (lam(d.unit()) != f.from_int(static_cast<std::int64_t>(G.order())) * mu(d.unit()))
    throw Error(ErrorKind::ValidationError, "lambda(1) != |G| mu(1)");
  return lam;
}

LinearFunctional lift_functional(const CrossedProductSpec& spec, const LinearFunctional& lambda) {
  const GradedAlgebra& d = spec.coefficients;
  const Group& G = spec.group;
  if (lambda.coords.size() != d.dim()) throw Error(ErrorKind::InvalidArgument, "lambda has the wrong length");
  if (spec.alpha_at(0, 0) != d.unit()) throw Error(ErrorKind::NotNormalized, "alpha(e,e) != 1");
  for (GroupElem g = 0; g < G.order(); ++g)
    if (G.element_order(g) > 2 && spec.alpha_at(g, G.inverse(g)) != d.unit())
      throw Error(ErrorKind::NotNormalized, "alpha(" + G.label(g) + "," + G.label(G.inverse(g)) + ") != 1");
  for (GroupElem g = 0; g < G.order(); ++g)
    for (std::size_t j = 0; j < d.dim(); ++j)
      if (lambda(spec.sigma[g].col(j)) != lambda.coords[j])
        throw Error(ErrorKind::NotInvariant, "lambda is not invariant under sigma(" + G.label(g) + ")");
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = i + 1; j < d.dim(); ++j)
      if (!lambda(d.commutator(d.basis_vector(i), d.basis_vector(j))).is_zero())
        throw Error(ErrorKind::NotInvariant, "lambda is not symmetric on the coefficient algebra");
  LinearFunctional out{zero_vector(d.field(), d.dim() * G.order())};
  for (std::size_t i = 0; i < d.dim(); ++i) out.coords[i] = lambda.coords[i];
  return out;
}

LinearFunctional matrix_trace_functional(const GoodGradingSpec& spec, const GradedAlgebra& m,
                                         const LinearFunctional& lambda) {
  GradedAlgebra rebuilt;
  try {
    rebuilt = good_matrix_algebra(spec);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAGoodMatrixAlgebra, e.what());
  }
  if (!(rebuilt == m)) throw Error(ErrorKind::NotAGoodMatrixAlgebra, "algebra differs from M_n(Delta)(sigma)");
  const std::size_t dd = spec.delta.dim(), n = spec.n;
  if (lambda.coords.size() != dd) throw Error(ErrorKind::InvalidArgument, "lambda has the wrong length");
  LinearFunctional out{m.zero()};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < dd; ++a) out.coords[(i * n + i) * dd + a] = lambda.coords[a];
  return out;
}

}  // namespace gradsym
