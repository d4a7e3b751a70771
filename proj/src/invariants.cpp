#include "gradsym/invariants.hpp"

#include <algorithm>
#include <set>

#include "gradsym/construct.hpp"
#include "gradsym/poly.hpp"

namespace gradsym {

namespace {

// Kernel of x -> x s - s x, stacked over the given s.
Subspace commuting_with(const GradedAlgebra& a, const std::vector<Vector>& others) {
  const std::size_t d = a.dim();
  Matrix sys(a.field(), d * others.size(), d);
  for (std::size_t r = 0; r < others.size(); ++r)
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = a.commutator(a.basis_vector(j), others[r]);
      for (std::size_t k = 0; k < d; ++k) sys(r * d + k, j) = c[k];
    }
  if (others.empty()) return Subspace::full(a.field(), d);
  return kernel(sys);
}

Vector combine(const Field& f, std::size_t n, const std::vector<Vector>& basis, const Vector& c) {
  Vector out = zero_vector(f, n);
  for (std::size_t r = 0; r < basis.size(); ++r) axpy(out, c[r], basis[r]);
  return out;
}

// Monic minimal polynomial c_0..c_k of x, computed from powers of x.
std::vector<Scalar> minimal_polynomial(const GradedAlgebra& a, const Vector& x) {
  std::vector<Vector> powers{a.unit()};
  for (std::size_t k = 1; k <= a.dim(); ++k) {
    Vector next = a.multiply(powers.back(), x);
    Matrix m(a.field(), a.dim(), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c) m.set_col(c, powers[c]);
    if (auto sol = solve(m, next)) {
      std::vector<Scalar> poly;
      for (const auto& s : *sol) poly.push_back(-s);
      poly.push_back(a.field().one());
      return poly;
    }
    powers.push_back(next);
  }
  throw Error(ErrorKind::InvalidArgument, "minimal polynomial exceeds the dimension");
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class m = abs(n);
  for (mpz_class i = 1; i * i <= m; ++i)
    if (m % i == 0) {
      out.push_back(i);
      if (i * i != m) out.push_back(m / i);
    }
  return out;
}

// A rational root of a polynomial with rational coefficients, if any; nullopt
// also when the coefficients are too large to enumerate divisors.
std::optional<std::optional<mpq_class>> rational_root(const std::vector<Scalar>& poly) {
  mpz_class lcm = 1;
  for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(mpz_class(c.rational() * lcm));
  if (ints.front() == 0) return std::optional<mpq_class>(mpq_class(0));
  const mpz_class limit("1000000000000");
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) return std::nullopt;
  auto eval = [&](const mpq_class& r) {
    mpq_class acc = 0;
    for (std::size_t i = ints.size(); i-- > 0;) acc = acc * r + ints[i];
    return acc;
  };
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        mpq_class r(p * sign, q);
        r.canonicalize();
        if (eval(r) == 0) return std::optional<mpq_class>(r);
      }
  return std::optional<mpq_class>();
}

struct AeCheck {
  DivisionVerdict::Status status = DivisionVerdict::Status::Unknown;
  std::string certificate;
  std::uint64_t scan_size = 0;
  Vector witness;
  std::string note;
};

AeCheck finite_scan(const GradedAlgebra& a, const std::vector<Vector>& basis) {
  AeCheck out;
  const Field& f = a.field();
  const std::size_t m = basis.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > kMaxDivisionScan / f.order() + 1) {
      out.note = "identity component has more than " + std::to_string(kMaxDivisionScan) + " elements";
      return out;
    }
    total *= f.order();
  }
  if (total - 1 > kMaxDivisionScan) {
    out.note = "identity component has more than " + std::to_string(kMaxDivisionScan) + " elements";
    return out;
  }
  // Left multiplication restricted to A_e, in the basis of A_e.
  Subspace ae = Subspace::span(f, a.dim(), basis);
  std::vector<Matrix> lr;
  for (const auto& b : basis) {
    Matrix l(f, m, m);
    for (std::size_t c = 0; c < m; ++c) l.set_col(c, ae.coordinates(a.multiply(b, ae.basis_vector(c))));
    lr.push_back(std::move(l));
  }
  std::vector<Vector> ae_basis = ae.basis_vectors();
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector c;
    std::uint64_t x = code;
    for (std::size_t i = 0; i < m; ++i) {
      c.push_back(f.element(static_cast<std::uint32_t>(x % f.order())));
      x /= f.order();
    }
    Matrix l(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
      if (!c[i].is_zero())
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t s = 0; s < m; ++s) l(r, s) += c[i] * lr[i](r, s);
    if (rank(l) != m) {
      out.status = DivisionVerdict::Status::No;
      out.witness = combine(f, a.dim(), ae_basis, c);
      return out;
    }
  }
  out.status = DivisionVerdict::Status::Yes;
  out.certificate = "exhaustive";
  out.scan_size = total - 1;
  return out;
}

AeCheck rational_certificate(const GradedAlgebra& a, const std::vector<Vector>& basis) {
  AeCheck out;
  const Field& f = a.field();
  const std::size_t m = basis.size();
  Subspace scalars = Subspace::span(f, a.dim(), {a.unit()});
  if (m == 1) {
    out.status = DivisionVerdict::Status::Yes;
    out.certificate = "one-dimensional";
    return out;
  }
  bool commutative = true;
  for (std::size_t i = 0; i < m && commutative; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!is_zero(a.commutator(basis[i], basis[j]))) {
        commutative = false;
        break;
      }
  if (commutative && m <= 3) {
    std::vector<Vector> candidates = basis;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) candidates.push_back(add(basis[i], basis[j]));
    if (m == 3) candidates.push_back(add(add(basis[0], basis[1]), basis[2]));
    for (const auto& x : candidates) {
      auto poly = minimal_polynomial(a, x);
      if (poly.size() - 1 != m) continue;
      auto root = rational_root(poly);
      if (!root) break;
      if (*root) {
        out.status = DivisionVerdict::Status::No;
        out.witness = sub(x, scale(f.from_rational(**root), a.unit()));
        return out;
      }
      out.status = DivisionVerdict::Status::Yes;
      out.certificate = "irreducible-minimal-polynomial";
      out.note = "generated by an element with irreducible minimal polynomial of degree " + std::to_string(m);
      return out;
    }
  }
  if (!commutative && m == 4) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Vector& u = basis[i];
        const Vector& v = basis[j];
        if (scalars.contains(u) || scalars.contains(v)) continue;
        Vector u2 = a.multiply(u, u), v2 = a.multiply(v, v);
        if (!scalars.contains(u2) || !scalars.contains(v2)) continue;
        Vector uv = a.multiply(u, v);
        if (!is_zero(add(uv, a.multiply(v, u)))) continue;
        if (Subspace::span(f, a.dim(), {a.unit(), u, v, uv}).dim() != 4) continue;
        Scalar qa = scalars.coordinates(u2)[0] / scalars.coordinates(a.unit())[0];
        Scalar qb = scalars.coordinates(v2)[0] / scalars.coordinates(a.unit())[0];
        if (sgn(qa.rational()) < 0 && sgn(qb.rational()) < 0) {
          out.status = DivisionVerdict::Status::Yes;
          out.certificate = "quaternion-norm-form";
          out.note = "quaternion basis with u^2 = " + qa.to_string() + ", v^2 = " + qb.to_string() +
                     "; the norm form is positive definite";
          return out;
        }
      }
  }
  out.note = "no division certificate applies over Q";
  return out;
}

}  // namespace

Subspace center(const GradedAlgebra& a) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_vector(i));
  return commuting_with(a, basis);
}

Subspace centralizer(const GradedAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace ambient differs from algebra");
  return commuting_with(a, s.basis_vectors());
}

Subspace commutator_subspace(const GradedAlgebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector c = a.commutator(a.basis_vector(i), a.basis_vector(j));
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  return Subspace::span(a.field(), a.dim(), gens);
}

Subspace graded_commutator_space(const GradedAlgebra& a) {
  const Group& G = a.group();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (G.mul(a.degree(i), a.degree(j)) != Group::identity()) continue;
      Vector c = a.commutator(a.basis_vector(i), a.basis_vector(j));
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  return Subspace::span(a.field(), a.dim(), gens);
}

std::vector<GroupElem> support(const GradedAlgebra& a) {
  std::set<GroupElem> s(a.degrees().begin(), a.degrees().end());
  return {s.begin(), s.end()};
}

InvertibilityResult is_invertible(const Element& x) {
  InvertibilityResult r;
  if (auto inv = inverse(x.owner, x.coords)) {
    r.invertible = true;
    r.inverse = *inv;
  }
  return r;
}

ComponentInvertibility component_has_invertible(const GradedAlgebra& a, GroupElem g) {
  auto idx = a.component_indices(g);
  if (idx.empty()) throw Error(ErrorKind::InvalidArgument, "component is zero");
  const Field& f = a.field();
  const std::size_t d = a.dim(), m = idx.size();
  GramPencil p{f, d, m, std::vector<MultiPoly>(d * d, MultiPoly(f, m))};
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(idx[r], j)) {
        Exponent e(m, 0);
        e[r] = 1;
        p.at(t.index, j).add_term(e, t.coeff);
      }
  ComponentInvertibility out;
  auto det = pencil_det_factored(p);
  auto pt = nonvanishing_point(det, f);
  switch (pt.status) {
    case NonvanishingPoint::Status::IdenticallyZero:
      out.identically_singular = true;
      break;
    case NonvanishingPoint::Status::NoneOverField:
      out.extension_degree = pt.extension_degree;
      break;
    case NonvanishingPoint::Status::Found: {
      Vector w = a.zero();
      for (std::size_t r = 0; r < m; ++r) w[idx[r]] = pt.point[r];
      if (!inverse(a, w)) throw Error(ErrorKind::InvalidArgument, "generic-determinant witness is not invertible");
      out.has_invertible = true;
      out.extension_degree = 1;
      out.witness = std::move(w);
      break;
    }
  }
  return out;
}

bool is_division_witness(const GradedAlgebra& a, const Vector& w) {
  if (w.size() != a.dim() || is_zero(w) || !a.homogeneous_degree(w)) return false;
  return rank(a.left_multiplication(w)) < a.dim();
}

DivisionVerdict is_graded_division(const GradedAlgebra& a) {
  DivisionVerdict v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!inverse(a, a.basis_vector(i))) {
      v.status = DivisionVerdict::Status::No;
      v.witness = a.basis_vector(i);
      v.justification = "basis vector " + a.label(i) + " is homogeneous and not invertible";
      return v;
    }
  std::vector<Vector> basis;
  for (auto i : a.component_indices(Group::identity())) basis.push_back(a.basis_vector(i));
  AeCheck ae = a.field().is_finite() ? finite_scan(a, basis) : rational_certificate(a, basis);
  v.status = ae.status;
  v.certificate = ae.certificate;
  v.scan_size = ae.scan_size;
  v.witness = ae.witness;
  switch (ae.status) {
    case DivisionVerdict::Status::Yes:
      v.justification = "A_e is a division algebra" + (ae.note.empty() ? std::string() : " (" + ae.note + ")") +
                        " and every homogeneous basis vector is invertible, so each nonzero component contains "
                        "an invertible u_g and every nonzero homogeneous a = (a u_g^{-1}) u_g is invertible";
      break;
    case DivisionVerdict::Status::No:
      v.justification = "A_e contains a nonzero non-invertible element";
      break;
    case DivisionVerdict::Status::Unknown:
      v.justification = ae.note;
      break;
  }
  return v;
}

std::string status_name(DivisionVerdict::Status s) {
  switch (s) {
    case DivisionVerdict::Status::Yes:
      return "yes";
    case DivisionVerdict::Status::No:
      return "no";
    case DivisionVerdict::Status::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace gradsym
