#include "gradsym/construct.hpp"

namespace gradsym {

namespace {

std::string power_label(const std::string& var, std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

std::string join_label(const std::string& a, const std::string& b) {
  if (a == "1" || a.empty()) return b;
  if (b == "e" || b == "1" || b.empty()) return a;
  return a + "*" + b;
}

AlgebraData empty_data(const Field& f, const Group& g, std::size_t dim) {
  AlgebraData d;
  d.field = f;
  d.group = g;
  d.dim = dim;
  d.degrees.assign(dim, Group::identity());
  d.unit = zero_vector(f, dim);
  return d;
}

void check_dim(std::size_t dim) {
  if (dim > kMaxAlgebraDim)
    throw Error(ErrorKind::DimensionTooLarge, "algebra dimension " + std::to_string(dim) + " exceeds 64");
}

void require_same_field_group(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, a.field().name() + " vs " + b.field().name());
  if (a.group() != b.group()) throw Error(ErrorKind::GroupMismatch, "algebras are graded by different groups");
}

// Coordinates over the prime field of a scalar of K.
Vector prime_coords(const Scalar& x, const Field& prime) {
  Vector out;
  for (auto c : x.coeffs()) out.push_back(prime.from_int(c));
  out.resize(x.field().degree(), prime.zero());
  return out;
}

bool is_trivially_graded(const GradedAlgebra& a) {
  for (auto g : a.degrees())
    if (g != Group::identity()) return false;
  return true;
}

void check_sigma(const GradedAlgebra& d, const Matrix& s, GroupElem g) {
  const std::size_t n = d.dim();
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::IncompatibleCocycleData, "sigma(" + std::to_string(g) + ") " + why);
  };
  if (s.rows() != n || s.cols() != n || s.field() != d.field()) fail("has the wrong shape or field");
  if (rank(s) != n) fail("is not bijective");
  if (s.apply(d.unit()) != d.unit()) fail("does not preserve the unit");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = s.apply(d.multiply(d.basis_vector(i), d.basis_vector(j)));
      Vector rhs = d.multiply(s.col(i), s.col(j));
      if (lhs != rhs) fail("is not multiplicative on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

// Crossed-product data of A for a section u, with A_e identified with D by
// the maps to_d / from_d.
CrossedProductSpec extract_spec(const GradedAlgebra& a, const std::vector<Vector>& u, const GradedAlgebra& d,
                                const std::function<Vector(const Vector&)>& to_d,
                                const std::function<Vector(const Vector&)>& from_d) {
  const Group& G = a.group();
  const std::size_t n = G.order();
  std::vector<Vector> uinv(n);
  for (GroupElem g = 0; g < n; ++g) {
    auto inv = inverse(a, u[g]);
    if (!inv) throw Error(ErrorKind::NotGradedDivisionLike, "section element of degree " + G.label(g) + " is not invertible");
    uinv[g] = *inv;
  }
  CrossedProductSpec out;
  out.coefficients = d;
  out.group = G;
  for (GroupElem g = 0; g < n; ++g) {
    Matrix s(d.field(), d.dim(), d.dim());
    for (std::size_t j = 0; j < d.dim(); ++j)
      s.set_col(j, to_d(a.multiply(a.multiply(u[g], from_d(d.basis_vector(j))), uinv[g])));
    out.sigma.push_back(std::move(s));
  }
  for (GroupElem g = 0; g < n; ++g)
    for (GroupElem h = 0; h < n; ++h)
      out.alpha.push_back(to_d(a.multiply(a.multiply(u[g], u[h]), uinv[G.mul(g, h)])));
  return out;
}

}  // namespace

GradedAlgebra scalar_algebra(const Field& f, const Group& g) {
  AlgebraData d = empty_data(f, g, 1);
  d.products = {{StructureTerm{0, f.one()}}};
  d.unit = {f.one()};
  d.labels = {"1"};
  return GradedAlgebra::make(std::move(d));
}

GradedAlgebra group_algebra(const Field& f, const Group& g) {
  const std::size_t n = g.order();
  AlgebraData d = empty_data(f, g, n);
  d.products.resize(n * n);
  for (GroupElem a = 0; a < n; ++a) {
    d.degrees[a] = a;
    for (GroupElem b = 0; b < n; ++b) d.products[a * n + b] = {StructureTerm{g.mul(a, b), f.one()}};
  }
  d.unit[0] = f.one();
  d.labels = g.labels();
  return GradedAlgebra::make(std::move(d));
}

GradedAlgebra field_as_algebra(const Field& k, const std::string& var) {
  if (!k.is_finite()) return scalar_algebra(k);
  const Field f = k.prime_field();
  const std::size_t n = k.degree();
  AlgebraData d = empty_data(f, Group::trivial(), n);
  StructureBuilder sb(f, n);
  const Scalar t = k.generator();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = prime_coords(t.pow(i + j), f);
      for (std::size_t m = 0; m < n; ++m) sb.add(i, j, m, c[m]);
    }
  d.products = sb.finish();
  d.unit[0] = f.one();
  for (std::size_t i = 0; i < n; ++i) d.labels.push_back(power_label(var, i));
  return GradedAlgebra::make(std::move(d));
}

Matrix frobenius_matrix(const Field& k, std::uint32_t power) {
  const Field f = k.prime_field();
  const std::size_t n = k.degree();
  Matrix m(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar x = k.generator().pow(j);
    for (std::uint32_t r = 0; r < power; ++r) x = frobenius(x);
    m.set_col(j, prime_coords(x, f));
  }
  return m;
}

GradedAlgebra crossed_product(const CrossedProductSpec& spec) {
  const GradedAlgebra& D = spec.coefficients;
  const Group& G = spec.group;
  if (!D.valid() || !G.valid()) throw Error(ErrorKind::InvalidArgument, "incomplete crossed-product data");
  if (!is_trivially_graded(D))
    throw Error(ErrorKind::InvalidArgument, "coefficient algebra must be trivially graded");
  const std::size_t dd = D.dim();
  const std::size_t n = G.order();
  check_dim(dd * n);
  if (spec.sigma.size() != n || spec.alpha.size() != n * n)
    throw Error(ErrorKind::InvalidArgument, "sigma/alpha tables have the wrong size");
  for (GroupElem g = 0; g < n; ++g) check_sigma(D, spec.sigma[g], g);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (spec.alpha[p].size() != dd) throw Error(ErrorKind::InvalidArgument, "alpha value has the wrong length");
    if (!inverse(D, spec.alpha[p]))
      throw Error(ErrorKind::NonInvertibleAlpha, "alpha(" + G.label(p / n) + "," + G.label(p % n) + ") is not invertible");
  }
  const Field& f = D.field();
  AlgebraData data = empty_data(f, G, dd * n);
  StructureBuilder sb(f, dd * n);
  for (GroupElem g = 0; g < n; ++g)
    for (GroupElem h = 0; h < n; ++h) {
      const GroupElem gh = G.mul(g, h);
      const Vector& al = spec.alpha_at(g, h);
      for (std::size_t j = 0; j < dd; ++j) {
        Vector sj_al = D.multiply(spec.sigma[g].col(j), al);
        for (std::size_t i = 0; i < dd; ++i) {
          Vector v = D.multiply(D.basis_vector(i), sj_al);
          for (std::size_t m = 0; m < dd; ++m) sb.add(g * dd + i, h * dd + j, gh * dd + m, v[m]);
        }
      }
    }
  data.products = sb.finish();
  for (GroupElem g = 0; g < n; ++g)
    for (std::size_t i = 0; i < dd; ++i) {
      data.degrees[g * dd + i] = g;
      data.labels.push_back(join_label(D.label(i), G.label(g)));
    }
  auto unit = solve_unit(data);
  if (!unit) throw Error(ErrorKind::IncompatibleCocycleData, "the product has no two-sided unit");
  data.unit = *unit;
  auto rep = validate_data(data, ValidationDepth::FirstFailure);
  if (!rep.ok()) throw Error(ErrorKind::IncompatibleCocycleData, rep.summary());
  return GradedAlgebra::make_unchecked(std::move(data));
}

CrossedProductSpec normalize_section(const CrossedProductSpec& spec) {
  const Group& G = spec.group;
  const std::size_t n = G.order();
  bool needed = false;
  for (GroupElem g = 0; g < n; ++g)
    if (G.element_order(g) > 2) needed = true;
  if (!needed) return spec;
  const GradedAlgebra A = crossed_product(spec);
  const GradedAlgebra& D = spec.coefficients;
  const std::size_t dd = D.dim();
  const Vector& aee = spec.alpha_at(0, 0);
  const Vector aee_inv = *inverse(D, aee);
  auto from_d = [&](const Vector& x) {
    Vector y = A.zero();
    Vector c = D.multiply(x, aee_inv);
    for (std::size_t i = 0; i < dd; ++i) y[i] = c[i];
    return y;
  };
  auto to_d = [&](const Vector& y) {
    for (std::size_t i = dd; i < y.size(); ++i)
      if (!y[i].is_zero()) throw Error(ErrorKind::NotGradedDivisionLike, "element expected in degree e");
    return D.multiply(Vector(y.begin(), y.begin() + dd), aee);
  };
  std::vector<Vector> u(n);
  u[0] = A.unit();
  for (GroupElem g = 1; g < n; ++g) {
    Vector v = A.zero();
    for (std::size_t i = 0; i < dd; ++i) v[g * dd + i] = D.unit()[i];
    u[g] = v;
  }
  for (GroupElem g = 1; g < n; ++g) {
    GroupElem gi = G.inverse(g);
    if (G.element_order(g) > 2 && g < gi) {
      auto inv = inverse(A, u[g]);
      if (!inv) throw Error(ErrorKind::NotGradedDivisionLike, "section element of degree " + G.label(g) + " is not invertible");
      u[gi] = *inv;
    }
  }
  return extract_spec(A, u, D, to_d, from_d);
}

CrossedProductSpec crossed_product_spec_from(const GradedAlgebra& a, const std::vector<Vector>& section) {
  const Group& G = a.group();
  if (section.size() != G.order()) throw Error(ErrorKind::InvalidArgument, "section needs one element per group element");
  for (GroupElem g = 0; g < G.order(); ++g)
    if (a.homogeneous_degree(section[g]) != g)
      throw Error(ErrorKind::NotGradedDivisionLike, "section element " + std::to_string(g) + " is not homogeneous of its degree");
  Subspace ae = homogeneous_component(a, Group::identity());
  GradedAlgebra d = ungrade(subspace_algebra(a, ae, false));
  auto to_d = [&](const Vector& y) { return ae.coordinates(y); };
  auto from_d = [&](const Vector& x) {
    Vector y = a.zero();
    for (std::size_t r = 0; r < x.size(); ++r) axpy(y, x[r], ae.basis_vector(r));
    return y;
  };
  return extract_spec(a, section, d, to_d, from_d);
}

CrossedProductSpec frobenius_crossed_product_spec(const Field& k, std::uint32_t n, const std::string& var) {
  if (!k.is_finite()) throw Error(ErrorKind::RationalsNotSupported, "Frobenius needs a finite field");
  if (n == 0 || n % k.degree() != 0)
    throw Error(ErrorKind::InvalidArgument, "the extension degree must divide the cyclic group order");
  CrossedProductSpec spec;
  spec.coefficients = field_as_algebra(k, var);
  spec.group = Group::cyclic(n);
  for (std::uint32_t i = 0; i < n; ++i) spec.sigma.push_back(frobenius_matrix(k, i));
  spec.alpha.assign(n * n, spec.coefficients.unit());
  return spec;
}

GradedAlgebra good_matrix_algebra(const GoodGradingSpec& spec) {
  const GradedAlgebra& delta = spec.delta;
  const std::size_t n = spec.n;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix size must be positive");
  if (!delta.valid()) throw Error(ErrorKind::InvalidArgument, "missing Delta");
  if (spec.sigmas.size() != n) throw Error(ErrorKind::InvalidArgument, "need one sigma per row");
  const Group& G = delta.group();
  for (auto s : spec.sigmas)
    if (s >= G.order()) throw Error(ErrorKind::IndexOutOfRange, "sigma index out of range");
  const std::size_t dd = delta.dim();
  check_dim(n * n * dd);
  const std::size_t dim = n * n * dd;
  const Field& f = delta.field();
  AlgebraData data = empty_data(f, G, dim);
  StructureBuilder sb(f, dim);
  auto idx = [&](std::size_t i, std::size_t j, std::size_t a) { return (i * n + j) * dd + a; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t a = 0; a < dd; ++a)
          for (std::size_t b = 0; b < dd; ++b)
            for (const auto& t : delta.product(a, b)) sb.add(idx(i, j, a), idx(j, l, b), idx(i, l, t.index), t.coeff);
  data.products = sb.finish();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < dd; ++a) {
        data.degrees[idx(i, j, a)] = G.mul(G.mul(G.inverse(spec.sigmas[i]), delta.degree(a)), spec.sigmas[j]);
        std::string unit_label = "e" + std::to_string(i + 1) + std::to_string(j + 1);
        if (n > 9) unit_label = "e" + std::to_string(i + 1) + "," + std::to_string(j + 1);
        data.labels.push_back(dd == 1 ? unit_label : unit_label + "*" + delta.label(a));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < dd; ++a) data.unit[idx(i, i, a)] = delta.unit()[a];
  return GradedAlgebra::make(std::move(data));
}

GradedAlgebra matrix_algebra(const Field& f, std::size_t n) {
  return good_matrix_algebra(GoodGradingSpec{n, std::vector<GroupElem>(n, 0), scalar_algebra(f)});
}

CrossedProductSpec cyclic_algebra_spec(std::uint32_t p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw Error(ErrorKind::UnsupportedPrime, "cyclic algebra is available for p in {2,3,5,7}");
  std::vector<std::int64_t> mod(p + 1, 0);
  mod[0] = -1;
  mod[1] = -1;
  mod[p] = 1;
  return frobenius_crossed_product_spec(Field::extension(p, mod), p, "x");
}

GradedAlgebra cyclic_algebra(std::uint32_t p) {
  GradedAlgebra a = crossed_product(cyclic_algebra_spec(p));
  AlgebraData d = a.data();
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t u = 0; u < p; ++u) {
      std::string x = power_label("x", u);
      std::string y = power_label("y", i);
      d.labels[i * p + u] = u == 0 ? y : (i == 0 ? x : x + "*" + y);
    }
  return GradedAlgebra::make_unchecked(std::move(d));
}

GradedAlgebra quaternion_algebra(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.characteristic() == 2) throw Error(ErrorKind::CharacteristicTwo, "quaternion algebras need characteristic != 2");
  if (a.field() != f || b.field() != f) throw Error(ErrorKind::FieldMismatch, "parameters over a different field");
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroParameter, "quaternion parameters must be nonzero");
  const Group G = Group::product({2, 2});
  AlgebraData d = empty_data(f, G, 4);
  StructureBuilder sb(f, 4);
  const Scalar one = f.one();
  enum { E = 0, I = 1, J = 2, K = 3 };
  for (int x = 0; x < 4; ++x) {
    sb.add(E, x, x, one);
    if (x != E) sb.add(x, E, x, one);
  }
  sb.add(I, I, E, a);
  sb.add(J, J, E, b);
  sb.add(K, K, E, -(a * b));
  sb.add(I, J, K, one);
  sb.add(J, I, K, -one);
  sb.add(I, K, J, a);
  sb.add(K, I, J, -a);
  sb.add(J, K, I, -b);
  sb.add(K, J, I, b);
  d.products = sb.finish();
  d.degrees = {0, 1, 2, 3};
  d.unit[0] = one;
  d.labels = {"1", "i", "j", "k"};
  return GradedAlgebra::make(std::move(d));
}

CrossedProductSpec quaternion_spec(const Field& f, const Scalar& a, const Scalar& b) {
  GradedAlgebra h = quaternion_algebra(f, a, b);
  std::vector<Vector> section;
  for (std::size_t i = 0; i < 4; ++i) section.push_back(h.basis_vector(i));
  return crossed_product_spec_from(h, section);
}

GradedAlgebra sweedler_algebra(const Field& f) {
  if (f.characteristic() == 2) throw Error(ErrorKind::CharacteristicTwo, "the Sweedler algebra needs characteristic != 2");
  AlgebraData d = empty_data(f, Group::trivial(), 4);
  StructureBuilder sb(f, 4);
  const Scalar one = f.one();
  enum { E = 0, C = 1, X = 2, CX = 3 };
  for (int x = 0; x < 4; ++x) {
    sb.add(E, x, x, one);
    if (x != E) sb.add(x, E, x, one);
  }
  sb.add(C, C, E, one);
  sb.add(C, X, CX, one);
  sb.add(C, CX, X, one);
  sb.add(X, C, CX, -one);
  sb.add(CX, C, X, -one);
  d.products = sb.finish();
  d.unit[0] = one;
  d.labels = {"1", "c", "x", "cx"};
  return GradedAlgebra::make(std::move(d));
}

GradedAlgebra trivial_extension(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  check_dim(2 * n);
  const Group& G = a.group();
  AlgebraData d = empty_data(a.field(), G, 2 * n);
  StructureBuilder sb(a.field(), 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) {
        sb.add(i, j, t.index, t.coeff);
        // e_j f_k = sum_i c_ij^k f_i and f_k e_i = sum_j c_ij^k f_j
        sb.add(j, n + t.index, n + i, t.coeff);
        sb.add(n + t.index, i, n + j, t.coeff);
      }
  d.products = sb.finish();
  for (std::size_t i = 0; i < n; ++i) {
    d.degrees[i] = a.degree(i);
    d.degrees[n + i] = G.inverse(a.degree(i));
    d.unit[i] = a.unit()[i];
    d.labels.push_back(a.label(i));
  }
  for (std::size_t i = 0; i < n; ++i) d.labels.push_back(a.label(i) + "^*");
  return GradedAlgebra::make(std::move(d));
}

GradedAlgebra direct_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  require_same_field_group(a, b);
  const std::size_t na = a.dim(), nb = b.dim();
  check_dim(na + nb);
  AlgebraData d = empty_data(a.field(), a.group(), na + nb);
  StructureBuilder sb(a.field(), na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (const auto& t : a.product(i, j)) sb.add(i, j, t.index, t.coeff);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (const auto& t : b.product(i, j)) sb.add(na + i, na + j, na + t.index, t.coeff);
  d.products = sb.finish();
  for (std::size_t i = 0; i < na; ++i) {
    d.degrees[i] = a.degree(i);
    d.unit[i] = a.unit()[i];
    d.labels.push_back("(" + a.label(i) + ",0)");
  }
  for (std::size_t i = 0; i < nb; ++i) {
    d.degrees[na + i] = b.degree(i);
    d.unit[na + i] = b.unit()[i];
    d.labels.push_back("(0," + b.label(i) + ")");
  }
  return GradedAlgebra::make(std::move(d));
}

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  require_same_field_group(a, b);
  const Group& G = a.group();
  if (!G.is_abelian()) throw Error(ErrorKind::NonAbelianGroup, "tensor products need an abelian grading group");
  const std::size_t na = a.dim(), nb = b.dim();
  check_dim(na * nb);
  AlgebraData d = empty_data(a.field(), G, na * nb);
  StructureBuilder sb(a.field(), na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (const auto& s : a.product(i, k))
        for (std::size_t j = 0; j < nb; ++j)
          for (std::size_t l = 0; l < nb; ++l)
            for (const auto& t : b.product(j, l))
              sb.add(i * nb + j, k * nb + l, s.index * nb + t.index, s.coeff * t.coeff);
  d.products = sb.finish();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      d.degrees[i * nb + j] = G.mul(a.degree(i), b.degree(j));
      d.unit[i * nb + j] = a.unit()[i] * b.unit()[j];
      d.labels.push_back(a.label(i) + "⊗" + b.label(j));
    }
  return GradedAlgebra::make(std::move(d));
}

GradedAlgebra scalar_extension(const GradedAlgebra& a, std::uint32_t m) {
  const Field& f = a.field();
  if (!f.is_finite()) throw Error(ErrorKind::RationalsNotSupported, "scalar extension needs a finite base field");
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (m == 1) return a;
  if (f.degree() * m > 6) throw Error(ErrorKind::InvalidArgument, "total extension degree exceeds 6");
  const Field big = Field::standard_extension(f.characteristic(), f.degree() * m);
  const FieldEmbedding emb(f, big);
  AlgebraData d = a.data();
  d.field = big;
  for (auto& terms : d.products)
    for (auto& t : terms) t.coeff = emb(t.coeff);
  for (auto& u : d.unit) u = emb(u);
  return GradedAlgebra::make(std::move(d));
}

GradedAlgebra ungrade(const GradedAlgebra& a) {
  if (a.group().order() == 1) return a;
  AlgebraData d = a.data();
  d.group = Group::trivial();
  d.degrees.assign(d.dim, Group::identity());
  return GradedAlgebra::make_unchecked(std::move(d));
}

GradedAlgebra subspace_algebra(const GradedAlgebra& a, const Subspace& s, bool graded) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field())
    throw Error(ErrorKind::AmbientMismatch, "subspace does not live in the algebra");
  if (!s.contains(a.unit())) throw Error(ErrorKind::UnitMissing, "subspace does not contain the unit");
  const std::size_t n = s.dim();
  const auto basis = s.basis_vectors();
  AlgebraData d = empty_data(a.field(), graded ? a.group() : Group::trivial(), n);
  StructureBuilder sb(a.field(), n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Vector p = a.multiply(basis[r], basis[c]);
      if (!s.contains(p))
        throw Error(ErrorKind::NotClosed, "product of basis vectors " + std::to_string(r) + " and " + std::to_string(c) +
                                              " leaves the subspace");
      Vector coords = s.coordinates(p);
      for (std::size_t k = 0; k < n; ++k) sb.add(r, c, k, coords[k]);
    }
  d.products = sb.finish();
  for (std::size_t r = 0; r < n; ++r) {
    if (graded) {
      auto deg = a.homogeneous_degree(basis[r]);
      if (!deg) throw Error(ErrorKind::NotGraded, "subspace is not spanned by homogeneous vectors");
      d.degrees[r] = *deg;
    }
    std::size_t support = 0, last = 0;
    for (std::size_t i = 0; i < basis[r].size(); ++i)
      if (!basis[r][i].is_zero()) {
        ++support;
        last = i;
      }
    d.labels.push_back(support == 1 && basis[r][last].is_one() ? a.label(last) : "b" + std::to_string(r));
  }
  d.unit = s.coordinates(a.unit());
  return GradedAlgebra::make(std::move(d));
}

Subspace homogeneous_component(const GradedAlgebra& a, GroupElem g) {
  if (g >= a.group().order()) throw Error(ErrorKind::IndexOutOfRange, "group index out of range");
  std::vector<Vector> gens;
  for (auto i : a.component_indices(g)) gens.push_back(a.basis_vector(i));
  return Subspace::span(a.field(), a.dim(), gens);
}

}  // namespace gradsym
