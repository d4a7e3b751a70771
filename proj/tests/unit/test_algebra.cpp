#include <doctest.h>

#include "gradsym/construct.hpp"
#include "oracles.hpp"

using namespace gradsym;

namespace {

// Associativity via the regular representation: L(e_i e_j) = L(e_i) L(e_j).
bool regular_rep_is_multiplicative(const GradedAlgebra& a) {
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < a.dim(); ++i) l.push_back(a.left_multiplication(a.basis_vector(i)));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.left_multiplication(a.multiply(a.basis_vector(i), a.basis_vector(j))) == l[i] * l[j])) return false;
  return true;
}

Field q() { return Field::rationals(); }

std::vector<GradedAlgebra> constructor_outputs() {
  const Field f3 = Field::prime(3), f2 = Field::prime(2);
  const Group c2 = Group::cyclic(2);
  std::vector<GradedAlgebra> out{
      group_algebra(f3, c2),
      group_algebra(q(), Group::product({2, 2})),
      group_algebra(f2, Group::dihedral(3)),
      cyclic_algebra(2),
      cyclic_algebra(3),
      quaternion_algebra(q(), q().from_int(-1), q().from_int(-1)),
      quaternion_algebra(f3, f3.from_int(-1), f3.from_int(-1)),
      sweedler_algebra(f3),
      trivial_extension(sweedler_algebra(q())),
      trivial_extension(group_algebra(f3, Group::cyclic(3))),
      crossed_product(frobenius_crossed_product_spec(Field::standard_extension(3, 2), 2)),
      good_matrix_algebra({2, {0, 1}, scalar_algebra(f2, c2)}),
      good_matrix_algebra({3, {0, 1, 1}, scalar_algebra(q(), c2)}),
      matrix_algebra(Field::prime(5), 2),
      tensor_product(group_algebra(f3, c2), group_algebra(f3, c2)),
      direct_product(group_algebra(f3, c2), scalar_algebra(f3, c2)),
      scalar_extension(group_algebra(f2, Group::cyclic(3)), 2),
      ungrade(group_algebra(f3, c2)),
  };
  return out;
}

std::size_t index_of(const GradedAlgebra& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.label(i) == label) return i;
  FAIL("missing label " << label);
  return 0;
}

}  // namespace

TEST_CASE("every constructor output validates") {
  for (const auto& a : constructor_outputs()) {
    auto rep = algebra_validate(a);
    CHECK_MESSAGE(rep.ok(), rep.summary());
    CHECK(regular_rep_is_multiplicative(a));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(a.multiply(a.unit(), a.basis_vector(i)) == a.basis_vector(i));
      CHECK(a.multiply(a.basis_vector(i), a.unit()) == a.basis_vector(i));
    }
  }
}

TEST_CASE("validation reports corrupted structure constants") {
  GradedAlgebra a = group_algebra(Field::prime(3), Group::cyclic(3));
  AlgebraData d = a.data();
  d.products[1 * 3 + 2] = {StructureTerm{0, d.field.from_int(2)}};
  auto rep = validate_data(d);
  CHECK(!rep.ok());
  CHECK(std::find(rep.associativity_failures.begin(), rep.associativity_failures.end(),
                  std::array<std::uint32_t, 3>{1, 1, 2}) != rep.associativity_failures.end());
  CHECK(validate_data(d, ValidationDepth::FirstFailure).associativity_failures.size() == 1);
  try {
    GradedAlgebra::make(d);
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
  }

  AlgebraData g = group_algebra(Field::prime(2), Group::cyclic(2)).data();
  g.degrees[1] = 0;
  g.degrees[0] = 1;
  auto grep = validate_data(g);
  CHECK(!grep.grading_failures.empty());
  CHECK(grep.unit_inhomogeneous);

  AlgebraData z = g;
  z.dim = 0;
  z.degrees.clear();
  z.products.clear();
  z.unit.clear();
  z.labels.clear();
  CHECK(!validate_data(z).ok());
}

TEST_CASE("elements from different algebras do not multiply") {
  auto a = group_algebra(Field::prime(2), Group::cyclic(2));
  auto b = group_algebra(Field::prime(2), Group::cyclic(2));
  Element x{a, a.unit()}, y{b, b.unit()};
  CHECK(multiply(x, Element{a, a.basis_vector(1)}).coords == a.basis_vector(1));
  try {
    multiply(x, y);
    FAIL("expected OwnerMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OwnerMismatch);
  }
}

TEST_CASE("quaternion relations") {
  Field f = q();
  auto h = quaternion_algebra(f, f.from_int(-1), f.from_int(-1));
  auto e = [&](int i) { return h.basis_vector(i); };
  CHECK(h.multiply(e(1), e(2)) == e(3));
  CHECK(h.multiply(e(2), e(1)) == scale(f.from_int(-1), e(3)));
  CHECK(h.multiply(e(3), e(3)) == scale(f.from_int(-1), e(0)));
  CHECK(h.multiply(e(1), e(1)) == scale(f.from_int(-1), e(0)));
  auto h2 = quaternion_algebra(f, f.from_int(2), f.from_int(-3));
  CHECK(h2.multiply(e(3), e(3)) == scale(f.from_int(6), e(0)));
  CHECK(h.degrees() == std::vector<GroupElem>{0, 1, 2, 3});

  auto kind_of = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  Field f2 = Field::prime(2);
  Field f5 = Field::prime(5);
  CHECK(kind_of([&] { quaternion_algebra(f2, f2.one(), f2.one()); }) == ErrorKind::CharacteristicTwo);
  CHECK(kind_of([&] { quaternion_algebra(f5, f5.zero(), f5.one()); }) == ErrorKind::ZeroParameter);
  CHECK(kind_of([&] { sweedler_algebra(f2); }) == ErrorKind::CharacteristicTwo);
}

TEST_CASE("cyclic algebra relations") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto a = cyclic_algebra(p);
    CHECK(a.dim() == p * p);
    CHECK(a.field() == Field::prime(p));
    const std::size_t y = index_of(a, "y");
    Field k = Field::extension(p, [&] {
      std::vector<std::int64_t> m(p + 1, 0);
      m[0] = -1;
      m[1] = -1;
      m[p] = 1;
      return m;
    }());
    // y a = sigma(a) y for every a = x^u, with sigma computed in the field itself
    for (std::uint32_t u = 0; u < p; ++u) {
      Vector lhs = a.multiply(a.basis_vector(y), a.basis_vector(u));
      auto c = frobenius(k.generator().pow(u)).coeffs();
      Vector s = a.zero();
      for (std::size_t i = 0; i < c.size(); ++i) s[i] = a.field().from_int(c[i]);
      CHECK(lhs == a.multiply(s, a.basis_vector(y)));
    }
    Vector yp = a.unit();
    for (std::uint32_t i = 0; i < p; ++i) yp = a.multiply(yp, a.basis_vector(y));
    CHECK(yp == a.unit());
  }
  auto a3 = cyclic_algebra(3);
  Field f3 = Field::prime(3);
  Vector yx = a3.multiply(a3.basis_vector(index_of(a3, "y")), a3.basis_vector(index_of(a3, "x")));
  Vector x_plus_1 = add(a3.basis_vector(index_of(a3, "x")), a3.unit());
  CHECK(yx == a3.multiply(x_plus_1, a3.basis_vector(index_of(a3, "y"))));
  CHECK(algebra_validate(cyclic_algebra(5)).ok());
  CHECK_THROWS_AS(cyclic_algebra(11), Error);
}

TEST_CASE("crossed products") {
  Field f2 = Field::prime(2);
  CrossedProductSpec spec;
  spec.coefficients = scalar_algebra(f2);
  spec.group = Group::cyclic(2);
  spec.sigma.assign(2, Matrix::identity(f2, 1));
  spec.alpha.assign(4, Vector{f2.one()});
  auto cp = crossed_product(spec);
  auto ga = group_algebra(f2, Group::cyclic(2));
  CHECK(cp.data().products == ga.data().products);
  CHECK(cp.unit() == ga.unit());
  CHECK(cp.degrees() == ga.degrees());

  auto qs = quaternion_spec(q(), q().from_int(-1), q().from_int(-1));
  auto h = crossed_product(qs);
  Field f = q();
  CHECK(h.multiply(h.basis_vector(1), h.basis_vector(1)) == scale(f.from_int(-1), h.unit()));
  CHECK(h.multiply(h.basis_vector(2), h.basis_vector(2)) == scale(f.from_int(-1), h.unit()));
  CHECK(h.multiply(h.basis_vector(1), h.basis_vector(2)) == h.basis_vector(3));
  CHECK(h.multiply(h.basis_vector(2), h.basis_vector(1)) == scale(f.from_int(-1), h.basis_vector(3)));

  auto f9 = crossed_product(frobenius_crossed_product_spec(Field::standard_extension(3, 2), 2));
  CHECK(f9.dim() == 4);
  CHECK(f9.field() == Field::prime(3));

  // alpha(e, g) != 1 with sigma trivial: not associative
  Field f5 = Field::prime(5);
  CrossedProductSpec bad;
  bad.coefficients = scalar_algebra(f5);
  bad.group = Group::cyclic(2);
  bad.sigma.assign(2, Matrix::identity(f5, 1));
  bad.alpha = {Vector{f5.one()}, Vector{f5.from_int(2)}, Vector{f5.one()}, Vector{f5.one()}};
  try {
    crossed_product(bad);
    FAIL("expected IncompatibleCocycleData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleCocycleData);
  }
  bad.alpha[1] = Vector{f5.zero()};
  try {
    crossed_product(bad);
    FAIL("expected NonInvertibleAlpha");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonInvertibleAlpha);
  }
}

TEST_CASE("section normalization") {
  auto qs = quaternion_spec(q(), q().from_int(-1), q().from_int(-1));
  auto n = normalize_section(qs);
  CHECK(n.alpha == qs.alpha);

  Field f7 = Field::prime(7);
  CrossedProductSpec spec;
  spec.coefficients = scalar_algebra(f7);
  spec.group = Group::cyclic(3);
  spec.sigma.assign(3, Matrix::identity(f7, 1));
  spec.alpha.assign(9, Vector{f7.from_int(3)});
  auto a = crossed_product(spec);
  CHECK(a.unit() == Vector{f7.from_int(5), f7.zero(), f7.zero()});
  auto norm = normalize_section(spec);
  CHECK(norm.alpha_at(1, 2) == Vector{f7.one()});
  CHECK(norm.alpha_at(2, 1) == Vector{f7.one()});
  CHECK(norm.alpha_at(0, 0) == Vector{f7.one()});
  auto b = crossed_product(norm);
  CHECK(b.multiply(b.basis_vector(1), b.basis_vector(2)) == b.unit());

  auto ga_spec = frobenius_crossed_product_spec(Field::prime(3), 3);
  auto gn = normalize_section(ga_spec);
  CHECK(gn.alpha == ga_spec.alpha);
  for (std::size_t g = 0; g < 3; ++g) CHECK(gn.sigma[g] == ga_spec.sigma[g]);
}

TEST_CASE("good gradings") {
  Field f2 = Field::prime(2);
  const Group c2 = Group::cyclic(2);
  auto m = good_matrix_algebra({2, {0, 1}, scalar_algebra(f2, c2)});
  CHECK(m.degrees() == std::vector<GroupElem>{0, 1, 1, 0});
  Subspace diag = Subspace::span(f2, 4, {m.basis_vector(0), m.basis_vector(3)});
  Subspace anti = Subspace::span(f2, 4, {m.basis_vector(1), m.basis_vector(2)});
  CHECK(homogeneous_component(m, 0) == diag);
  CHECK(homogeneous_component(m, 1) == anti);

  auto one = good_matrix_algebra({1, {1}, scalar_algebra(f2, c2)});
  CHECK(one.data().products == scalar_algebra(f2, c2).data().products);
  CHECK(one.degrees() == std::vector<GroupElem>{0});

  auto d3 = Group::dihedral(3);
  auto same = good_matrix_algebra({2, {4, 4}, group_algebra(f2, d3)});
  for (std::size_t i = 0; i < same.dim(); ++i) {
    const std::size_t delta = i % 6;
    CHECK(same.degree(i) == d3.mul(d3.mul(d3.inverse(4), delta), 4));
  }
  CHECK_THROWS_AS(good_matrix_algebra({9, std::vector<GroupElem>(9, 0), scalar_algebra(f2)}), Error);
}

TEST_CASE("sweedler algebra and trivial extensions") {
  Field f3 = Field::prime(3);
  auto s = sweedler_algebra(f3);
  auto e = [&](int i) { return s.basis_vector(i); };
  CHECK(s.multiply(e(2), e(1)) == scale(f3.from_int(-1), e(3)));
  CHECK(s.multiply(e(1), e(1)) == e(0));
  CHECK(is_zero(s.multiply(e(2), e(2))));
  CHECK(is_zero(s.multiply(e(3), e(3))));

  auto t = trivial_extension(s);
  CHECK(t.dim() == 8);
  for (std::size_t i = 4; i < 8; ++i)
    for (std::size_t j = 4; j < 8; ++j) CHECK(is_zero(t.multiply(t.basis_vector(i), t.basis_vector(j))));
  // (e_i f)(m) = f(m e_i): check against the bimodule formula directly
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      Vector prod = t.multiply(t.basis_vector(i), t.basis_vector(4 + k));
      for (std::size_t m = 0; m < 4; ++m) CHECK(prod[4 + m] == s.multiply(e(m), e(i))[k]);
      Vector rprod = t.multiply(t.basis_vector(4 + k), t.basis_vector(i));
      for (std::size_t m = 0; m < 4; ++m) CHECK(rprod[4 + m] == s.multiply(e(i), e(m))[k]);
    }

  auto g = trivial_extension(group_algebra(f3, Group::cyclic(3)));
  CHECK(g.degree(3 + 1) == 2);
}

TEST_CASE("products, tensor products, scalar extension, ungrading") {
  Field f3 = Field::prime(3);
  const Group c2 = Group::cyclic(2);
  auto a = group_algebra(f3, c2);
  CHECK(direct_product(a, a).dim() == 4);
  auto t = tensor_product(a, a);
  CHECK(t.dim() == 4);
  CHECK(t.degrees() == std::vector<GroupElem>{0, 1, 1, 0});
  CHECK(tensor_product(a, scalar_algebra(f3, c2)).data().products == a.data().products);
  try {
    tensor_product(group_algebra(f3, Group::sym3()), group_algebra(f3, Group::sym3()));
    FAIL("expected NonAbelianGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAbelianGroup);
  }
  try {
    direct_product(a, group_algebra(Field::prime(5), c2));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  try {
    direct_product(a, group_algebra(f3, Group::cyclic(3)));
    FAIL("expected GroupMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupMismatch);
  }

  CHECK(scalar_extension(a, 1) == a);
  auto ext = scalar_extension(a, 3);
  CHECK(ext.dim() == a.dim());
  CHECK(ext.field().order() == 27);
  try {
    scalar_extension(quaternion_algebra(q(), q().from_int(-1), q().from_int(-1)), 2);
    FAIL("expected RationalsNotSupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RationalsNotSupported);
  }

  auto u = ungrade(a);
  CHECK(homogeneous_component(u, 0).dim() == 2);
  CHECK(ungrade(u) == u);
}

TEST_CASE("subspace algebras") {
  Field f = q();
  auto h = quaternion_algebra(f, f.from_int(-1), f.from_int(-1));
  auto full = subspace_algebra(h, Subspace::full(f, 4));
  CHECK(full.data().products == h.data().products);
  CHECK(full.degrees() == h.degrees());

  auto scalars = subspace_algebra(h, Subspace::span(f, 4, {h.unit()}));
  CHECK(scalars.dim() == 1);

  auto kind_of = [&](const Subspace& s, bool graded) {
    try {
      subspace_algebra(h, s, graded);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of(Subspace::span(f, 4, {h.unit(), h.basis_vector(1), h.basis_vector(2)}), true) == ErrorKind::NotClosed);
  CHECK(kind_of(Subspace::span(f, 4, {h.basis_vector(1)}), true) == ErrorKind::UnitMissing);
  CHECK(kind_of(Subspace::span(f, 4, {h.unit(), add(h.basis_vector(1), h.basis_vector(2))}), true) ==
        ErrorKind::NotGraded);
  CHECK(subspace_algebra(h, Subspace::span(f, 4, {h.unit(), h.basis_vector(1)})).dim() == 2);
}

TEST_CASE("homogeneous components partition the basis") {
  for (const auto& a : constructor_outputs()) {
    std::size_t total = 0;
    for (GroupElem g = 0; g < a.group().order(); ++g) total += homogeneous_component(a, g).dim();
    CHECK(total == a.dim());
  }
}
