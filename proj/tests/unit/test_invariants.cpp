#include <doctest.h>

#include "gradsym/construct.hpp"
#include "gradsym/invariants.hpp"
#include "oracles.hpp"

using namespace gradsym;

namespace {

Field q() { return Field::rationals(); }

GradedAlgebra quaternions(std::int64_t a = -1, std::int64_t b = -1) {
  return quaternion_algebra(q(), q().from_int(a), q().from_int(b));
}

// k[x]/(x^2) with x of degree g in C_3.
GradedAlgebra graded_dual_numbers(const Field& f) {
  StructureBuilder sb(f, 2);
  sb.add(0, 0, 0, f.one());
  sb.add(0, 1, 1, f.one());
  sb.add(1, 0, 1, f.one());
  AlgebraData d{f, Group::cyclic(3), 2, {0, 1}, sb.finish(), unit_vector(f, 2, 0), {"1", "x"}};
  return GradedAlgebra::make(d);
}

// Elements commuting with every basis vector, counted by enumeration.
std::size_t brute_center_size(const GradedAlgebra& a) {
  std::size_t n = 0;
  for (const auto& x : oracle::all_vectors(a.field(), a.dim())) {
    bool central = true;
    for (std::size_t i = 0; i < a.dim() && central; ++i)
      central = is_zero(a.commutator(x, a.basis_vector(i)));
    n += central;
  }
  return n;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

bool homogeneous_scan_all_invertible(const GradedAlgebra& a) {
  for (GroupElem g = 0; g < a.group().order(); ++g) {
    const auto idx = a.component_indices(g);
    for (const auto& c : oracle::all_vectors(a.field(), idx.size())) {
      if (is_zero(c)) continue;
      Vector v = a.zero();
      for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = c[r];
      if (rank(a.left_multiplication(v)) != a.dim()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("centers") {
  CHECK(center(quaternions()) == Subspace::span(q(), 4, {unit_vector(q(), 4, 0)}));
  const auto ga = group_algebra(Field::prime(3), Group::cyclic(2));
  CHECK(center(ga) == Subspace::full(ga.field(), 2));
  const auto m2 = good_matrix_algebra({2, {0, 1}, scalar_algebra(q(), Group::cyclic(2))});
  const auto z = center(m2);
  CHECK(z.dim() == 1);
  CHECK(z.contains(m2.unit()));

  for (const auto& a : {group_algebra(Field::prime(2), Group::dihedral(3)), sweedler_algebra(Field::prime(3)),
                        quaternion_algebra(Field::prime(3), Field::prime(3).from_int(-1), Field::prime(3).from_int(-1)),
                        trivial_extension(sweedler_algebra(Field::prime(3))), cyclic_algebra(2)}) {
    const auto c = center(a);
    CHECK(brute_center_size(a) == power(a.field().order(), c.dim()));
    CHECK(c.contains(a.unit()));
    for (const auto& x : c.basis_vectors())
      for (const auto& y : c.basis_vectors()) CHECK(c.contains(a.multiply(x, y)));
  }
  // D_3 over F_2: class sums of {e}, {r, r^2}, {s, sr, sr^2}.
  CHECK(center(group_algebra(Field::prime(2), Group::dihedral(3))).dim() == 3);
}

TEST_CASE("centralizers") {
  const auto h = quaternions();
  const auto z = center(h);
  CHECK(centralizer(h, z) == Subspace::full(q(), 4));
  CHECK(centralizer(h, Subspace::full(q(), 4)) == z);
  const auto s = Subspace::span(q(), 4, {unit_vector(q(), 4, 0), unit_vector(q(), 4, 1)});
  CHECK(centralizer(h, s) == s);
  CHECK_THROWS_AS(centralizer(h, Subspace::full(q(), 3)), Error);

  // Monotone decreasing, and always above the center.
  const auto t = trivial_extension(sweedler_algebra(Field::prime(3)));
  oracle::Rng rng(7);
  const Subspace zt = center(t);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vector> gens{oracle::random_vector(rng, t.field(), t.dim())};
    const Subspace small = Subspace::span(t.field(), t.dim(), gens);
    gens.push_back(oracle::random_vector(rng, t.field(), t.dim()));
    const Subspace big = Subspace::span(t.field(), t.dim(), gens);
    CHECK(centralizer(t, big).contains(zt));
    CHECK(centralizer(t, small).contains(centralizer(t, big)));
  }
}

TEST_CASE("commutator subspaces") {
  CHECK(commutator_subspace(group_algebra(Field::prime(5), Group::cyclic(5))).dim() == 0);
  CHECK(commutator_subspace(quaternions()).dim() == 3);
  CHECK(commutator_subspace(matrix_algebra(Field::prime(5), 2)).dim() == 3);
  CHECK(commutator_subspace(matrix_algebra(Field::prime(7), 3)).dim() == 8);
  // Commutators of random elements stay inside the basis-pair span.
  const auto m = matrix_algebra(Field::prime(3), 2);
  const auto c = commutator_subspace(m);
  oracle::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(c.contains(m.commutator(oracle::random_vector(rng, m.field(), 4), oracle::random_vector(rng, m.field(), 4))));
}

TEST_CASE("graded commutator spaces") {
  CHECK(graded_commutator_space(group_algebra(Field::prime(3), Group::cyclic(3))).dim() == 0);
  CHECK(graded_commutator_space(quaternions()).dim() == 0);

  // cyclic_algebra(3): span of [a, b] over all a in A_g, b in A_{g^-1}.
  const auto a = cyclic_algebra(3);
  const Field& f = a.field();
  std::vector<Vector> gens;
  for (GroupElem g = 0; g < 3; ++g) {
    const GroupElem h = a.group().inverse(g);
    const auto ig = a.component_indices(g), ih = a.component_indices(h);
    for (const auto& cg : oracle::all_vectors(f, ig.size()))
      for (const auto& ch : oracle::all_vectors(f, ih.size())) {
        Vector x = a.zero(), y = a.zero();
        for (std::size_t r = 0; r < ig.size(); ++r) x[ig[r]] = cg[r];
        for (std::size_t r = 0; r < ih.size(); ++r) y[ih[r]] = ch[r];
        gens.push_back(a.commutator(x, y));
      }
  }
  CHECK(oracle::span_size(f, a.dim(), gens) == 9);
  const auto v = graded_commutator_space(a);
  CHECK(v == Subspace::span(f, 9, {a.basis_vector(0), a.basis_vector(1)}));
  for (const auto& x : gens) CHECK(v.contains(x));

  for (const auto& b : {cyclic_algebra(2), quaternions(), trivial_extension(sweedler_algebra(Field::prime(3))),
                        good_matrix_algebra({3, {0, 1, 1}, scalar_algebra(q(), Group::cyclic(2))})}) {
    const auto gc = graded_commutator_space(b);
    CHECK(homogeneous_component(b, 0).contains(gc));
    CHECK(commutator_subspace(b).contains(gc));
  }
}

TEST_CASE("support") {
  const auto ga = group_algebra(Field::prime(2), Group::product({2, 2}));
  CHECK(support(ga) == std::vector<GroupElem>{0, 1, 2, 3});
  CHECK(support(ungrade(ga)) == std::vector<GroupElem>{0});
  CHECK(support(scalar_algebra(Field::prime(2), Group::cyclic(4))) == std::vector<GroupElem>{0});
  const auto c = cyclic_algebra(3);
  CHECK(c.group().subgroup_generated(support(c)) == support(c));
}

TEST_CASE("invertibility") {
  const auto h = quaternions();
  auto r = is_invertible({h, h.unit()});
  CHECK(r.invertible);
  CHECK(r.inverse == h.unit());
  r = is_invertible({h, h.basis_vector(1)});
  CHECK(r.invertible);
  CHECK(r.inverse == scale(q().from_int(-1), h.basis_vector(1)));
  const auto sw = sweedler_algebra(Field::prime(5));
  CHECK(!is_invertible({sw, sw.basis_vector(2)}).invertible);
  CHECK(!is_invertible({sw, sw.zero()}).invertible);
}

TEST_CASE("invertible elements in components") {
  const auto ga = group_algebra(Field::prime(3), Group::cyclic(3));
  auto c = component_has_invertible(ga, 1);
  CHECK(c.has_invertible);
  CHECK(c.extension_degree == 1);
  CHECK(c.witness == scale(c.witness[1], ga.basis_vector(1)));

  const auto m = good_matrix_algebra({2, {0, 1}, scalar_algebra(Field::prime(2), Group::cyclic(2))});
  c = component_has_invertible(m, 1);
  CHECK(c.has_invertible);
  CHECK(rank(m.left_multiplication(c.witness)) == 4);

  const auto t = trivial_extension(graded_dual_numbers(Field::prime(3)));
  c = component_has_invertible(t, 2);
  CHECK(!c.has_invertible);
  CHECK(c.identically_singular);
  CHECK_THROWS_AS(component_has_invertible(scalar_algebra(Field::prime(2), Group::cyclic(2)), 1), Error);
}

TEST_CASE("graded division recognition") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto a = cyclic_algebra(p);
    const auto v = is_graded_division(a);
    CHECK(v.status == DivisionVerdict::Status::Yes);
    CHECK(v.certificate == "exhaustive");
    CHECK(homogeneous_scan_all_invertible(a));
    CHECK(a.group().subgroup_generated(support(a)) == support(a));
  }
  const auto c5 = is_graded_division(cyclic_algebra(5));
  CHECK(c5.status == DivisionVerdict::Status::Yes);
  CHECK(c5.scan_size == 3124);

  auto v = is_graded_division(quaternions());
  CHECK(v.status == DivisionVerdict::Status::Yes);
  v = is_graded_division(ungrade(quaternions(-1, -3)));
  CHECK(v.status == DivisionVerdict::Status::Yes);
  CHECK(v.certificate == "quaternion-norm-form");
  // (1, 1) is split: M_2(Q).
  v = is_graded_division(ungrade(quaternions(1, 1)));
  CHECK(v.status != DivisionVerdict::Status::Yes);

  const auto m = good_matrix_algebra({2, {0, 0}, scalar_algebra(q())});
  v = is_graded_division(m);
  REQUIRE(v.status == DivisionVerdict::Status::No);
  CHECK(is_division_witness(m, v.witness));
  CHECK(v.witness == m.basis_vector(0));

  v = is_graded_division(sweedler_algebra(Field::prime(3)));
  REQUIRE(v.status == DivisionVerdict::Status::No);
  CHECK(is_division_witness(sweedler_algebra(Field::prime(3)), v.witness));

  const auto f9 = field_as_algebra(Field::standard_extension(3, 2));
  CHECK(is_graded_division(f9).status == DivisionVerdict::Status::Yes);
  CHECK(homogeneous_scan_all_invertible(f9));
  const auto cp = crossed_product(frobenius_crossed_product_spec(Field::standard_extension(3, 2), 2));
  CHECK(is_graded_division(cp).status == DivisionVerdict::Status::Yes);
  CHECK(homogeneous_scan_all_invertible(cp));
}

TEST_CASE("commutator dimension over the center for quaternion division algebras") {
  for (std::int64_t b : {-1, -3}) {
    const auto d = ungrade(quaternions(-1, b));
    REQUIRE(is_graded_division(d).status == DivisionVerdict::Status::Yes);
    const std::size_t l = center(d).dim();
    CHECK(l == 1);
    CHECK(commutator_subspace(d).dim() / l + 1 == d.dim() / l);
  }
}
