// Acceptance run: one PASS/FAIL line per criterion. Every check recomputes
// its claim with the reference routines under tests/unit rather than trusting
// the library's own verdict.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "form_oracle.hpp"
#include "gradsym/replicate.hpp"

using namespace gradsym;

namespace {

Field q() { return Field::rationals(); }

// Plain Gaussian elimination on row vectors.
std::size_t rank_of(std::vector<Vector> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Scalar inv = rows[r][c].inv();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<Vector> basis_commutators(const GradedAlgebra& a) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      out.push_back(sub(a.multiply(a.basis_vector(i), a.basis_vector(j)),
                        a.multiply(a.basis_vector(j), a.basis_vector(i))));
  return out;
}

std::size_t center_dim(const GradedAlgebra& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector c;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const auto v = sub(a.multiply(a.basis_vector(j), a.basis_vector(i)),
                         a.multiply(a.basis_vector(i), a.basis_vector(j)));
      c.insert(c.end(), v.begin(), v.end());
    }
    cols.push_back(std::move(c));
  }
  return a.dim() - rank_of(cols);
}

// In a finite-dimensional algebra x is invertible iff y -> xy is injective.
bool left_mult_injective(const GradedAlgebra& a, const Vector& x) {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(a.multiply(x, a.basis_vector(i)));
  return rank_of(images) == a.dim();
}

std::vector<Vector> gram_rows(const GradedAlgebra& a, const Vector& lambda) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector r;
    for (std::size_t j = 0; j < a.dim(); ++j) r.push_back(dot(lambda, a.multiply(a.basis_vector(i), a.basis_vector(j))));
    rows.push_back(std::move(r));
  }
  return rows;
}

// The defining clauses for a form: the linear constraints, then no ideal in
// the kernel (by enumeration over finite fields, by Gram rank over Q).
bool is_form(const GradedAlgebra& a, const Vector& lambda, bool graded, bool symmetric) {
  if (!oracle::satisfies_constraints(a, lambda, graded, symmetric)) return false;
  if (a.field().is_finite())
    return oracle::kernel_has_no_ideal(a, lambda, oracle::candidate_generators(a, graded));
  return rank_of(gram_rows(a, lambda)) == a.dim();
}

struct Failure {
  std::string why;
};

void require(bool cond, const std::string& why) {
  if (!cond) throw Failure{why};
}

void decided_form(const GradedAlgebra& a, Mode mode, const std::string& label) {
  const auto v = decide_form_existence(a, mode);
  require(v.yes() && v.witness, label + ": decision is not yes");
  const bool graded = is_graded_mode(mode);
  require(is_form(graded ? a : ungrade(a), v.witness->coords, graded, is_symmetric_mode(mode)),
          label + ": witness fails the definition");
}

void c1() {
  for (int b : {-1, -3}) {
    const auto d = quaternion_algebra(q(), q().from_int(-1), q().from_int(b));
    const std::size_t l = center_dim(d), c = rank_of(basis_commutators(d));
    require(l == 1 && c == 3 && d.dim() == 4, "dims for b = " + std::to_string(b));
    require(c / l == d.dim() / l - 1, "identity fails");
  }
}

void c2() {
  require(rank_of(basis_commutators(matrix_algebra(Field::prime(5), 2))) == 3, "M2(F5)");
  require(rank_of(basis_commutators(matrix_algebra(Field::prime(7), 3))) == 8, "M3(F7)");
}

void c3() {
  const auto corpus = random_algebra_corpus({});
  require(corpus.size() == 50, "corpus size");
  oracle::Rng rng(99);
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const auto& a = corpus[n];
    require(a.dim() <= 5, "corpus dimension");
    const auto small = basis_commutators(a);
    const std::size_t r = rank_of(small);
    for (std::uint32_t m : {2u, 3u}) {
      const auto big = scalar_extension(a, m);
      const Field& k = big.field();
      auto lifted = small;
      for (auto& v : lifted)
        for (auto& x : v) x = k.from_int(x.code());
      // [a, b] for random a, b over the big field lies in K [A, A].
      for (int t = 0; t < 4; ++t) {
        const auto x = oracle::random_vector(rng, k, a.dim()), y = oracle::random_vector(rng, k, a.dim());
        auto rows = lifted;
        rows.push_back(sub(big.multiply(x, y), big.multiply(y, x)));
        require(rank_of(rows) == r, "algebra " + std::to_string(n) + ": commutator outside K[A,A]");
      }
      require(rank_of(basis_commutators(big)) == r, "algebra " + std::to_string(n) + ": dimensions differ");
    }
  }
}

void c4() {
  const auto h = quaternion_algebra(q(), q().from_int(-1), q().from_int(-1));
  require(h.group().order() == 4 && h.group().element_order(1) == 2 && h.group().element_order(2) == 2 &&
              h.group().element_order(3) == 2,
          "grading group is not the Klein group");
  decided_form(h, Mode::GradedSymmetric, "quaternions");
}

void c5() {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto a = group_algebra(Field::prime(p), Group::cyclic(p));
    decided_form(a, Mode::GradedSymmetric, "F" + std::to_string(p) + "C" + std::to_string(p));
    require(oracle::find_form(a, true, true).has_value(), "no form found by enumeration");
  }
}

void c6() {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto a = cyclic_algebra(p);
    require(a.dim() == p * p, "dimension");
    require(a.label(0) == "1" && a.label(1) == "x", "basis layout");
    std::vector<Vector> comm;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (a.group().mul(a.degree(i), a.degree(j)) == Group::identity())
          comm.push_back(sub(a.multiply(a.basis_vector(i), a.basis_vector(j)),
                             a.multiply(a.basis_vector(j), a.basis_vector(i))));
    require(rank_of(comm) == p - 1, "graded commutator dimension");
    auto with_low = comm;
    for (std::uint32_t k = 0; k + 1 < p; ++k) {
      require(a.degree(k) == Group::identity(), "x^k is not of degree e");
      with_low.push_back(a.basis_vector(k));
    }
    require(rank_of(with_low) == p - 1, "span differs from 1..x^(p-2)");
    comm.push_back(a.basis_vector(p - 1));
    require(rank_of(comm) == p, "x^(p-1) lies in the span");
    require(graded_commutator_space(a).dim() == p - 1, "library graded commutator space");
    decided_form(a, Mode::GradedSymmetric, "cyclic" + std::to_string(p));
  }
}

struct GoodCase {
  std::string name;
  GoodGradingSpec spec;
};

std::vector<GoodCase> good_cases(const Field& f) {
  const Group c2 = Group::cyclic(2), c3 = Group::cyclic(3), v4 = Group::product({2, 2});
  const std::vector<std::pair<Group, std::vector<GroupElem>>> raw{
      {c2, {0, 1}}, {c2, {0, 1, 1}}, {c2, {1, 0, 1}}, {c3, {0, 1}}, {c3, {0, 2, 1}}, {v4, {0, 3}}, {v4, {1, 2, 3}}};
  std::vector<GoodCase> out;
  for (const auto& [g, s] : raw) {
    std::string name = "M" + std::to_string(s.size()) + "(" + f.name() + ") [";
    for (auto x : s) name += std::to_string(x);
    out.push_back({name + "]", GoodGradingSpec{s.size(), s, scalar_algebra(f, g)}});
  }
  return out;
}

void c7() {
  for (const Field& f : {Field::prime(2), q()})
    for (const auto& [name, spec] : good_cases(f)) {
      const auto m = good_matrix_algebra(spec);
      Vector trace = m.zero();
      for (std::size_t i = 0; i < spec.n; ++i) trace[i * spec.n + i] = f.one();
      const auto lam = matrix_trace_functional(spec, m, {Vector{f.one()}});
      require(lam.coords == trace, name + ": functional differs from the trace");
      require(verify_certificate(m, lam, Mode::GradedSymmetric).passed, name + ": certificate rejected");
      require(is_form(m, trace, true, true), name + ": trace fails the definition");
      decided_form(m, Mode::GradedSymmetric, name);
    }
}

void c8() {
  const auto cases = good_cases(q());
  std::size_t count = 0;
  for (std::size_t i = 0; i < cases.size(); ++i)
    for (std::size_t j = i; j < cases.size(); ++j) {
      if (cases[i].spec.delta.group() != cases[j].spec.delta.group()) continue;
      decided_form(direct_product(good_matrix_algebra(cases[i].spec), good_matrix_algebra(cases[j].spec)),
                   Mode::GradedSymmetric, cases[i].name + " x " + cases[j].name);
      ++count;
    }
  require(count >= 10, "too few products");
}

// Nilpotent parts of a local commutative algebra given inside t.
std::vector<Vector> radical_part(const GradedAlgebra& t, const Subspace& z) {
  std::vector<Vector> out;
  const Scalar n = t.field().from_int(static_cast<std::int64_t>(t.dim()));
  for (const auto& v : z.basis_vectors()) {
    const Matrix l = t.left_multiplication(v);
    Scalar tr = t.field().zero();
    for (std::size_t i = 0; i < t.dim(); ++i) tr += l(i, i);
    const Vector w = sub(v, scale(tr / n, t.unit()));
    if (!is_zero(w)) out.push_back(w);
  }
  return out;
}

void c9() {
  for (const Field& f : {Field::prime(3), Field::prime(5), q()}) {
    const auto t = trivial_extension(sweedler_algebra(f));
    const auto zs = center(t);
    require(center_dim(t) == 3 && zs.dim() == 3, f.name() + ": center dimension");
    const auto rad = radical_part(t, zs);
    require(rank_of(rad) == 2, f.name() + ": radical dimension");
    for (const auto& x : rad)
      for (const auto& y : rad) require(is_zero(t.multiply(x, y)), f.name() + ": radical is not square zero");
    const auto z = subspace_algebra(t, zs);
    const auto v = decide_form_existence(z, Mode::Frobenius);
    require(v.status == VerdictStatus::No && v.refutation == Refutation::GramDetIdenticallyZero,
            f.name() + ": verdict");
    if (f.is_finite()) {
      require(!oracle::find_form(ungrade(z), false, false), f.name() + ": enumeration found a form");
    } else {
      for (const auto& lam : oracle::all_vectors(Field::prime(5), 3)) {
        Vector l;
        for (const auto& c : lam) l.push_back(q().from_int(static_cast<std::int64_t>(c.code()) - 2));
        require(rank_of(gram_rows(z, l)) < 3, "Q: nonsingular Gram matrix");
      }
    }
  }
}

void c10() {
  const auto t = trivial_extension(quaternion_algebra(q(), q().from_int(-1), q().from_int(-1)));
  require(center_dim(t) == 2, "center dimension");
  const auto z = subspace_algebra(t, center(t));
  decided_form(z, Mode::Symmetric, "center of T(H)");
}

void c11() {
  for (std::uint32_t p : {3u, 5u}) {
    const auto a = crossed_product(frobenius_crossed_product_spec(Field::standard_extension(p, 2), 2));
    require(p % a.group().order() != 0, "characteristic divides |G|");
    require(is_graded_division(a).status == DivisionVerdict::Status::Yes, "not graded division");
    for (const auto& x : oracle::candidate_generators(a, true))
      require(left_mult_injective(a, x), "homogeneous element not invertible");
    const auto zs = center(a);
    require(zs.dim() == center_dim(a), "center dimension");
    const auto z = subspace_algebra(a, zs);
    require(oracle::find_form(ungrade(z), false, true).has_value(), "no symmetric form by enumeration");
    decided_form(z, Mode::Symmetric, "center of F" + std::to_string(p * p) + "^Frob[C2]");
  }
}

void c12() {
  for (std::uint32_t p : {3u, 5u}) {
    const auto spec = frobenius_crossed_product_spec(Field::standard_extension(p, 2), 2);
    const auto& d = spec.coefficients;
    const Field f = d.field();
    const Vector mu = d.basis_vector(0);
    Vector expect = d.zero();
    for (const auto& s : spec.sigma)
      for (std::size_t j = 0; j < d.dim(); ++j) expect[j] += dot(mu, s.col(j));
    const auto lam = average_functional(spec, {mu});
    require(lam.coords == expect, "average differs from the direct sum");
    for (const auto& s : spec.sigma)
      for (std::size_t j = 0; j < d.dim(); ++j) require(dot(expect, s.col(j)) == expect[j], "not invariant");
    require(oracle::satisfies_constraints(d, expect, false, true), "not symmetric");
    require(dot(expect, d.unit()) == f.from_int(2) * dot(mu, d.unit()), "lambda(1) != |G| mu(1)");
    const auto a = crossed_product(spec);
    Vector bar = a.zero();
    for (std::size_t j = 0; j < d.dim(); ++j) bar[j] = expect[j];
    require(lift_functional(spec, lam).coords == bar, "lift differs");
    require(verify_certificate(a, {bar}, Mode::GradedSymmetric).passed, "lift certificate rejected");
    require(is_form(a, bar, true, true), "lift fails the definition");
  }
}

void c13() {
  std::size_t compared = 0;
  for (const auto& [name, a] : small_f2_corpus(4)) {
    require(a.dim() <= 4 && a.field() == Field::prime(2), name + ": outside the corpus bounds");
    for (Mode mode : {Mode::GradedSymmetric, Mode::GradedFrobenius, Mode::Symmetric, Mode::Frobenius}) {
      const bool graded = is_graded_mode(mode);
      const bool expect = oracle::find_form(graded ? a : ungrade(a), graded, is_symmetric_mode(mode)).has_value();
      require(decide_form_existence(a, mode).yes() == expect, name + " " + mode_name(mode));
      ++compared;
    }
  }
  require(compared >= 200, "corpus too small");
}

// Group homomorphisms G -> Z/m as tables.
std::vector<std::vector<std::uint32_t>> homs(const Group& g, std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::size_t n = g.order();
  std::vector<std::uint32_t> phi(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (GroupElem a = 0; a < n; ++a)
        for (GroupElem b = 0; b < n; ++b)
          if (phi[g.mul(a, b)] != (phi[a] + phi[b]) % m) return;
      out.push_back(phi);
      return;
    }
    for (std::uint32_t v = 0; v < m; ++v) {
      phi[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

void c14() {
  const auto report = hunt_counterexample(HuntParams{});
  require(!report.truncated, "hunt truncated");
  require(report.non_symmetric_instances.empty(), "non-symmetric instance found");
  require(report.no_base_field_point_instances.empty(), "instance without base-field witness");

  std::uint64_t valid = 0;
  const Field f2 = Field::prime(2);
  for (std::uint32_t m : {1u, 2u})
    for (const Group& g : {Group::cyclic(2), Group::product({2, 2}), Group::cyclic(4)}) {
      const Field k = Field::standard_extension(2, m);
      const std::size_t n = g.order();
      std::vector<Scalar> units;
      for (std::uint32_t c = 1; c < k.order(); ++c) units.push_back(k.element(c));
      const std::size_t pairs = (n - 1) * (n - 1);
      std::uint64_t choices = 1;
      for (std::size_t i = 0; i < pairs; ++i) choices *= units.size();
      for (const auto& phi : homs(g, m))
        for (std::uint64_t code = 0; code < choices; ++code) {
          std::vector<Scalar> alpha(n * n, k.one());
          std::uint64_t x = code;
          for (GroupElem a = 1; a < n; ++a)
            for (GroupElem b = 1; b < n; ++b) {
              alpha[a * n + b] = units[x % units.size()];
              x /= units.size();
            }
          auto sigma = [&](GroupElem a, const Scalar& s) { return s.pow(std::uint64_t{1} << phi[a]); };
          bool ok = true;
          for (GroupElem a = 0; a < n && ok; ++a)
            for (GroupElem b = 0; b < n && ok; ++b)
              for (GroupElem c = 0; c < n && ok; ++c)
                ok = sigma(a, alpha[b * n + c]) * alpha[a * n + g.mul(b, c)] ==
                     alpha[a * n + b] * alpha[g.mul(a, b) * n + c];
          if (!ok) continue;
          ++valid;
          CrossedProductSpec spec{field_as_algebra(k), g, {}, {}};
          for (GroupElem a = 0; a < n; ++a) spec.sigma.push_back(frobenius_matrix(k, phi[a]));
          for (const auto& s : alpha) {
            Vector v;
            for (auto c : s.coeffs()) v.push_back(f2.element(c));
            spec.alpha.push_back(v);
          }
          const auto alg = crossed_product(spec);
          for (const auto& h : oracle::candidate_generators(alg, true))
            require(left_mult_injective(alg, h), "homogeneous element not invertible");
          decided_form(alg, Mode::GradedSymmetric, "hunt instance");
        }
    }
  require(valid == report.instances_tested, "independent count " + std::to_string(valid) + " vs report " +
                                                std::to_string(report.instances_tested));
  require(report.instances_tested == kHuntRegressionInstances, "regression count changed");
}

}  // namespace

int main() {
  const std::vector<std::tuple<std::string, double, void (*)()>> criteria{
      {"commutator-dimension", 1, c1},
      {"matrix-commutators", 1, c2},
      {"scalar-extension", 30, c3},
      {"char0-graded-division", 1, c4},
      {"group-algebras-kCp", 1, c5},
      {"cyclic-algebras", 20, c6},
      {"good-matrix-algebras", 10, c7},
      {"semisimple-closure", 5, c8},
      {"sweedler-center", 1, c9},
      {"trivial-extension-center", 1, c10},
      {"center-theorem", 5, c11},
      {"averaging-lifting", 1, c12},
      {"oracle-equivalence", 60, c13},
      {"hunt-regression", 120, c14},
  };
  int failed = 0, index = 0;
  for (const auto& [name, limit, fn] : criteria) {
    ++index;
    std::string why;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs > limit) why = "over the time limit";
    failed += !why.empty();
    std::printf("%s %2d %-26s %8.3f s / %g s%s%s\n", why.empty() ? "PASS" : "FAIL", index, name.c_str(), secs, limit,
                why.empty() ? "" : "  ", why.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
