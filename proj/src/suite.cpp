#include <functional>
#include <map>

#include "gradsym/construct.hpp"
#include "gradsym/replicate.hpp"

namespace gradsym {

namespace {

Field q() { return Field::rationals(); }

const std::map<std::string, std::function<GradedAlgebra()>>& registry() {
  static const std::map<std::string, std::function<GradedAlgebra()>> r{
      {"quaternions", [] { return quaternion_algebra(q(), q().from_int(-1), q().from_int(-1)); }},
      {"quaternions(-1,-3)", [] { return quaternion_algebra(q(), q().from_int(-1), q().from_int(-3)); }},
      {"M2(F5)", [] { return matrix_algebra(Field::prime(5), 2); }},
      {"M3(F7)", [] { return matrix_algebra(Field::prime(7), 3); }},
      {"F2C2", [] { return group_algebra(Field::prime(2), Group::cyclic(2)); }},
      {"F3C3", [] { return group_algebra(Field::prime(3), Group::cyclic(3)); }},
      {"F5C5", [] { return group_algebra(Field::prime(5), Group::cyclic(5)); }},
      {"cyclic2", [] { return cyclic_algebra(2); }},
      {"cyclic3", [] { return cyclic_algebra(3); }},
      {"cyclic5", [] { return cyclic_algebra(5); }},
      {"sweedler(F3)", [] { return sweedler_algebra(Field::prime(3)); }},
      {"sweedler(F5)", [] { return sweedler_algebra(Field::prime(5)); }},
      {"sweedler(Q)", [] { return sweedler_algebra(q()); }},
      {"F9^Frob[C2]",
       [] { return crossed_product(frobenius_crossed_product_spec(Field::standard_extension(3, 2), 2)); }},
      {"F25^Frob[C2]",
       [] { return crossed_product(frobenius_crossed_product_spec(Field::standard_extension(5, 2), 2)); }},
  };
  return r;
}

// Changes the coefficient of the first term of e_1 e_1 (or adds e_0 there).
GradedAlgebra corrupt(const GradedAlgebra& a) {
  AlgebraData d = a.data();
  const std::size_t i = d.dim > 1 ? 1 : 0;
  auto& terms = d.products[i * d.dim + i];
  if (terms.empty()) {
    terms.push_back({0, d.field.one()});
  } else {
    terms.front().coeff += d.field.one();
    if (terms.front().coeff.is_zero()) terms.erase(terms.begin());
  }
  return GradedAlgebra::make_unchecked(std::move(d));
}

struct Context {
  const SuiteOptions& opts;

  GradedAlgebra get(const std::string& name) const {
    GradedAlgebra a = registry().at(name)();
    if (opts.corrupt == name) a = corrupt(a);
    const auto rep = algebra_validate(a, ValidationDepth::FirstFailure);
    if (!rep.ok()) throw Error(ErrorKind::ValidationError, "instance " + name + ": " + rep.summary());
    return a;
  }
};

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  Json certs = Json::array();

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

// Decides, verifies the witness and records the certificate.
bool yes_with_certificate(Outcome& out, const GradedAlgebra& a, Mode mode, const std::string& label) {
  const auto v = decide_form_existence(a, mode);
  bool good = v.yes();
  if (good) {
    const GradedAlgebra b = is_graded_mode(mode) ? a : ungrade(a);
    good = verify_certificate(b, *v.witness, mode).passed;
  }
  Json c = verdict_to_json(a, v);
  c["instance"] = label;
  out.certs.push_back(c);
  out.require(good, label + " " + mode_name(mode) + " certified yes");
  if (good) out.note(label + ": " + mode_name(mode) + " yes, gram rank " + std::to_string(v.gram_rank));
  return good;
}

void commutator_dimension(const Context& ctx, Outcome& out) {
  for (const char* name : {"quaternions", "quaternions(-1,-3)"}) {
    const auto r = replicate_commutator_dim(ctx.get(name));
    out.require(r.status == CheckStatus::Holds && r.data["commutator_dim"] == 3 && r.data["dim"] == 4 &&
                    r.data["center_dim"] == 1,
                std::string(name) + ": " + r.detail);
    out.note(std::string(name) + ": " + r.detail);
  }
}

void matrix_commutators(const Context& ctx, Outcome& out) {
  const auto d2 = commutator_subspace(ctx.get("M2(F5)")).dim();
  const auto d3 = commutator_subspace(ctx.get("M3(F7)")).dim();
  out.require(d2 == 3, "dim [M2(F5), M2(F5)] = 3");
  out.require(d3 == 8, "dim [M3(F7), M3(F7)] = 8");
  out.note("dims " + std::to_string(d2) + ", " + std::to_string(d3));
}

void scalar_extension_check(const Context&, Outcome& out) {
  const auto corpus = random_algebra_corpus({});
  std::size_t checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::uint32_t m : {2u, 3u}) {
      ++checks;
      out.require(replicate_scalar_extension(corpus[i], m),
                  "corpus algebra " + std::to_string(i) + " extended by degree " + std::to_string(m));
    }
  out.note(std::to_string(corpus.size()) + " algebras, " + std::to_string(checks) + " extensions");
}

void char0_division(const Context& ctx, Outcome& out) {
  const auto h = ctx.get("quaternions");
  out.require(is_graded_division(h).status == DivisionVerdict::Status::Yes, "quaternions are graded division");
  yes_with_certificate(out, h, Mode::GradedSymmetric, "quaternions");
}

void group_algebras(const Context& ctx, Outcome& out) {
  for (const char* name : {"F2C2", "F3C3", "F5C5"}) yes_with_certificate(out, ctx.get(name), Mode::GradedSymmetric, name);
}

void cyclic_algebras(const Context& ctx, Outcome& out) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const std::string name = "cyclic" + std::to_string(p);
    const auto a = ctx.get(name);
    std::vector<Vector> low;
    for (std::uint32_t i = 0; i + 1 < p; ++i) low.push_back(a.basis_vector(i));
    const auto v = graded_commutator_space(a);
    out.require(v == Subspace::span(a.field(), a.dim(), low), name + ": graded commutators span 1..x^(p-2)");
    yes_with_certificate(out, a, Mode::GradedSymmetric, name);
  }
}

std::vector<std::pair<std::string, GoodGradingSpec>> good_specs(const Field& f) {
  std::vector<std::pair<std::string, GoodGradingSpec>> out;
  const std::vector<std::pair<std::string, Group>> groups{
      {"C2", Group::cyclic(2)}, {"C3", Group::cyclic(3)}, {"C2xC2", Group::product({2, 2})}};
  const std::map<std::string, std::vector<std::vector<GroupElem>>> tuples{
      {"C2", {{0, 1}, {0, 1, 1}, {0, 0, 1}}}, {"C3", {{0, 1}, {0, 1, 2}}}, {"C2xC2", {{0, 3}, {0, 1, 2}}}};
  for (const auto& [gn, g] : groups)
    for (const auto& s : tuples.at(gn)) {
      std::string name = "M" + std::to_string(s.size()) + "(" + f.name() + ")(";
      for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + g.label(s[i]);
      out.push_back({name + ")/" + gn, GoodGradingSpec{s.size(), s, scalar_algebra(f, g)}});
    }
  return out;
}

void good_matrix(const Context&, Outcome& out) {
  std::size_t count = 0;
  for (const Field& f : {Field::prime(2), q()})
    for (const auto& [name, spec] : good_specs(f)) {
      const auto m = good_matrix_algebra(spec);
      const auto cap = matrix_trace_functional(spec, m, {Vector{f.one()}});
      const bool via_trace = verify_certificate(m, cap, Mode::GradedSymmetric).passed;
      out.require(via_trace, name + ": trace certificate");
      const bool via_pencil = yes_with_certificate(out, m, Mode::GradedSymmetric, name);
      out.require(via_trace == via_pencil, name + ": trace and pencil agree");
      ++count;
    }
  out.note(std::to_string(count) + " good matrix algebras");
}

void semisimple_closure(const Context&, Outcome& out) {
  const auto specs = good_specs(q());
  std::size_t count = 0;
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = i; j < specs.size(); ++j) {
      const auto& a = specs[i].second;
      const auto& b = specs[j].second;
      if (a.delta.group() != b.delta.group()) continue;
      const auto p = direct_product(good_matrix_algebra(a), good_matrix_algebra(b));
      yes_with_certificate(out, p, Mode::GradedSymmetric, specs[i].first + " x " + specs[j].first);
      ++count;
    }
  out.note(std::to_string(count) + " products");
}

void sweedler_center(const Context& ctx, Outcome& out) {
  for (const char* name : {"sweedler(F3)", "sweedler(F5)", "sweedler(Q)"}) {
    const auto t = trivial_extension(ctx.get(name));
    const auto z = subspace_algebra(t, center(t));
    out.require(z.dim() == 3, std::string(name) + ": center has dimension 3");
    std::vector<Vector> rad;
    for (std::size_t i = 0; i < z.dim(); ++i)
      if (z.basis_vector(i) != z.unit()) rad.push_back(z.basis_vector(i));
    bool square_zero = rad.size() == 2;
    for (const auto& x : rad)
      for (const auto& y : rad) square_zero = square_zero && is_zero(z.multiply(x, y));
    out.require(square_zero, std::string(name) + ": u^2 = uv = v^2 = 0");
    const auto v = decide_form_existence(z, Mode::Frobenius);
    out.require(v.status == VerdictStatus::No && v.refutation == Refutation::GramDetIdenticallyZero,
                std::string(name) + ": not Frobenius, Gram determinant identically zero");
    out.note(std::string(name) + ": center dim " + std::to_string(z.dim()) + ", frobenius " +
             verdict_status_name(v.status) + " (" + refutation_name(v.refutation) + ")");
    Json c = verdict_to_json(z, v);
    c["instance"] = std::string("center of T(") + name + ")";
    out.certs.push_back(c);
  }
}

void trivial_extension_center(const Context& ctx, Outcome& out) {
  const auto t = trivial_extension(ctx.get("quaternions"));
  const auto z = subspace_algebra(t, center(t));
  out.require(z.dim() == 2, "center of T(quaternions) has dimension 2");
  yes_with_certificate(out, z, Mode::Symmetric, "center of T(quaternions)");
}

void center_theorem(const Context& ctx, Outcome& out) {
  for (const char* name : {"F9^Frob[C2]", "F25^Frob[C2]"}) {
    const auto r = replicate_center_theorem(ctx.get(name));
    out.require(r.status == CheckStatus::Holds, std::string(name) + ": " + r.detail);
    out.note(std::string(name) + ": " + r.detail);
    if (r.data.contains("certificate")) out.certs.push_back(r.data["certificate"]);
  }
}

void averaging_lifting(const Context& ctx, Outcome& out) {
  const std::vector<std::pair<std::string, std::uint32_t>> cases{{"F9^Frob[C2]", 3}, {"F25^Frob[C2]", 5}};
  for (const auto& [name, p] : cases) {
    const auto spec = frobenius_crossed_product_spec(Field::standard_extension(p, 2), 2);
    const auto a = ctx.get(name);
    out.require(crossed_product(spec) == a, name + ": instance matches its crossed-product data");
    const auto& d = spec.coefficients;
    const LinearFunctional mu{d.basis_vector(0)};
    const auto lam = average_functional(spec, mu);
    bool invariant = true;
    for (const auto& s : spec.sigma)
      for (std::size_t j = 0; j < d.dim(); ++j) invariant = invariant && lam(s.col(j)) == lam.coords[j];
    out.require(invariant, name + ": averaged functional is G-invariant");
    out.require(verify_certificate(d, lam, Mode::Symmetric).symmetric, name + ": averaged functional is symmetric");
    out.require(lam(d.unit()) == d.field().from_int(static_cast<std::int64_t>(spec.group.order())) * mu(d.unit()),
                name + ": lambda(1) = |G| mu(1)");
    out.note(name + ": lambda = " + to_string(lam.coords));
    const auto bar = lift_functional(spec, lam);
    out.require(verify_certificate(a, bar, Mode::GradedSymmetric).passed, name + ": lifted functional certifies");
    Json c{{"algebra_hash", algebra_hash(a)}, {"instance", name}, {"mode", mode_name(Mode::GradedSymmetric)},
           {"status", verdict_status_name(VerdictStatus::Yes)}, {"gram_rank", a.dim()},
           {"witness", vector_to_json(bar.coords)}};
    out.certs.push_back(c);
  }
}

void oracle_equivalence(const Context&, Outcome& out) {
  std::size_t compared = 0;
  for (const auto& [name, a] : small_f2_corpus(4))
    for (Mode mode : {Mode::GradedSymmetric, Mode::GradedFrobenius, Mode::Symmetric, Mode::Frobenius}) {
      const GradedAlgebra b = is_graded_mode(mode) ? a : ungrade(a);
      const auto l = graded_trace_space(b, is_symmetric_mode(mode));
      if (l.dim() > 4) continue;
      const auto basis = l.basis_vectors();
      bool found = false;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) total *= 2;
      for (std::uint64_t code = 0; code < total && !found; ++code) {
        LinearFunctional lam{b.zero()};
        for (std::size_t r = 0; r < basis.size(); ++r)
          if ((code >> r) & 1) lam.coords = add(lam.coords, basis[r]);
        found = rank(gram_matrix(b, lam)) == b.dim();
      }
      ++compared;
      out.require(decide_form_existence(a, mode).yes() == found, name + " " + mode_name(mode));
    }
  out.note(std::to_string(compared) + " (algebra, mode) pairs compared");
}

void hunt_regression(const Context&, Outcome& out) {
  const auto r = hunt_counterexample(HuntParams{});
  out.require(!r.truncated, "hunt completed");
  out.require(r.non_symmetric_instances.empty(), "no non-symmetric graded division instance");
  out.require(r.no_base_field_point_instances.empty(), "no instance lacking a base-field witness");
  out.require(r.instances_tested == kHuntRegressionInstances,
              "instances_tested = " + std::to_string(kHuntRegressionInstances) + " (got " +
                  std::to_string(r.instances_tested) + ")");
  out.note(r.coverage + "; " + std::to_string(r.instances_tested) + " instances tested");
}

using Check = void (*)(const Context&, Outcome&);

const std::vector<std::pair<std::string, Check>>& checks() {
  static const std::vector<std::pair<std::string, Check>> c{
      {"commutator-dimension", commutator_dimension},
      {"matrix-commutators", matrix_commutators},
      {"scalar-extension", scalar_extension_check},
      {"char0-graded-division", char0_division},
      {"group-algebras-kCp", group_algebras},
      {"cyclic-algebras", cyclic_algebras},
      {"good-matrix-algebras", good_matrix},
      {"semisimple-closure", semisimple_closure},
      {"sweedler-center", sweedler_center},
      {"trivial-extension-center", trivial_extension_center},
      {"center-theorem", center_theorem},
      {"averaging-lifting", averaging_lifting},
      {"oracle-equivalence", oracle_equivalence},
      {"hunt-regression", hunt_regression},
  };
  return c;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, c] : checks()) out.push_back(n);
    return out;
  }();
  return names;
}

const std::vector<std::string>& suite_instance_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, b] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

std::vector<SuiteEntry> run_suite(const SuiteOptions& opts) {
  if (!opts.only.empty() &&
      std::find(suite_names().begin(), suite_names().end(), opts.only) == suite_names().end())
    throw Error(ErrorKind::InvalidArgument, "unknown check '" + opts.only + "'");
  if (!opts.corrupt.empty() && !registry().count(opts.corrupt))
    throw Error(ErrorKind::InvalidArgument, "unknown instance '" + opts.corrupt + "'");
  const Context ctx{opts};
  std::vector<SuiteEntry> out;
  for (const auto& [name, check] : checks()) {
    if (!opts.only.empty() && opts.only != name) continue;
    SuiteEntry e;
    e.name = name;
    Outcome o;
    try {
      check(ctx, o);
    } catch (const std::exception& ex) {
      o.ok = false;
      o.notes.push_back(std::string("error: ") + ex.what());
    }
    e.passed = o.ok;
    for (std::size_t i = 0; i < o.notes.size(); ++i) e.detail += (i ? "; " : "") + o.notes[i];
    e.certificates = std::move(o.certs);
    out.push_back(std::move(e));
  }
  return out;
}

Json suite_to_json(const std::vector<SuiteEntry>& entries) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& e : entries) {
    passed += e.passed;
    list.push_back(
        Json{{"certificates", e.certificates}, {"detail", e.detail}, {"name", e.name}, {"passed", e.passed}});
  }
  return Json{{"checks", list}, {"passed", passed}, {"total", entries.size()}};
}

}  // namespace gradsym
