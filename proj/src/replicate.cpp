#include "gradsym/replicate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "gradsym/construct.hpp"

namespace gradsym {

// ---- random corpus ----

namespace {

std::uint64_t pick(std::mt19937_64& gen, std::uint64_t n) { return gen() % n; }

std::optional<Subspace> unital_closure(const GradedAlgebra& m, std::vector<Vector> gens, std::size_t max_dim) {
  gens.push_back(m.unit());
  Subspace s = Subspace::span(m.field(), m.dim(), gens);
  while (true) {
    if (s.dim() > max_dim) return std::nullopt;
    std::vector<Vector> next = s.basis_vectors();
    const auto basis = next;
    for (const auto& x : basis)
      for (const auto& y : basis) next.push_back(m.multiply(x, y));
    Subspace t = Subspace::span(m.field(), m.dim(), next);
    if (t.dim() == s.dim()) return s;
    s = std::move(t);
  }
}

}  // namespace

std::vector<GradedAlgebra> random_algebra_corpus(const CorpusOptions& opts) {
  std::mt19937_64 gen(opts.seed);
  std::vector<GradedAlgebra> out;
  while (out.size() < opts.count) {
    const Field f = Field::prime(opts.primes[pick(gen, opts.primes.size())]);
    const std::size_t n = 2 + pick(gen, 2);
    const bool upper = pick(gen, 2) == 1;
    const std::size_t ngens = 1 + pick(gen, 2);
    const GradedAlgebra m = matrix_algebra(f, n);
    std::vector<Vector> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      Vector v = m.zero();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!upper || i <= j) v[i * n + j] = f.element(static_cast<std::uint32_t>(pick(gen, f.order())));
      gens.push_back(std::move(v));
    }
    auto s = unital_closure(m, gens, opts.max_dim);
    if (!s || s->dim() < 2) continue;
    out.push_back(subspace_algebra(m, *s, false));
  }
  return out;
}

namespace {

void add_unique(std::vector<NamedAlgebra>& out, std::string name, const GradedAlgebra& a, std::size_t max_dim) {
  if (a.dim() > max_dim) return;
  for (const auto& x : out)
    if (x.algebra == a) return;
  out.push_back({std::move(name), a});
}

}  // namespace

std::vector<NamedAlgebra> small_f2_corpus(std::size_t max_dim) {
  const Field f2 = Field::prime(2);
  const std::vector<std::pair<std::string, Group>> groups{{"1", Group::trivial()},
                                                          {"C2", Group::cyclic(2)},
                                                          {"C3", Group::cyclic(3)},
                                                          {"C4", Group::cyclic(4)},
                                                          {"C2xC2", Group::product({2, 2})}};
  std::vector<NamedAlgebra> base;
  for (const auto& [gn, g] : groups) {
    add_unique(base, "F2[" + gn + "-graded]", scalar_algebra(f2, g), max_dim);
    if (g.order() > 1) add_unique(base, "F2" + gn, group_algebra(f2, g), max_dim);
    add_unique(base, "T(F2[" + gn + "-graded])", trivial_extension(scalar_algebra(f2, g)), max_dim);
  }
  for (std::uint32_t n : {2u, 3u, 4u})
    add_unique(base, "F" + std::to_string(1u << n), field_as_algebra(Field::standard_extension(2, n)), max_dim);
  add_unique(base, "M2(F2)", matrix_algebra(f2, 2), max_dim);
  for (const auto& [gn, g] : groups)
    for (GroupElem s = 1; s < g.order(); ++s)
      add_unique(base, "M2(F2)(e," + g.label(s) + ")/" + gn, good_matrix_algebra({2, {0, s}, scalar_algebra(f2, g)}),
                 max_dim);
  add_unique(base, "T(F2C2)", trivial_extension(group_algebra(f2, Group::cyclic(2))), max_dim);
  add_unique(base, "T(F4)", trivial_extension(field_as_algebra(Field::standard_extension(2, 2))), max_dim);
  add_unique(base, "F4^Frob[C2]", crossed_product(frobenius_crossed_product_spec(Field::standard_extension(2, 2), 2)),
             max_dim);
  add_unique(base, "cyclic_algebra(2)", cyclic_algebra(2), max_dim);

  std::vector<NamedAlgebra> out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const auto& a = base[i].algebra;
      const auto& b = base[j].algebra;
      if (a.group() != b.group()) continue;
      if (a.dim() + b.dim() <= max_dim)
        add_unique(out, base[i].name + " x " + base[j].name, direct_product(a, b), max_dim);
      if (a.dim() * b.dim() <= max_dim && a.dim() > 1 && b.dim() > 1 && a.group().is_abelian())
        add_unique(out, base[i].name + " (x) " + base[j].name, tensor_product(a, b), max_dim);
    }
  const std::size_t graded = out.size();
  for (std::size_t i = 0; i < graded; ++i)
    if (out[i].algebra.group().order() > 1) add_unique(out, "ungrade(" + out[i].name + ")", ungrade(out[i].algebra), max_dim);
  return out;
}

// ---- single statements ----

bool replicate_scalar_extension(const GradedAlgebra& a, std::uint32_t m) {
  const GradedAlgebra b = scalar_extension(a, m);
  const FieldEmbedding emb(a.field(), b.field());
  std::vector<Vector> images;
  for (const auto& v : commutator_subspace(a).basis_vectors()) {
    Vector w;
    for (const auto& s : v) w.push_back(emb(s));
    images.push_back(std::move(w));
  }
  return commutator_subspace(b) == Subspace::span(b.field(), b.dim(), images);
}

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds:
      return "holds";
    case CheckStatus::Fails:
      return "fails";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "skipped";
}

CheckResult replicate_commutator_dim(const GradedAlgebra& d) {
  const GradedAlgebra u = ungrade(d);
  CheckResult r;
  const auto dv = is_graded_division(u);
  if (dv.status == DivisionVerdict::Status::No)
    throw Error(ErrorKind::NotDivision, "the algebra has a nonzero non-invertible element");
  if (dv.status == DivisionVerdict::Status::Unknown) {
    r.detail = "division property undecided: " + dv.justification;
    return r;
  }
  const std::size_t l = center(u).dim(), n = u.dim(), c = commutator_subspace(u).dim();
  r.data = Json{{"center_dim", l}, {"commutator_dim", c}, {"dim", n}, {"division_certificate", dv.certificate}};
  if (n % l != 0 || c % l != 0) {
    r.status = CheckStatus::Fails;
    r.detail = "dimensions are not multiples of the center dimension";
    return r;
  }
  r.status = c / l + 1 == n / l ? CheckStatus::Holds : CheckStatus::Fails;
  r.detail = "dim over center " + std::to_string(n / l) + ", commutator dim over center " + std::to_string(c / l);
  return r;
}

CheckResult replicate_center_theorem(const GradedAlgebra& a) {
  CheckResult r;
  const std::uint32_t p = a.field().characteristic();
  if (p != 0 && a.group().order() % p == 0) {
    r.detail = "characteristic divides |G|";
    return r;
  }
  const auto dv = is_graded_division(a);
  if (dv.status != DivisionVerdict::Status::Yes) {
    r.detail = "not certified as a graded division algebra (" + status_name(dv.status) + ")";
    return r;
  }
  const GradedAlgebra z = subspace_algebra(a, center(a));
  const auto v = decide_form_existence(z, Mode::Symmetric);
  r.status = v.yes() ? CheckStatus::Holds : CheckStatus::Fails;
  r.detail = "center of dimension " + std::to_string(z.dim()) + ": " + verdict_status_name(v.status);
  r.data = Json{{"center", algebra_to_json(z)}, {"certificate", verdict_to_json(z, v)}};
  return r;
}

// ---- hunt ----

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

Field coefficient_field(std::uint32_t p, std::uint32_t m) {
  return m == 1 ? Field::prime(p) : Field::standard_extension(p, m);
}

std::vector<std::vector<std::uint32_t>> homs_to_cyclic(const Group& g, std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::size_t n = g.order();
  std::vector<std::uint32_t> img(n, 0);
  while (true) {
    bool ok = true;
    for (GroupElem a = 0; a < n && ok; ++a)
      for (GroupElem b = 0; b < n && ok; ++b)
        if (img[g.mul(a, b)] != (img[a] + img[b]) % m) ok = false;
    if (ok) out.push_back(img);
    std::size_t pos = 1;
    while (pos < n && ++img[pos] == m) img[pos++] = 0;
    if (pos >= n) break;
  }
  return out;
}

Scalar frobenius_power(Scalar x, std::uint32_t k) {
  for (std::uint32_t i = 0; i < k; ++i) x = frobenius(x);
  return x;
}

std::vector<Scalar> alpha_value_list(const HuntParams& params, const Field& k) {
  std::vector<Scalar> out;
  if (params.alpha_values.empty()) {
    for (std::uint32_t c = 1; c < k.order(); ++c) out.push_back(k.element(c));
  } else {
    for (auto c : params.alpha_values)
      if (c > 0 && c < k.order()) out.push_back(k.element(c));
  }
  return out;
}

Vector coefficient_coords(const Scalar& x) {
  const Field f = x.field().prime_field();
  Vector v;
  for (auto c : x.coeffs()) v.push_back(f.element(c));
  return v;
}

enum class Outcome { CocycleRejected, AssociativityFailure, NotDivision, DivisionUnknown, Symmetric, NonSymmetric, NoBasePoint };

struct CandidateResult {
  Outcome outcome = Outcome::CocycleRejected;
  bool division_criterion_mismatch = false;
  bool scanned = false;
  Json record;
};

struct Decoded {
  std::vector<std::uint32_t> hom;
  std::vector<std::uint32_t> alpha_codes;  // (|G|-1)^2 entries
};

Decoded decode(const HuntBlock& block, const std::vector<Scalar>& values, std::uint64_t offset) {
  Decoded d;
  const std::uint64_t hom_index = block.alpha_choices == kSat ? 0 : offset / block.alpha_choices;
  std::uint64_t rest = block.alpha_choices == kSat ? offset : offset % block.alpha_choices;
  d.hom = block.homs[hom_index];
  const std::size_t n = block.group.order();
  for (std::size_t i = 0; i < (n - 1) * (n - 1); ++i) {
    d.alpha_codes.push_back(values[rest % values.size()].code());
    rest /= values.size();
  }
  return d;
}

Scalar alpha_of(const Field& k, const Decoded& d, std::size_t n, GroupElem g, GroupElem h) {
  if (g == 0 || h == 0) return k.one();
  return k.element(d.alpha_codes[(g - 1) * (n - 1) + (h - 1)]);
}

bool cocycle_identity(const Field& k, const Group& g, const Decoded& d) {
  const std::size_t n = g.order();
  for (GroupElem a = 1; a < n; ++a)
    for (GroupElem b = 1; b < n; ++b)
      for (GroupElem c = 1; c < n; ++c) {
        const Scalar lhs = frobenius_power(alpha_of(k, d, n, b, c), d.hom[a]) * alpha_of(k, d, n, a, g.mul(b, c));
        const Scalar rhs = alpha_of(k, d, n, a, b) * alpha_of(k, d, n, g.mul(a, b), c);
        if (lhs != rhs) return false;
      }
  return true;
}

CrossedProductSpec build_spec(const Field& k, const HuntBlock& block, const Decoded& d) {
  CrossedProductSpec s;
  s.coefficients = field_as_algebra(k);
  s.group = block.group;
  const std::size_t n = block.group.order();
  for (GroupElem g = 0; g < n; ++g)
    s.sigma.push_back(k.degree() == 1 ? Matrix::identity(k, 1) : frobenius_matrix(k, d.hom[g]));
  for (GroupElem g = 0; g < n; ++g)
    for (GroupElem h = 0; h < n; ++h) s.alpha.push_back(coefficient_coords(alpha_of(k, d, n, g, h)));
  return s;
}

constexpr std::uint64_t kMaxPosteriorScan = 20'000;

// Every nonzero homogeneous element has a nonsingular left multiplication.
bool posterior_scan(const GradedAlgebra& a, bool& ran) {
  std::uint64_t total = 0;
  for (GroupElem g = 0; g < a.group().order(); ++g) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < a.component_indices(g).size(); ++i) c = sat_mul(c, a.field().order());
    total += c;
  }
  ran = total <= kMaxPosteriorScan;
  if (!ran) return true;
  for (GroupElem g = 0; g < a.group().order(); ++g) {
    const auto idx = a.component_indices(g);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) count *= a.field().order();
    for (std::uint64_t code = 1; code < count; ++code) {
      Vector v = a.zero();
      std::uint64_t x = code;
      for (auto i : idx) {
        v[i] = a.field().element(static_cast<std::uint32_t>(x % a.field().order()));
        x /= a.field().order();
      }
      if (rank(a.left_multiplication(v)) != a.dim()) return false;
    }
  }
  return true;
}

CandidateResult evaluate_candidate(const HuntParams& params, const HuntBlock& block, std::size_t block_index,
                                   const std::vector<Scalar>& values, std::uint64_t offset) {
  CandidateResult res;
  const Field k = values.front().field();
  const Decoded d = decode(block, values, offset);
  if (params.cocycle_prefilter && !cocycle_identity(k, block.group, d)) return res;
  GradedAlgebra a;
  try {
    a = crossed_product(build_spec(k, block, d));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IncompatibleCocycleData) throw;
    res.outcome = Outcome::AssociativityFailure;
    return res;
  }
  Json rec{{"alpha", d.alpha_codes}, {"block", block_index}, {"ext_degree", block.ext_degree},
           {"group", group_to_json(block.group)}, {"offset", offset}, {"sigma", d.hom}};
  const auto dv = is_graded_division(a);
  if (dv.status == DivisionVerdict::Status::Unknown) {
    res.outcome = Outcome::DivisionUnknown;
    return res;
  }
  if (dv.status == DivisionVerdict::Status::No) {
    res.outcome = Outcome::NotDivision;
    return res;
  }
  if (!posterior_scan(a, res.scanned))
    throw Error(ErrorKind::ValidationError, "posterior scan contradicts the graded-division verdict");
  const auto v = decide_form_existence(a, Mode::GradedSymmetric);
  if (v.division_criterion && *v.division_criterion != (v.status != VerdictStatus::No)) res.division_criterion_mismatch = true;
  switch (v.status) {
    case VerdictStatus::Yes:
      res.outcome = Outcome::Symmetric;
      return res;
    case VerdictStatus::No:
      res.outcome = Outcome::NonSymmetric;
      break;
    case VerdictStatus::NoOverBaseField:
      res.outcome = Outcome::NoBasePoint;
      break;
  }
  rec["algebra"] = algebra_to_json(a);
  rec["verdict"] = verdict_to_json(a, v);
  res.record = std::move(rec);
  return res;
}

Json params_to_json(const HuntParams& p) {
  Json groups = Json::array();
  for (const auto& g : p.groups) groups.push_back(group_to_json(g));
  return Json{{"alpha_values", p.alpha_values}, {"char", p.p}, {"cocycle_prefilter", p.cocycle_prefilter},
              {"ext_degrees", p.ext_degrees}, {"groups", groups}};
}

HuntParams params_from_json(const Json& j) {
  HuntParams p;
  p.p = j.at("char").get<std::uint32_t>();
  p.ext_degrees = j.at("ext_degrees").get<std::vector<std::uint32_t>>();
  p.groups.clear();
  for (const auto& g : j.at("groups")) p.groups.push_back(group_from_json(g));
  p.alpha_values = j.at("alpha_values").get<std::vector<std::uint32_t>>();
  p.cocycle_prefilter = j.at("cocycle_prefilter").get<bool>();
  return p;
}

void absorb(HuntReport& r, const CandidateResult& c) {
  ++r.candidates_enumerated;
  switch (c.outcome) {
    case Outcome::CocycleRejected:
      ++r.cocycle_rejections;
      return;
    case Outcome::AssociativityFailure:
      ++r.associativity_failures;
      return;
    default:
      break;
  }
  ++r.instances_tested;
  if (c.outcome == Outcome::DivisionUnknown) {
    ++r.division_unknown;
    return;
  }
  if (c.outcome == Outcome::NotDivision) return;
  ++r.division_count;
  r.posterior_scans += c.scanned;
  r.division_criterion_mismatches += c.division_criterion_mismatch;
  if (c.outcome == Outcome::Symmetric) ++r.symmetric_count;
  if (c.outcome == Outcome::NonSymmetric) r.non_symmetric_instances.push_back(c.record);
  if (c.outcome == Outcome::NoBasePoint) r.no_base_field_point_instances.push_back(c.record);
}

void run_hunt(const HuntParams& params, HuntReport& r) {
  r.blocks = hunt_blocks(params);
  std::uint64_t done = 0;
  std::uint64_t b = params.start_block, off = params.start_offset;
  const unsigned workers = std::max(1u, params.workers);
  r.truncated = false;
  while (b < r.blocks.size()) {
    const auto& block = r.blocks[b];
    const auto values = alpha_value_list(params, coefficient_field(params.p, block.ext_degree));
    if (values.empty() || off >= block.candidates) {
      ++b;
      off = 0;
      continue;
    }
    if (params.budget && done >= params.budget) {
      r.truncated = true;
      break;
    }
    std::uint64_t batch = std::min<std::uint64_t>(block.candidates - off, 256ull * workers);
    if (params.budget) batch = std::min(batch, params.budget - done);
    std::vector<CandidateResult> results(batch);
    auto work = [&](unsigned w) {
      for (std::uint64_t i = w; i < batch; i += workers)
        results[i] = evaluate_candidate(params, block, b, values, off + i);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (const auto& c : results) absorb(r, c);
    done += batch;
    off += batch;
  }
  r.next_block = b;
  r.next_offset = off;
  if (!r.truncated) {
    r.next_block = r.blocks.size();
    r.next_offset = 0;
  }
  std::uint64_t total = 0;
  for (const auto& bl : r.blocks) total = total > kSat - bl.candidates ? kSat : total + bl.candidates;
  r.coverage = "enumerated " + std::to_string(r.candidates_enumerated) + " of " +
               (total == kSat ? std::string("more than 2^64") : std::to_string(total)) + " candidates in " +
               std::to_string(r.blocks.size()) + " blocks" + (r.truncated ? " (stopped by budget)" : "");
}

}  // namespace

std::vector<Group> hunt_groups(std::size_t max_order) {
  std::vector<Group> all{Group::cyclic(2),       Group::cyclic(3),        Group::product({2, 2}), Group::cyclic(4),
                         Group::cyclic(5),       Group::sym3(),           Group::cyclic(6),       Group::cyclic(7),
                         Group::product({2, 4}), Group::product({2, 2, 2}), Group::cyclic(8),     Group::dihedral(4),
                         Group::quaternion8()};
  std::vector<Group> out;
  for (auto& g : all)
    if (g.order() <= max_order) out.push_back(g);
  return out;
}

std::vector<HuntBlock> hunt_blocks(const HuntParams& params) {
  if (params.p < 2 || !is_prime(params.p)) throw Error(ErrorKind::NonPrimeCharacteristic, "hunt needs a prime");
  std::vector<HuntBlock> out;
  for (auto m : params.ext_degrees) {
    if (m < 1 || m > 3) throw Error(ErrorKind::InvalidArgument, "extension degrees must lie in 1..3");
    const Field k = coefficient_field(params.p, m);
    const std::uint64_t nvals = alpha_value_list(params, k).size();
    for (const auto& g : params.groups) {
      if ((static_cast<std::uint64_t>(m) * g.order()) % params.p != 0) continue;
      HuntBlock b;
      b.ext_degree = m;
      b.group = g;
      b.homs = homs_to_cyclic(g, m);
      b.alpha_choices = 1;
      for (std::size_t i = 0; i < (g.order() - 1) * (g.order() - 1); ++i) b.alpha_choices = sat_mul(b.alpha_choices, nvals);
      b.candidates = sat_mul(b.homs.size(), b.alpha_choices);
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::optional<CrossedProductSpec> hunt_candidate(const HuntParams& params, const HuntBlock& block,
                                                 std::uint64_t offset) {
  const Field k = coefficient_field(params.p, block.ext_degree);
  const auto values = alpha_value_list(params, k);
  const Decoded d = decode(block, values, offset);
  if (!cocycle_identity(k, block.group, d)) return std::nullopt;
  return build_spec(k, block, d);
}

HuntReport hunt_counterexample(const HuntParams& params) {
  HuntReport r;
  r.params = params_to_json(params);
  run_hunt(params, r);
  return r;
}

Json hunt_report_to_json(const HuntReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks)
    blocks.push_back(Json{{"alpha_choices", b.alpha_choices},
                          {"candidates", b.candidates},
                          {"ext_degree", b.ext_degree},
                          {"group", group_to_json(b.group)},
                          {"sigmas", b.homs}});
  return Json{{"associativity_failures", r.associativity_failures},
              {"blocks", blocks},
              {"candidates_enumerated", r.candidates_enumerated},
              {"cocycle_rejections", r.cocycle_rejections},
              {"coverage", r.coverage},
              {"division_count", r.division_count},
              {"division_unknown", r.division_unknown},
              {"instances_tested", r.instances_tested},
              {"next_block", r.next_block},
              {"next_offset", r.next_offset},
              {"no_base_field_point_instances", r.no_base_field_point_instances},
              {"non_symmetric_instances", r.non_symmetric_instances},
              {"params", r.params},
              {"posterior_scans", r.posterior_scans},
              {"division_criterion_mismatches", r.division_criterion_mismatches},
              {"symmetric_count", r.symmetric_count},
              {"truncated", r.truncated}};
}

Json hunt_checkpoint(const HuntParams& params, const HuntReport& r) {
  Json body{{"params", params_to_json(params)}, {"report", hunt_report_to_json(r)}};
  return Json{{"body", body}, {"sha256", sha256_hex(canonical_text(body))}};
}

HuntReport resume_hunt(const Json& checkpoint, std::uint64_t budget, unsigned workers) {
  HuntReport r;
  HuntParams params;
  try {
    const Json& body = checkpoint.at("body");
    if (checkpoint.at("sha256").get<std::string>() != sha256_hex(canonical_text(body)))
      throw Error(ErrorKind::HashMismatch, "checkpoint content does not match its hash");
    params = params_from_json(body.at("params"));
    const Json& rep = body.at("report");
    r.params = body.at("params");
    r.candidates_enumerated = rep.at("candidates_enumerated").get<std::uint64_t>();
    r.cocycle_rejections = rep.at("cocycle_rejections").get<std::uint64_t>();
    r.associativity_failures = rep.at("associativity_failures").get<std::uint64_t>();
    r.instances_tested = rep.at("instances_tested").get<std::uint64_t>();
    r.division_count = rep.at("division_count").get<std::uint64_t>();
    r.division_unknown = rep.at("division_unknown").get<std::uint64_t>();
    r.symmetric_count = rep.at("symmetric_count").get<std::uint64_t>();
    r.posterior_scans = rep.at("posterior_scans").get<std::uint64_t>();
    r.division_criterion_mismatches = rep.at("division_criterion_mismatches").get<std::uint64_t>();
    for (const auto& x : rep.at("non_symmetric_instances")) r.non_symmetric_instances.push_back(x);
    for (const auto& x : rep.at("no_base_field_point_instances")) r.no_base_field_point_instances.push_back(x);
    params.start_block = rep.at("next_block").get<std::uint64_t>();
    params.start_offset = rep.at("next_offset").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed checkpoint: ") + e.what());
  }
  params.budget = budget;
  params.workers = workers;
  run_hunt(params, r);
  return r;
}

}  // namespace gradsym
