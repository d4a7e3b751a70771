#include "gradsym/serialize.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gradsym/construct.hpp"

namespace gradsym {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& req(const Json& j, const std::string& key) {
  if (!j.is_object()) parse_fail("expected an object holding '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) parse_fail("missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_fail("field '" + what + "' must be an integer");
  return j.get<std::int64_t>();
}

std::uint32_t as_count(const Json& j, const std::string& what) {
  const auto v = as_int(j, what);
  if (v < 0 || v > 1'000'000) parse_fail("field '" + what + "' out of range");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> as_counts(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_fail("field '" + what + "' must be a list");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_count(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) parse_fail("field '" + what + "' must be a " + std::to_string(n) + "x" +
                                                 std::to_string(n) + " matrix given by rows");
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) m.set_row(r, vector_from_json(f, j[r], n));
  return m;
}

GradedAlgebra raw_from_json(const Json& j) {
  const Field f = field_from_json(req(j, "field"));
  const Group g = j.contains("group") ? group_from_json(j.at("group")) : Group::trivial();
  AlgebraData d;
  d.field = f;
  d.group = g;
  d.dim = as_count(req(j, "dim"), "dim");
  if (d.dim == 0 || d.dim > kMaxAlgebraDim)
    throw Error(ErrorKind::DimensionTooLarge, "dim must lie in 1..64, got " + std::to_string(d.dim));
  d.degrees = as_counts(req(j, "degrees"), "degrees");
  if (d.degrees.size() != d.dim) parse_fail("field 'degrees' must have dim entries");
  for (auto deg : d.degrees)
    if (deg >= g.order()) parse_fail("field 'degrees' names an element outside the group");
  d.unit = vector_from_json(f, req(j, "unit"), d.dim);
  const Json& sc = req(j, "sc");
  if (!sc.is_array()) parse_fail("field 'sc' must be a list of [i,j,k,c]");
  StructureBuilder sb(f, d.dim);
  for (std::size_t t = 0; t < sc.size(); ++t) {
    const std::string where = "sc[" + std::to_string(t) + "]";
    const Json& e = sc[t];
    if (!e.is_array() || e.size() != 4) parse_fail("field '" + where + "' must be [i,j,k,c]");
    const auto i = as_count(e[0], where), jj = as_count(e[1], where), k = as_count(e[2], where);
    if (i >= d.dim || jj >= d.dim || k >= d.dim) parse_fail("field '" + where + "' has an index out of range");
    sb.add(i, jj, k, scalar_from_json(f, e[3]));
  }
  d.products = sb.finish();
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != d.dim) parse_fail("field 'labels' must have dim entries");
    for (const auto& s : l) {
      if (!s.is_string()) parse_fail("field 'labels' must hold strings");
      d.labels.push_back(s.get<std::string>());
    }
  }
  return GradedAlgebra::make(std::move(d));
}

using Builder = GradedAlgebra (*)(const Json&);

GradedAlgebra build_scalar(const Json& j) {
  return scalar_algebra(field_from_json(req(j, "field")),
                        j.contains("group") ? group_from_json(j.at("group")) : Group::trivial());
}
GradedAlgebra build_group_algebra(const Json& j) {
  return group_algebra(field_from_json(req(j, "field")), group_from_json(req(j, "group")));
}
GradedAlgebra build_cyclic(const Json& j) { return cyclic_algebra(as_count(req(j, "p"), "p")); }
GradedAlgebra build_quaternion(const Json& j) {
  const Field f = field_from_json(req(j, "field"));
  return quaternion_algebra(f, scalar_from_json(f, req(j, "a")), scalar_from_json(f, req(j, "b")));
}
GradedAlgebra build_sweedler(const Json& j) { return sweedler_algebra(field_from_json(req(j, "field"))); }
GradedAlgebra build_matrix(const Json& j) {
  return matrix_algebra(field_from_json(req(j, "field")), as_count(req(j, "n"), "n"));
}
GradedAlgebra build_good_matrix(const Json& j) {
  GoodGradingSpec s;
  s.n = as_count(req(j, "n"), "n");
  s.sigmas = as_counts(req(j, "sigmas"), "sigmas");
  s.delta = algebra_from_json(req(j, "delta"));
  return good_matrix_algebra(s);
}
GradedAlgebra build_field_algebra(const Json& j) {
  const std::string var = j.contains("var") ? j.at("var").get<std::string>() : "t";
  return field_as_algebra(field_from_json(req(j, "field")), var);
}
GradedAlgebra build_frobenius_cp(const Json& j) {
  return crossed_product(frobenius_crossed_product_spec(field_from_json(req(j, "field")), as_count(req(j, "n"), "n")));
}
GradedAlgebra build_crossed_product(const Json& j) {
  CrossedProductSpec s;
  s.coefficients = algebra_from_json(req(j, "coefficients"));
  s.group = group_from_json(req(j, "group"));
  const Field& f = s.coefficients.field();
  const std::size_t n = s.coefficients.dim(), order = s.group.order();
  const Json& sig = req(j, "sigma");
  if (!sig.is_array() || sig.size() != order) parse_fail("field 'sigma' must list one matrix per group element");
  for (std::size_t g = 0; g < order; ++g)
    s.sigma.push_back(matrix_from_json(f, sig[g], n, "sigma[" + std::to_string(g) + "]"));
  const Json& al = req(j, "alpha");
  if (!al.is_array() || al.size() != order * order) parse_fail("field 'alpha' must list |G|^2 vectors");
  for (const auto& v : al) s.alpha.push_back(vector_from_json(f, v, n));
  return crossed_product(s);
}
GradedAlgebra build_trivial_extension(const Json& j) { return trivial_extension(algebra_from_json(req(j, "of"))); }
GradedAlgebra build_ungrade(const Json& j) { return ungrade(algebra_from_json(req(j, "of"))); }
GradedAlgebra build_center(const Json& j) {
  const auto a = algebra_from_json(req(j, "of"));
  return subspace_algebra(a, center(a));
}
GradedAlgebra build_scalar_extension(const Json& j) {
  return scalar_extension(algebra_from_json(req(j, "of")), as_count(req(j, "m"), "m"));
}
std::pair<GradedAlgebra, GradedAlgebra> two_factors(const Json& j) {
  const Json& fs = req(j, "factors");
  if (!fs.is_array() || fs.size() != 2) parse_fail("field 'factors' must hold two algebras");
  return {algebra_from_json(fs[0]), algebra_from_json(fs[1])};
}
GradedAlgebra build_direct_product(const Json& j) {
  auto [a, b] = two_factors(j);
  return direct_product(a, b);
}
GradedAlgebra build_tensor_product(const Json& j) {
  auto [a, b] = two_factors(j);
  return tensor_product(a, b);
}

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> b{
      {"center", build_center},
      {"crossed_product", build_crossed_product},
      {"cyclic_algebra", build_cyclic},
      {"direct_product", build_direct_product},
      {"field_algebra", build_field_algebra},
      {"frobenius_crossed_product", build_frobenius_cp},
      {"good_matrix_algebra", build_good_matrix},
      {"group_algebra", build_group_algebra},
      {"matrix_algebra", build_matrix},
      {"quaternion_algebra", build_quaternion},
      {"scalar_algebra", build_scalar},
      {"scalar_extension", build_scalar_extension},
      {"sweedler_algebra", build_sweedler},
      {"tensor_product", build_tensor_product},
      {"trivial_extension", build_trivial_extension},
      {"ungrade", build_ungrade},
  };
  return b;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

Json field_to_json(const Field& f) {
  if (!f.is_finite()) return Json{{"char", 0}};
  Json mod = Json::array();
  if (f.degree() == 1) {
    mod = {0, 1};
  } else {
    for (auto c : f.modulus()) mod.push_back(c);
  }
  return Json{{"char", f.characteristic()}, {"degree", f.degree()}, {"modulus", mod}};
}

Field field_from_json(const Json& j) {
  const auto p = as_count(req(j, "char"), "char");
  if (p == 0) {
    if (j.contains("modulus") || (j.contains("degree") && as_int(j.at("degree"), "degree") != 1))
      parse_fail("the rational field takes no modulus");
    return Field::rationals();
  }
  if (!j.contains("modulus")) {
    const auto n = j.contains("degree") ? as_count(j.at("degree"), "degree") : 1u;
    return n == 1 ? Field::prime(p) : Field::standard_extension(p, n);
  }
  const Json& m = j.at("modulus");
  if (!m.is_array() || m.size() < 2) parse_fail("field 'modulus' must list c0..cn with n >= 1");
  std::vector<std::int64_t> coeffs;
  for (const auto& c : m) coeffs.push_back(as_int(c, "modulus"));
  if (j.contains("degree") && as_count(j.at("degree"), "degree") != coeffs.size() - 1)
    parse_fail("field 'degree' disagrees with the modulus");
  return Field::make(p, coeffs);
}

Json group_to_json(const Group& g) {
  if (g.kind() != "table") return Json{{"kind", g.kind()}, {"params", g.params()}};
  return Json{{"kind", "table"}, {"labels", g.labels()}, {"order", g.order()}, {"table", g.table()}};
}

Group group_from_json(const Json& j) {
  const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "table";
  const auto params = j.contains("params") ? as_counts(j.at("params"), "params") : std::vector<std::uint32_t>{};
  auto one_param = [&]() {
    if (params.size() != 1) parse_fail("group kind '" + kind + "' takes one parameter");
    return params[0];
  };
  if (kind == "cyclic") return Group::cyclic(one_param());
  if (kind == "dihedral") return Group::dihedral(one_param());
  if (kind == "product") return Group::product(params);
  if (kind == "sym3") return Group::sym3();
  if (kind == "quaternion8") return Group::quaternion8();
  if (kind != "table") parse_fail("unknown group kind '" + kind + "'");
  const Json& t = req(j, "table");
  if (!t.is_array()) parse_fail("field 'table' must be a list of rows");
  std::vector<std::vector<std::uint32_t>> table;
  for (std::size_t r = 0; r < t.size(); ++r) table.push_back(as_counts(t[r], "table[" + std::to_string(r) + "]"));
  if (j.contains("order") && as_count(j.at("order"), "order") != table.size())
    parse_fail("field 'order' disagrees with the table");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  return Group::from_table(table, labels);
}

Json scalar_to_json(const Scalar& s) {
  const Field& f = s.field();
  if (!f.is_finite()) return s.rational().get_str();
  if (f.degree() == 1) return s.code();
  return s.coeffs();
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (!f.is_finite()) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (!j.is_string()) parse_fail("rational scalars are integers or strings \"a/b\"");
    return f.parse(j.get<std::string>());
  }
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (!j.is_array() || j.size() > f.degree())
    parse_fail("scalars of " + f.name() + " are integers or lists of at most " + std::to_string(f.degree()) +
               " coefficients");
  std::vector<std::int64_t> c;
  for (const auto& x : j) c.push_back(as_int(x, "scalar coefficient"));
  return f.from_coeffs(c);
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const Field& f, const Json& j, std::size_t expected_len) {
  if (!j.is_array() || j.size() != expected_len)
    parse_fail("expected a vector of length " + std::to_string(expected_len));
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

Json algebra_to_json(const GradedAlgebra& a) {
  Json sc = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j)) sc.push_back(Json::array({i, j, t.index, scalar_to_json(t.coeff)}));
  return Json{{"degrees", a.degrees()},
              {"dim", a.dim()},
              {"field", field_to_json(a.field())},
              {"group", group_to_json(a.group())},
              {"labels", a.labels()},
              {"sc", sc},
              {"unit", vector_to_json(a.unit())}};
}

GradedAlgebra algebra_from_json(const Json& j) {
  try {
    if (!j.is_object()) parse_fail("an algebra spec must be an object");
    if (!j.contains("constructor")) return raw_from_json(j);
    const Json& c = j.at("constructor");
    if (!c.is_string()) parse_fail("field 'constructor' must be a string");
    const std::string name = c.get<std::string>();
    for (const auto& [n, build] : builders())
      if (n == name) return build(j);
    parse_fail("unknown constructor '" + name + "'");
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

const std::vector<std::string>& constructor_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, b] : builders()) out.push_back(n);
    return out;
  }();
  return names;
}

std::string canonical_text(const Json& j) { return j.dump(); }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::InvalidArgument, "SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string algebra_hash(const GradedAlgebra& a) { return sha256_hex(canonical_text(algebra_to_json(a))); }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail("line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const Error& e) {
    parse_fail(path + ": " + std::string(e.what()).substr(std::string("ParseError: ").size()));
  }
}

GradedAlgebra parse_algebra_text(const std::string& text) { return algebra_from_json(parse_json_text(text)); }

GradedAlgebra parse_algebra_file(const std::string& path) { return algebra_from_json(read_json_file(path)); }

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(vector_to_json(v));
  return Json{{"basis", basis}, {"dim", s.dim()}};
}

Json division_to_json(const DivisionVerdict& v) {
  Json out{{"status", status_name(v.status)}, {"justification", v.justification}};
  if (!v.certificate.empty()) out["certificate"] = v.certificate;
  if (v.scan_size) out["scan_size"] = v.scan_size;
  if (!v.witness.empty()) out["witness"] = vector_to_json(v.witness);
  return out;
}

Json verdict_to_json(const GradedAlgebra& a, const SymmetryVerdict& v) {
  Json out{{"algebra_hash", algebra_hash(a)},
           {"dim", v.dim},
           {"gram_rank", v.gram_rank},
           {"mode", mode_name(v.mode)},
           {"status", verdict_status_name(v.status)},
           {"trace_space_dim", v.trace_space_dim}};
  if (v.witness) out["witness"] = vector_to_json(v.witness->coords);
  if (v.refutation != Refutation::None) out["refutation"] = refutation_name(v.refutation);
  if (v.status == VerdictStatus::NoOverBaseField) {
    out["extension_degree"] = v.extension_degree;
    if (v.extension_degree > 0) {
      out["extension_field"] = field_to_json(v.extension_field);
      out["extension_witness"] = v.extension_witness;
    }
  }
  if (v.division_criterion) out["division_criterion"] = *v.division_criterion;
  return out;
}

CertificateCheck check_certificate(const GradedAlgebra& a, const Json& cert) {
  CertificateCheck out;
  try {
    const std::string hash = req(cert, "algebra_hash").get<std::string>();
    out.hash_matches = hash == algebra_hash(a);
    if (!out.hash_matches) out.failures.push_back("algebra hash mismatch");
    const Mode mode = parse_mode(req(cert, "mode").get<std::string>());
    const std::string status = req(cert, "status").get<std::string>();
    const GradedAlgebra b = is_graded_mode(mode) ? a : ungrade(a);
    if (status == verdict_status_name(VerdictStatus::Yes)) {
      const LinearFunctional lam{vector_from_json(a.field(), req(cert, "witness"), a.dim())};
      const auto rep = verify_certificate(b, lam, mode);
      for (const auto& f : rep.failures) out.failures.push_back(f);
      if (cert.contains("gram_rank") && as_count(cert.at("gram_rank"), "gram_rank") != rep.gram_rank)
        out.failures.push_back("claimed gram_rank differs from the recomputed rank");
    } else {
      const auto v = decide_form_existence(a, mode);
      if (verdict_status_name(v.status) != status)
        out.failures.push_back("status '" + status + "' but recomputation gives '" + verdict_status_name(v.status) + "'");
      if (cert.contains("refutation") && cert.at("refutation").get<std::string>() != refutation_name(v.refutation))
        out.failures.push_back("refutation differs from the recomputed one");
    }
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  out.passed = out.hash_matches && out.failures.empty();
  return out;
}

}  // namespace gradsym
