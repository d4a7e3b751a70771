#pragma once

// Canonical JSON forms of fields, groups, algebras and certificates.
// Objects keep their keys sorted and dump without whitespace, so the
// canonical text of a value is unique.

#include <string>
#include <vector>

#include <json.hpp>

#include "gradsym/algebra.hpp"
#include "gradsym/invariants.hpp"
#include "gradsym/symmetry.hpp"

namespace gradsym {

using Json = nlohmann::json;

/// {"char":p,"degree":n,"modulus":[c0..cn]} or {"char":0}.
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// Named groups: {"kind":"cyclic","params":[n]}; others
/// {"kind":"table","labels":[...],"order":N,"table":[[...]]}.
Json group_to_json(const Group& g);
Group group_from_json(const Json& j);

/// Prime fields: integer in [0,p). Extensions: coefficient list of length n.
/// Q: string "a" or "a/b".
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, const Json& j, std::size_t expected_len);

/// Raw block: field, group, dim, degrees, unit, sc ([i,j,k,c] sorted), labels.
Json algebra_to_json(const GradedAlgebra& a);
/// Accepts raw blocks and constructor blocks ({"constructor": name, ...}).
GradedAlgebra algebra_from_json(const Json& j);

std::string canonical_text(const Json& j);
std::string sha256_hex(const std::string& data);
/// SHA-256 of the canonical raw block.
std::string algebra_hash(const GradedAlgebra& a);

/// Throws ParseError naming the line on malformed input.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
GradedAlgebra parse_algebra_text(const std::string& text);
GradedAlgebra parse_algebra_file(const std::string& path);

/// Constructor names understood by algebra_from_json.
const std::vector<std::string>& constructor_names();

Json subspace_to_json(const Subspace& s);
Json division_to_json(const DivisionVerdict& v);
Json verdict_to_json(const GradedAlgebra& a, const SymmetryVerdict& v);

struct CertificateCheck {
  bool hash_matches = false;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Recomputes the hash; Yes certificates re-run verify_certificate on the
/// witness, other statuses are re-derived with decide_form_existence.
CertificateCheck check_certificate(const GradedAlgebra& a, const Json& cert);

}  // namespace gradsym
