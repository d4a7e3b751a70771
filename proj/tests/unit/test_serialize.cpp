#include <doctest.h>

#include "gradsym/construct.hpp"
#include "gradsym/serialize.hpp"

using namespace gradsym;

namespace {

Field q() { return Field::rationals(); }

std::vector<GradedAlgebra> constructor_outputs() {
  const Field f3 = Field::prime(3), f2 = Field::prime(2);
  const Group c2 = Group::cyclic(2);
  return {
      scalar_algebra(q(), Group::cyclic(3)),
      group_algebra(f3, c2),
      group_algebra(q(), Group::product({2, 2})),
      group_algebra(f2, Group::dihedral(3)),
      group_algebra(f2, Group::quaternion8()),
      cyclic_algebra(3),
      quaternion_algebra(q(), q().from_int(-1), q().parse("-3/2")),
      sweedler_algebra(Field::prime(5)),
      trivial_extension(sweedler_algebra(q())),
      crossed_product(frobenius_crossed_product_spec(Field::standard_extension(3, 2), 2)),
      good_matrix_algebra({2, {0, 1}, scalar_algebra(f2, c2)}),
      matrix_algebra(Field::prime(5), 2),
      tensor_product(group_algebra(f3, c2), group_algebra(f3, c2)),
      direct_product(group_algebra(f3, c2), group_algebra(f3, c2)),
      scalar_extension(matrix_algebra(f2, 2), 2),
      field_as_algebra(Field::standard_extension(2, 3)),
      ungrade(cyclic_algebra(2)),
  };
}

}  // namespace

TEST_CASE("sha-256 test vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("field and group blocks") {
  CHECK(canonical_text(field_to_json(q())) == R"({"char":0})");
  CHECK(canonical_text(field_to_json(Field::prime(5))) == R"({"char":5,"degree":1,"modulus":[0,1]})");
  CHECK(canonical_text(field_to_json(Field::standard_extension(3, 2))) == R"({"char":3,"degree":2,"modulus":[1,0,1]})");
  for (const Field& f : {q(), Field::prime(7), Field::standard_extension(2, 3), Field::standard_extension(5, 2)})
    CHECK(field_from_json(field_to_json(f)) == f);
  CHECK(field_from_json(parse_json_text(R"({"char":2,"degree":2})")) == Field::standard_extension(2, 2));
  CHECK_THROWS_AS(field_from_json(parse_json_text(R"({"char":4})")), Error);
  CHECK_THROWS_AS(field_from_json(parse_json_text(R"({"char":2,"modulus":[1,1,1,1]})")), Error);

  for (const Group& g : {Group::cyclic(4), Group::product({2, 2}), Group::dihedral(4), Group::sym3(),
                         Group::quaternion8(), Group::from_table({{0, 1}, {1, 0}}, {"1", "s"})}) {
    const Group back = group_from_json(group_to_json(g));
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
  }
  CHECK(canonical_text(group_to_json(Group::cyclic(3))) == R"({"kind":"cyclic","params":[3]})");
}

TEST_CASE("scalars") {
  CHECK(scalar_to_json(q().parse("-3/2")) == Json("-3/2"));
  CHECK(scalar_to_json(Field::prime(7).from_int(-1)) == Json(6));
  const Field f9 = Field::standard_extension(3, 2);
  CHECK(scalar_to_json(f9.generator()) == Json::array({0, 1}));
  CHECK(scalar_from_json(f9, Json::array({0, 1})) == f9.generator());
  CHECK(scalar_from_json(q(), Json(4)) == q().from_int(4));
  CHECK_THROWS_AS(scalar_from_json(f9, Json::array({0, 1, 2})), Error);
}

TEST_CASE("every constructor output round-trips") {
  for (const auto& a : constructor_outputs()) {
    const std::string text = canonical_text(algebra_to_json(a));
    const GradedAlgebra back = parse_algebra_text(text);
    CHECK(back == a);
    CHECK(canonical_text(algebra_to_json(back)) == text);
    CHECK(algebra_hash(back) == algebra_hash(a));
  }
}

TEST_CASE("constructor blocks") {
  auto a = parse_algebra_text(R"({"constructor":"cyclic_algebra","p":3})");
  CHECK(a.dim() == 9);
  CHECK(a == cyclic_algebra(3));

  a = parse_algebra_text(R"({"constructor":"quaternion_algebra","field":{"char":0},"a":-1,"b":"-3"})");
  CHECK(a == quaternion_algebra(q(), q().from_int(-1), q().from_int(-3)));

  a = parse_algebra_text(R"({"constructor":"good_matrix_algebra","n":2,"sigmas":[0,1],
      "delta":{"constructor":"scalar_algebra","field":{"char":2},"group":{"kind":"cyclic","params":[2]}}})");
  CHECK(a == good_matrix_algebra({2, {0, 1}, scalar_algebra(Field::prime(2), Group::cyclic(2))}));

  a = parse_algebra_text(R"({"constructor":"center","of":{"constructor":"trivial_extension",
      "of":{"constructor":"sweedler_algebra","field":{"char":3}}}})");
  CHECK(a.dim() == 3);

  a = parse_algebra_text(R"({"constructor":"direct_product","factors":[
      {"constructor":"matrix_algebra","field":{"char":5},"n":2},
      {"constructor":"field_algebra","field":{"char":5,"degree":2}}]})");
  CHECK(a.dim() == 6);

  const auto cp = frobenius_crossed_product_spec(Field::standard_extension(3, 2), 2);
  Json j{{"constructor", "crossed_product"}, {"coefficients", algebra_to_json(cp.coefficients)},
         {"group", group_to_json(cp.group)}};
  j["sigma"] = Json::array();
  for (const auto& m : cp.sigma) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
    j["sigma"].push_back(rows);
  }
  j["alpha"] = Json::array();
  for (const auto& v : cp.alpha) j["alpha"].push_back(vector_to_json(v));
  CHECK(algebra_from_json(j) == crossed_product(cp));

  try {
    parse_algebra_text(R"({"constructor":"octonions"})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  CHECK(constructor_names().size() == 16);
}

TEST_CASE("raw blocks and errors") {
  const std::string f2c2 = R"({"field":{"char":2},"group":{"kind":"cyclic","params":[2]},"dim":2,
      "degrees":[0,1],"unit":[1,0],"sc":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]})";
  const auto a = parse_algebra_text(f2c2);
  CHECK(a.dim() == 2);
  CHECK(a.labels() == std::vector<std::string>{"e0", "e1"});

  // e1 e1 landing in degree g violates the grading.
  const std::string bad = R"({"field":{"char":2},"group":{"kind":"cyclic","params":[2]},"dim":2,
      "degrees":[0,1],"unit":[1,0],"sc":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,1,1]]})";
  try {
    parse_algebra_text(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(std::string(e.what()).find("(1,1,1)") != std::string::npos);
  }

  try {
    parse_algebra_text("{\n\"field\": {\"char\": 2},\n\"dim\": ,\n}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_algebra_text(R"({"field":{"char":2},"dim":1,"degrees":[0],"unit":[1]})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'sc'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_file("/nonexistent/spec.json"), Error);
}

TEST_CASE("certificates") {
  const auto h = quaternion_algebra(q(), q().from_int(-1), q().from_int(-1));
  const auto v = decide_form_existence(h, Mode::GradedSymmetric);
  Json cert = verdict_to_json(h, v);
  CHECK(cert["status"] == "yes");
  CHECK(cert["gram_rank"] == 4);
  CHECK(check_certificate(h, cert).passed);

  Json tampered = cert;
  tampered["witness"][1] = "1";
  CHECK(!check_certificate(h, tampered).passed);
  tampered = cert;
  tampered["algebra_hash"] = std::string(64, '0');
  auto chk = check_certificate(h, tampered);
  CHECK(!chk.hash_matches);
  CHECK(!chk.passed);
  CHECK(!check_certificate(ungrade(h), cert).passed);

  const auto z = parse_algebra_text(R"({"constructor":"center","of":{"constructor":"trivial_extension",
      "of":{"constructor":"sweedler_algebra","field":{"char":5}}}})");
  const auto no = decide_form_existence(z, Mode::Frobenius);
  cert = verdict_to_json(z, no);
  CHECK(cert["status"] == "no");
  CHECK(cert["refutation"] == "gram-det-identically-zero");
  CHECK(check_certificate(z, cert).passed);
  cert["status"] = "yes";
  cert["witness"] = Json::array({1, 0, 0});
  CHECK(!check_certificate(z, cert).passed);
}
