#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ideals3/families.hpp"
#include "ideals3/report.hpp"
#include "support.hpp"

using namespace ideals3;

namespace {
TensorDocument fam_doc(const std::string& name, std::vector<Scalar> p = {}) {
  return {build(family_from_name(name, p)), name, "test"};
}

std::string ones_text() {
  return R"({"field_mode": "real", "name": "ones",
  "omega": [[["1","1","1"],["1","1","1"],["1","1","1"]],
            [["1","1","1"],["1","1","1"],["1","1","1"]],
            [["1","1","1"],["1","1","1"],["1","1","1"]]]})";
}

// Every ideal in a serialized report whose coordinates are plain rationals, re-checked from the text alone.
int reverify(const StructureTensor& t, const Json& rep, int& skipped) {
  int n = 0;
  auto scalar = [&](const Json& j, Scalar& out) {
    if (!j.is_string()) return false;
    out = parse_scalar(j.get<std::string>());
    return true;
  };
  for (const auto& l : rep["one_dimensional"]["lines"]) {
    Vec3<Scalar> u;
    bool ok = true;
    for (int i = 0; i < 3; ++i) ok = ok && scalar(l["direction"][i], u[i]);
    if (!ok) {
      ++skipped;
      continue;
    }
    CHECK(check_line(t, u).ideal);
    ++n;
  }
  const auto& two = rep["two_dimensional"];
  if (two["type_I"]["present"].get<bool>()) {
    CHECK(check_plane(t, make_plane<Scalar>(PlaneKind::TypeI)).ideal);
    ++n;
  }
  for (auto [key, kind] : {std::pair{"type_II", PlaneKind::TypeII}, std::pair{"type_III", PlaneKind::TypeIII}})
    for (const auto& e : two[key]["ideals"]) {
      Scalar x;
      if (!scalar(e["x"], x)) {
        ++skipped;
        continue;
      }
      CHECK(check_plane(t, make_plane(kind, x)).ideal);
      ++n;
    }
  for (const auto& e : two["type_IV"]["ideals"]) {
    Scalar x, y;
    if (!scalar(e["x"], x) || !scalar(e["y"], y)) {
      ++skipped;
      continue;
    }
    CHECK(check_plane(t, make_plane(PlaneKind::TypeIV, x, y)).ideal);
    ++n;
  }
  return n;
}
}  // namespace

TEST_CASE("scalar literals") {
  CHECK(parse_scalar("3/2") == Scalar(Rational(3, 2)));
  CHECK(parse_scalar("i") == Scalar::I());
  CHECK(parse_scalar("-i") == -Scalar::I());
  CHECK(parse_scalar("1/2+3*i") == Scalar(Rational(1, 2), Rational(3)));
  CHECK(parse_scalar("2-1/3*i") == Scalar(Rational(2), Rational(-1, 3)));
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK(scalar_json(Scalar(Rational(-1, 2))) == Json("-1/2"));
}

TEST_CASE("documents") {
  auto d = parse_tensor_document(ones_text());
  CHECK(d.name == "ones");
  CHECK(d.tensor == build({FamilyName::AllOnes, {}}));
  auto again = parse_tensor_document(tensor_document_json(d));
  CHECK(again.tensor == d.tensor);
  CHECK(again.name == d.name);

  auto c = parse_tensor_document(ones_text(), FieldMode::ComplexGaussian);
  CHECK(c.tensor.mode() == FieldMode::ComplexGaussian);

  try {
    parse_tensor_document(std::string("{\n  \"omega\": [1,\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line >= 2);
  }
  std::string short_row = ones_text();
  short_row.replace(short_row.find(R"(["1","1","1"])"), 13, R"(["1","1"])");
  try {
    parse_tensor_document(short_row);
    FAIL("expected a shape error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("omega[1][1]") != std::string::npos);
  }
  std::string bad_lit = ones_text();
  bad_lit.replace(bad_lit.find(R"("1")"), 3, R"("1/0")");
  CHECK_THROWS_AS(parse_tensor_document(bad_lit), ParseError);
  std::string complex_in_real = ones_text();
  complex_in_real.replace(complex_in_real.find(R"("1")"), 3, R"("i")");
  CHECK_THROWS_AS(parse_tensor_document(complex_in_real), ParseError);
  CHECK_NOTHROW(parse_tensor_document(complex_in_real, FieldMode::ComplexGaussian));
  CHECK_THROWS_AS(parse_tensor_document(std::string(R"({"field_mode": "real"})")), ParseError);
}

TEST_CASE("reports") {
  auto ones = parse_tensor_document(ones_text());
  auto rep = report_json(ones, analyze(ones.tensor));
  CHECK(rep["one_dimensional"]["outcome"] == "infinite");
  CHECK(rep["one_dimensional"]["family"]["kind"] == "plane");
  CHECK(rep["one_dimensional"]["family"]["verification"] == "passed");
  CHECK(rep["two_dimensional"]["type_I"]["present"] == false);
  CHECK(rep["annihilator"]["dimension"] == 2);

  auto zero = fam_doc("zero");
  auto zr = report_json(zero, analyze(zero.tensor));
  CHECK(zr["note"] == "zero product: every subspace is an ideal");
  CHECK(zr["zero_product"] == true);

  auto r4 = fam_doc("section7-rank4");
  auto a4 = analyze(r4.tensor);
  auto rr = report_json(r4, a4);
  const auto& iv = rr["two_dimensional"]["type_IV"]["ideals"];
  REQUIRE(iv.size() == 2);
  CHECK(iv[0]["x"] == "0");
  CHECK(iv[0]["y"] == "1");
  CHECK(iv[1]["x"] == "1");
  CHECK(iv[1]["y"] == "1");
  CHECK(recheck(a4));
  CHECK(rr.dump() == report_json(r4, analyze(r4.tensor)).dump());
  CHECK(report_text(r4, a4) == report_text(r4, analyze(r4.tensor)));

  auto ideals = listed_ideals(a4);
  REQUIRE(ideals.size() >= 2);
  for (const auto& ref : ideals) {
    auto q = ref.line ? quotient(r4.tensor, *ref.line) : quotient(r4.tensor, *ref.plane);
    auto qj = quotient_json(q);
    CHECK(qj["dimension"] == q.dim());
    CHECK(!quotient_text(q).empty());
  }
}

TEST_CASE("irrational parameters are reported exactly") {
  StructureTensor t;  // type II roots x^2 = 2
  t.set_symmetric(0, 0, 1, 1);
  t.set_symmetric(0, 1, 0, 2);
  t.set_symmetric(1, 1, 1, 2);
  TensorDocument doc{t, "sqrt2", "test"};
  auto a = analyze(t);
  auto rep = report_json(doc, a);
  bool saw_ext = false;
  for (const auto& e : rep["two_dimensional"]["type_II"]["ideals"]) {
    CHECK(e["verification"] == "passed");
    if (e["x"].is_object()) {
      saw_ext = true;
      CHECK(e["x"].contains("minpoly"));
      CHECK(e["x"].contains("root_region"));
      CHECK(e["x"].contains("approx"));
    }
  }
  CHECK(saw_ext);
  CHECK(recheck(a));
}

TEST_CASE("serialized reports re-verify from their text") {
  int total = 0, skipped = 0;
  for (const auto& item : oracle::corpus(120)) {
    TensorDocument doc{item.tensor, item.label, "corpus"};
    auto a = analyze(item.tensor);
    auto text = report_json(doc, a).dump(2);
    auto back = Json::parse(text);
    auto t = parse_tensor_document(back["input"]).tensor;
    CHECK(t == item.tensor);
    total += reverify(t, back, skipped);
    CHECK(recheck(a));
  }
  MESSAGE("re-verified " << total << " ideals, " << skipped << " with extension coordinates left to recheck()");
}
