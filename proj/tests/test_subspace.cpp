#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ideals3/families.hpp"
#include "ideals3/subspace.hpp"
#include "support.hpp"

using namespace ideals3;

namespace {
StructureTensor fam(FamilyName n, std::vector<Scalar> p = {}) { return build({n, std::move(p)}); }
Vec3<Scalar> v3(Scalar a, Scalar b, Scalar c) { return {a, b, c}; }
Vec3<Scalar> rand_vec(std::mt19937_64& rng) {
  return {oracle::grid_scalar(rng), oracle::grid_scalar(rng), oracle::grid_scalar(rng)};
}
Scalar q(int p, int d = 1) { return Scalar(Rational(p, d)); }
}  // namespace

TEST_CASE("classify_plane examples") {
  CHECK(classify_plane(v3(1, 0, 0), v3(0, 1, 0)) == make_plane<Scalar>(PlaneKind::TypeI));
  CHECK(classify_plane(v3(1, 0, 0), v3(0, 1, 2)) == make_plane(PlaneKind::TypeIII, q(1, 2)));
  CHECK(classify_plane(v3(1, 1, 0), v3(1, 0, 1)) == make_plane(PlaneKind::TypeIV, q(1), q(1)));
  CHECK(classify_plane(v3(0, 0, 1), v3(3, 1, 0)) == make_plane(PlaneKind::TypeII, q(3)));
  CHECK_THROWS_AS(classify_plane(v3(1, 2, 3), v3(2, 4, 6)), DependentVectors);
  CHECK_THROWS_AS(make_plane(PlaneKind::TypeIV, q(1), q(0)), InvalidParameters);
}

TEST_CASE("plane descriptor round trip and basis independence") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int n = 0; n < 400; ++n) {
    auto u = rand_vec(rng), v = rand_vec(rng);
    if (!independent(u, v)) continue;
    auto p = classify_plane(u, v);
    auto [b1, b2] = oracle::plane_basis(p.kind, p.x, p.y);
    // same span: u and v lie in span{b1, b2}
    CHECK(oracle::det3(u, b1, b2).is_zero());
    CHECK(oracle::det3(v, b1, b2).is_zero());
    CHECK(classify_plane(b1, b2) == p);
    Scalar a = oracle::grid_scalar(rng), b = oracle::grid_scalar(rng);
    auto u2 = scale(a, u) + scale(b, v), v2 = v + u;
    if (independent(u2, v2)) CHECK(classify_plane(u2, v2) == p);
    auto pb = p.basis();
    CHECK(pb.first == b1);
    CHECK(pb.second == b2);
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("is_ideal_line examples") {
  auto ones = fam(FamilyName::AllOnes);
  CHECK(is_ideal_line(ones, make_line(v3(1, 1, -2))));
  CHECK(is_ideal_line(fam(FamilyName::DiagonalIII), make_line(v3(1, 0, 0))));
  CHECK(!is_ideal_line(fam(FamilyName::DiagonalII), make_line(v3(0, 0, 1))));
  auto c = check_line(ones, v3(1, 1, -2));
  CHECK(c.ideal);
  CHECK(c.checks.size() == 6);
  auto bad = check_line(fam(FamilyName::DiagonalII), v3(0, 0, 1));
  CHECK(!bad.ideal);
}

TEST_CASE("minor test agrees with an explicit eigenvector test and with the oracle") {
  std::mt19937_64 rng(13);
  int ideals = 0;
  for (const auto& item : oracle::corpus(150)) {
    const auto& t = item.tensor;
    auto ms = structure_matrices(t);
    for (const auto& u : oracle::grid_lines()) {
      if (std::uniform_int_distribution<int>(0, 9)(rng) != 0) continue;
      auto l = make_line(u);
      bool eig = true;
      for (const auto& m : ms) {
        auto w = mat_apply(m, u);
        Scalar lam = w[l.pivot] / u[l.pivot];
        eig = eig && w == scale(lam, u);
      }
      bool got = is_ideal_line(t, l);
      CHECK(got == eig);
      CHECK(got == oracle::line_ideal(t, u));
      if (got) {
        ++ideals;
        auto lam = line_eigenvalues(t, l);
        for (int k = 0; k < 6; ++k) CHECK(mat_apply(ms[k], u) == scale(lam[k], u));
      }
    }
  }
  MESSAGE("ideal lines seen: " << ideals);
}

TEST_CASE("is_ideal_plane examples") {
  auto z = fam(FamilyName::Zero);
  CHECK(is_ideal_plane(z, make_plane<Scalar>(PlaneKind::TypeI)));
  CHECK(is_ideal_plane(z, make_plane(PlaneKind::TypeIV, q(2), q(-3))));
  auto r4 = build(section7_rank4());
  CHECK(is_ideal_plane(r4, make_plane(PlaneKind::TypeIV, q(0), q(1))));
  CHECK(is_ideal_plane(r4, make_plane(PlaneKind::TypeIV, q(1), q(1))));
  auto cert = check_plane(fam(FamilyName::DiagonalI), make_plane(PlaneKind::TypeII, q(1)));
  CHECK(!cert.ideal);
  CHECK(cert.checks.size() == 12);
  CHECK(!is_ideal_plane(fam(FamilyName::DiagonalI), make_plane(PlaneKind::TypeII, q(1))));
}

TEST_CASE("plane membership agrees with the oracle and with random products") {
  std::mt19937_64 rng(14);
  for (const auto& item : oracle::corpus(120)) {
    const auto& t = item.tensor;
    for (const auto& p : oracle::grid_planes()) {
      if (std::uniform_int_distribution<int>(0, 19)(rng) != 0 && p.kind != PlaneKind::TypeI) continue;
      bool got = is_ideal_plane(t, p);
      CHECK(got == oracle::plane_ideal(t, p));
      if (!got) continue;
      auto [u, v] = oracle::plane_basis(p.kind, p.x, p.y);
      for (int n = 0; n < 5; ++n) {
        auto w = scale(oracle::grid_scalar(rng), u) + scale(oracle::grid_scalar(rng), v);
        auto a = rand_vec(rng);
        CHECK(oracle::det3(oracle::mul(t, a, w), u, v).is_zero());
        CHECK(oracle::det3(oracle::mul(t, w, a), u, v).is_zero());
      }
    }
  }
}

TEST_CASE("ideals of T are ideals of the symmetrized algebra") {
  for (const auto& item : oracle::corpus(200)) {
    if (item.commutative) continue;
    auto sym = symmetrize(item.tensor);
    for (const auto& u : oracle::grid_lines())
      if (oracle::line_ideal(item.tensor, u)) CHECK(is_ideal_line(sym, make_line(u)));
    for (const auto& p : oracle::grid_planes())
      if (oracle::plane_ideal(item.tensor, p)) CHECK(is_ideal_plane(sym, p));
  }
}

TEST_CASE("quotient examples") {
  auto d1 = fam(FamilyName::DiagonalI);
  auto qa = quotient(d1, to_algebraic(make_line(v3(1, 0, 0))));
  REQUIRE(qa.dim() == 2);
  // complement e2, e3
  const auto& tb = qa.table();
  CHECK(tb[0][0][0] == Algebraic(1));
  CHECK(tb[0][0][1].is_zero());
  CHECK(tb[1][1][1] == Algebraic(1));
  CHECK(tb[1][1][0].is_zero());
  for (int c = 0; c < 2; ++c) {
    CHECK(tb[0][1][c].is_zero());
    CHECK(tb[1][0][c].is_zero());
  }

  auto zq = quotient(fam(FamilyName::Zero), to_algebraic(make_plane(PlaneKind::TypeIV, q(1), q(2))));
  CHECK(zq.dim() == 1);
  CHECK(zq.table()[0][0][0].is_zero());

  // the annihilator plane c1 + c2 + c3 = 0 of the all-ones algebra
  auto ones = fam(FamilyName::AllOnes);
  auto plane = classify_plane(v3(1, -1, 0), v3(0, 1, -1));
  auto oq = quotient(ones, to_algebraic(plane));
  REQUIRE(oq.dim() == 1);
  Vec3<Algebraic> c = oq.complement()[0];
  Algebraic s = c[0] + c[1] + c[2];  // the coset of c is s times the coset of e1
  CHECK(oq.table()[0][0][0] == Algebraic(3) * s);
  CHECK(oq.coset_product(to_algebraic(v3(1, 0, 0)), to_algebraic(v3(1, 0, 0))) == oq.reduce(to_algebraic(v3(3, 0, 0))));

  CHECK_THROWS_AS(quotient(d1, to_algebraic(make_plane(PlaneKind::TypeII, q(1)))), NotAnIdeal);
}

TEST_CASE("quotient complements avoid the ideal") {
  for (auto p : {make_plane<Scalar>(PlaneKind::TypeI), make_plane(PlaneKind::TypeII, q(2)), make_plane(PlaneKind::TypeIII, q(-1)),
                 make_plane(PlaneKind::TypeIV, q(0), q(1)), make_plane(PlaneKind::TypeIV, q(3), q(-2))}) {
    auto qa = quotient(fam(FamilyName::Zero), to_algebraic(p));
    auto [u, v] = p.basis();
    CHECK(!oracle::det3(to_algebraic(u), to_algebraic(v), qa.complement()[0]).is_zero());
  }
}

TEST_CASE("descriptions") {
  CHECK(describe(to_algebraic(make_line(v3(2, 2, -4)))) == "span(1, 1, -2)");
  CHECK(describe(to_algebraic(make_plane(PlaneKind::TypeIV, q(1, 2), q(1)))) == "type IV(x=1/2, y=1)");
  CHECK(std::string(to_string(parse_plane_kind("III"))) == "III");
  CHECK_THROWS_AS(parse_plane_kind("V"), ParseError);
}
