#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ideals3/families.hpp"
#include "ideals3/onedim.hpp"
#include "support.hpp"

using namespace ideals3;

namespace {
StructureTensor fam(FamilyName n, std::vector<Scalar> p = {}) { return build({n, std::move(p)}); }

bool listed(const OneDimEnumeration& e, const Vec3<Scalar>& u) {
  Line l = to_algebraic(make_line(u));
  for (const auto& il : e.lines)
    if (il.line == l) return true;
  return false;
}

bool covered(const OneDimEnumeration& e, const Vec3<Scalar>& u) {
  if (e.whole_space) return true;
  if (e.family && dot(e.family->normal, to_algebraic(u)).is_zero()) return true;
  return listed(e, u);
}

bool coplanar_triple(const std::vector<Vec3<Scalar>>& ls) {
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = a + 1; b < ls.size(); ++b)
      for (std::size_t c = b + 1; c < ls.size(); ++c)
        if (oracle::det3(ls[a], ls[b], ls[c]).is_zero()) return true;
  return false;
}
}  // namespace

TEST_CASE("examples") {
  auto ones = enumerate_onedim(fam(FamilyName::AllOnes));
  REQUIRE(ones.infinite());
  REQUIRE(ones.family);
  auto n = ones.family->normal;
  CHECK(n[0] == n[1]);
  CHECK(n[1] == n[2]);
  CHECK(!n[0].is_zero());

  auto d1 = enumerate_onedim(fam(FamilyName::DiagonalI));
  REQUIRE(!d1.infinite());
  CHECK(d1.lines.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(listed(d1, oracle::unit<Scalar>(i)));

  auto d3 = enumerate_onedim(fam(FamilyName::DiagonalIII));
  REQUIRE(!d3.infinite());
  REQUIRE(d3.lines.size() == 1);
  CHECK(listed(d3, oracle::unit<Scalar>(0)));

  auto d2 = enumerate_onedim(fam(FamilyName::DiagonalII));
  CHECK(!d2.infinite());
  CHECK(d2.lines.size() == 2);

  auto z = enumerate_onedim(fam(FamilyName::Zero));
  CHECK(z.infinite());
  CHECK(z.whole_space);
}

TEST_CASE("census") {
  auto z = onedim_census(fam(FamilyName::Zero));
  CHECK(z.ann_dim == 3);
  CHECK(z.infinite);
  auto d2 = onedim_census(fam(FamilyName::DiagonalII));
  CHECK(d2.ann_dim == 0);
  CHECK(!d2.infinite);
  CHECK(d2.count == 2);
  auto dm = onedim_census(fam(FamilyName::Dime1, {1, 0, 0, 0, 0}));
  CHECK(dm.infinite);
}

TEST_CASE("recorded eigenvalues") {
  for (const auto& item : oracle::corpus(150)) {
    auto e = enumerate_onedim(item.tensor);
    auto ms = structure_matrices(item.tensor);
    for (const auto& il : e.lines)
      for (int k = 0; k < 6; ++k) CHECK(mat_apply(ms[k], il.line.dir) == scale(il.eigenvalues[k], il.line.dir));
  }
}

TEST_CASE("soundness, rational completeness and the coplanar-triple rule on random tensors") {
  int infinite = 0, finite_lines = 0;
  for (const auto& item : oracle::corpus(500)) {
    const auto& t = item.tensor;
    auto e = enumerate_onedim(t);
    CAPTURE(item.label);
    for (const auto& il : e.lines) {
      CHECK(oracle::line_ideal(t, il.line.dir));
      CHECK(is_ideal_line(t, il.line));
    }
    if (e.family) {
      const auto& b = e.family->basis;
      CHECK(oracle::line_ideal(t, b[0]));
      CHECK(oracle::line_ideal(t, b[1]));
      CHECK(oracle::line_ideal(t, b[0] + b[1]));
      CHECK(dot(e.family->normal, b[0]).is_zero());
      CHECK(dot(e.family->normal, b[1]).is_zero());
    }
    std::vector<Vec3<Scalar>> found;
    for (const auto& u : oracle::grid_lines())
      if (oracle::line_ideal(t, u)) {
        found.push_back(u);
        CHECK_MESSAGE(covered(e, u), "missing line " << u[0] << " " << u[1] << " " << u[2]);
      }
    if (coplanar_triple(found)) CHECK(e.infinite());
    if (!e.infinite()) {
      CHECK(e.lines.size() <= 3);
      finite_lines += static_cast<int>(e.lines.size());
    } else {
      ++infinite;
    }
    CHECK_NOTHROW(onedim_census(t, e));
  }
  MESSAGE("infinite: " << infinite << ", isolated lines: " << finite_lines);
}

TEST_CASE("dime1 tensors are always infinite") {
  std::mt19937_64 rng(44);
  for (int n = 0; n < 40; ++n) {
    std::vector<Scalar> p;
    for (int k = 0; k < 5; ++k) p.push_back(oracle::small_scalar(rng));
    auto e = enumerate_onedim(fam(FamilyName::Dime1, p));
    CHECK(e.infinite());
  }
}
