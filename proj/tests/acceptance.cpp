// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ideals3/families.hpp"
#include "ideals3/onedim.hpp"
#include "ideals3/report.hpp"
#include "ideals3/twodim.hpp"
#include "support.hpp"

using namespace ideals3;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void report(int n, const std::string& title, Outcome& o) {
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title;
  std::string d = o.detail.str();
  if (!d.empty()) std::cout << "  [" << d << "]";
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

void run(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  report(n, title, o);
}

bool has_point(const TypeIVResult& r, const Algebraic& x, const Algebraic& y) {
  for (const auto& p : r.points)
    if (p.x == x && p.y == y) return true;
  return false;
}

bool on_family(const TypeIVResult& r, const Scalar& x, const Scalar& y) {
  for (const auto& c : r.families)
    if (c.poly.is_zero() || c.poly.eval(x, y).is_zero()) return true;
  return false;
}

bool has_value(const ParamSolution& s, const Algebraic& x) {
  if (s.kind == ParamSolution::Kind::AllScalars) return true;
  for (const auto& v : s.values)
    if (v == x) return true;
  return false;
}

int iv_count(const TypeIVResult& r) { return r.kind == TypeIVResult::Kind::Infinite ? -1 : r.count(); }

bool exactly_two_section7_points(const TwoDimEnumeration& e) {
  return e.type_IV.kind == TypeIVResult::Kind::Finite && e.type_IV.count() == 2 &&
         has_point(e.type_IV, Algebraic(0), Algebraic(1)) && has_point(e.type_IV, Algebraic(1), Algebraic(1));
}

// Everything the corpus criteria need from one tensor.
struct CorpusTally {
  Outcome c7, c8, c9, c10, c11, c13;
  long verified = 0, grid_ideals = 0, quotient_checks = 0;
  int rank_hist[7] = {}, rank_violations[7] = {}, rank_skipped_inconsistent = 0;
  int k_seen[3] = {};
  int over_four_combined = 0;
};

void corpus_pass(CorpusTally& c) {
  std::mt19937_64 rng(0xacce);
  const auto grid_lines = oracle::grid_lines();
  const auto grid_planes = oracle::grid_planes();
  for (const auto& item : oracle::corpus(500)) {
    const auto& t = item.tensor;
    const std::string& lbl = item.label;
    OneDimEnumeration one;
    TwoDimEnumeration two;
    try {
      one = enumerate_onedim(t);
      onedim_census(t, one);
      two = enumerate_twodim(t);
    } catch (const BoundViolation& e) {
      c.c9.require(false, lbl + ": BoundViolation " + e.what());
      continue;
    } catch (const InconsistencyDetected& e) {
      c.c7.require(false, lbl + ": " + e.what());
      continue;
    }

    // 7: soundness of everything reported
    for (const auto& il : one.lines) {
      c.c7.require(oracle::line_ideal(t, il.line.dir) && is_ideal_line(t, il.line), lbl + " line");
      ++c.verified;
    }
    if (one.family) {
      const auto& b = one.family->basis;
      c.c7.require(oracle::line_ideal(t, b[0]) && oracle::line_ideal(t, b[1]) && oracle::line_ideal(t, b[0] + b[1]),
                   lbl + " line family");
      ++c.verified;
    }
    for (const auto& p : two.planes()) {
      c.c7.require(oracle::plane_ideal(t, p) && is_ideal_plane(t, p), lbl + " plane " + describe(p));
      ++c.verified;
    }
    for (const auto& fc : two.type_IV.families) {
      for (const auto& f : two.sis.polys) c.c7.require(component_satisfies(fc, f), lbl + " family " + describe(fc));
      if (auto s = sample_point(fc))
        c.c7.require(oracle::plane_ideal(t, make_plane(PlaneKind::TypeIV, s->x, s->y)), lbl + " family sample");
      ++c.verified;
    }

    // 8: rational grid scan
    for (const auto& u : grid_lines) {
      if (!oracle::line_ideal(t, u)) continue;
      ++c.grid_ideals;
      bool found = one.whole_space || (one.family && dot(one.family->normal, to_algebraic(u)).is_zero());
      Line l = to_algebraic(make_line(u));
      for (const auto& il : one.lines) found = found || il.line == l;
      c.c8.require(found, lbl + " missing line " + describe(l));
    }
    for (const auto& p : grid_planes) {
      if (!oracle::plane_ideal(t, p)) continue;
      ++c.grid_ideals;
      bool found = false;
      switch (p.kind) {
        case PlaneKind::TypeI: found = two.type_I; break;
        case PlaneKind::TypeII: found = has_value(two.type_II.solution, p.x); break;
        case PlaneKind::TypeIII: found = has_value(two.type_III.solution, p.x); break;
        case PlaneKind::TypeIV: found = has_point(two.type_IV, p.x, p.y) || on_family(two.type_IV, p.x, p.y); break;
      }
      c.c8.require(found, lbl + " missing plane " + describe(to_algebraic(p)));
    }

    // 9: bounds
    if (!t.is_zero()) {
      c.c9.require(one.infinite() || one.lines.size() <= 3, lbl + " more than 3 lines");
      c.c9.require(two.infinite || two.finite_total <= 4, lbl + " more than 4 planes");
      if (!one.infinite() && !two.infinite && one.lines.size() + two.finite_total > 4) ++c.over_four_combined;
    }

    // 10: rank dichotomy for commutative tensors with a consistent linear system
    if (item.commutative) {
      const auto& ts = two.type_IV.tsys;
      if (ts.rank_T != ts.rank_TV) {
        ++c.rank_skipped_inconsistent;
      } else {
        int r = ts.rank_T, n = iv_count(two.type_IV);
        ++c.rank_hist[r];
        bool ok = true;
        if (r == 1) ok = n == -1;
        if (r == 2) ok = n == 1;
        if (r == 3 || r == 6) ok = n != -1 && n <= 1;
        if (r == 4 || r == 5) ok = n != -1 && n <= 2;
        if (!ok) ++c.rank_violations[r];
        c.c10.require(ok, lbl + " rank " + std::to_string(r) + " gave " + (n < 0 ? std::string("infinite") : std::to_string(n)));
      }
    }

    // 11: K verdicts (type II directly, type III through the reordered tensor)
    for (const auto* res : {&two.type_II, &two.type_III}) {
      auto v = res->k.verdict;
      const auto& s = res->solution;
      if (v == KDiagnostic::Verdict::K1) {
        ++c.k_seen[0];
        c.c11.require(s.kind == ParamSolution::Kind::AllScalars, lbl + " K1 without infinitely many");
      } else if (v == KDiagnostic::Verdict::K2) {
        ++c.k_seen[1];
        c.c11.require(s.kind == ParamSolution::Kind::Finite && s.count() == 2, lbl + " K2 count");
      } else if (v == KDiagnostic::Verdict::K3) {
        ++c.k_seen[2];
        c.c11.require(s.kind == ParamSolution::Kind::Finite && s.count() == 1, lbl + " K3 count");
      }
    }

    // 13: quotient well-definedness for every isolated ideal
    Analysis a{t, annihilator(t), one, {}, two};
    for (const auto& ref : listed_ideals(a)) {
      QuotientAlgebra q = ref.line ? quotient(t, *ref.line) : quotient(t, *ref.plane);
      std::vector<Vec3<Algebraic>> gens;
      if (ref.line) {
        gens.push_back(ref.line->dir);
      } else {
        auto [u, v] = ref.plane->basis();
        gens = {u, v};
      }
      auto rand_vec = [&]() {
        return to_algebraic(Vec3<Scalar>{oracle::grid_scalar(rng), oracle::grid_scalar(rng), oracle::grid_scalar(rng)});
      };
      auto rand_ideal = [&]() {
        Vec3<Algebraic> w{};
        for (const auto& g : gens) w = w + scale(Algebraic(oracle::grid_scalar(rng)), g);
        return w;
      };
      auto x = rand_vec(), y = rand_vec();
      auto base = q.coset_product(x, y);
      auto rx = q.reduce(x), ry = q.reduce(y);
      std::vector<Algebraic> from_table(q.dim());
      for (int i = 0; i < q.dim(); ++i)
        for (int j = 0; j < q.dim(); ++j)
          for (int k = 0; k < q.dim(); ++k) from_table[k] = from_table[k] + rx[i] * ry[j] * q.table()[i][j][k];
      c.c13.require(from_table == base, lbl + " table disagrees with coset product for " + ref.describe());
      for (int n = 0; n < 20; ++n) {
        c.c13.require(q.coset_product(x + rand_ideal(), y + rand_ideal()) == base, lbl + " representative dependence for " + ref.describe());
        ++c.quotient_checks;
      }
    }
  }
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();

  run(1, "section7 rank-4: type IV exactly {(0,1),(1,1)}, no type I, II and III at most one each, total at most 4", [](Outcome& o) {
    auto e = enumerate_twodim(build(section7_rank4()));
    o.require(exactly_two_section7_points(e), "type IV set");
    o.require(!e.type_I, "type I present");
    o.require(e.type_II.solution.kind != ParamSolution::Kind::AllScalars && e.type_II.solution.count() <= 1, "type II");
    o.require(e.type_III.solution.kind != ParamSolution::Kind::AllScalars && e.type_III.solution.count() <= 1, "type III");
    o.require(!e.infinite && e.finite_total <= 4, "total");
    o.detail << "II=" << e.type_II.solution.count() << " III=" << e.type_III.solution.count() << " total=" << e.finite_total;
  });

  run(2, "section7 rank-5: type IV exactly {(0,1),(1,1)}", [](Outcome& o) {
    auto spec = section7_rank5();
    o.require(section7_T_matrix(spec).rank_TV == 5, "rank");
    o.require(exactly_two_section7_points(enumerate_twodim(build(spec))), "type IV set");
  });

  run(3, "section7 rank-3: type IV is the family y = 1 with a verified generic member", [](Outcome& o) {
    auto spec = section7_rank3();
    auto t = build(spec);
    o.require(section7_T_matrix(spec).rank_TV == 3, "rank");
    auto r = enumerate_twodim(t).type_IV;
    o.require(r.kind == TypeIVResult::Kind::Infinite && r.families.size() == 1, "not a single family");
    if (!o.pass) return;
    const auto& f = r.families[0];
    o.require(f.shape == CurveShape::FixedY && f.value && *f.value == Algebraic(1), "family is not y = 1");
    for (const auto& p : type_IV_equations(t).polys) o.require(component_satisfies(f, p), "symbolic check");
    auto s = sample_point(f);
    o.require(s && is_ideal_plane(t, make_plane(PlaneKind::TypeIV, s->x, s->y)), "sample");
    o.require(is_ideal_plane(t, make_plane(PlaneKind::TypeIV, Scalar(Rational(7, 5)), Scalar(1))), "x = 7/5");
    o.detail << describe(f);
  });

  run(4, "section7 with 100 random parameter draws over {-3..3} always has (0,1) and (1,1)", [](Outcome& o) {
    std::mt19937_64 rng(4);
    int infinite = 0, exact_two = 0;
    for (int n = 0; n < 100; ++n) {
      std::vector<Scalar> p;
      for (int k = 0; k < 8; ++k) p.push_back(oracle::small_scalar(rng));
      auto spec = section7(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]);
      auto t = build(spec);
      auto r = solve_type_IV(t);
      for (int x : {0, 1}) {
        o.require(is_ideal_plane(t, make_plane(PlaneKind::TypeIV, Scalar(x), Scalar(1))), "is_ideal_plane");
        o.require(has_point(r, Algebraic(x), Algebraic(1)) || on_family(r, Scalar(x), Scalar(1)), "missing point");
      }
      int rk = section7_T_matrix(spec).rank_TV;
      if (rk == 4 || rk == 5) o.require(r.kind == TypeIVResult::Kind::Finite && r.count() == 2, "rank 4/5 not exactly two");
      infinite += r.kind == TypeIVResult::Kind::Infinite;
      exact_two += r.kind == TypeIVResult::Kind::Finite && r.count() == 2;
    }
    o.detail << exact_two << " exactly two, " << infinite << " infinite";
  });

  run(5, "diagonal variants give 3/2/1 lines, all-ones is an infinite family, zero is everything", [](Outcome& o) {
    int want[3] = {3, 2, 1};
    FamilyName names[3] = {FamilyName::DiagonalI, FamilyName::DiagonalII, FamilyName::DiagonalIII};
    for (int i = 0; i < 3; ++i) {
      auto e = enumerate_onedim(build({names[i], {}}));
      o.require(!e.infinite() && static_cast<int>(e.lines.size()) == want[i], to_string(names[i]));
    }
    auto ones = enumerate_onedim(build({FamilyName::AllOnes, {}}));
    o.require(ones.infinite() && ones.family && ones.family->normal[0] == ones.family->normal[1] &&
                  ones.family->normal[1] == ones.family->normal[2],
              "all-ones family");
    auto zt = build({FamilyName::Zero, {}});
    auto z1 = enumerate_onedim(zt);
    auto z2 = enumerate_twodim(zt);
    o.require(z1.whole_space && z2.infinite && z2.type_I && z2.type_II.solution.kind == ParamSolution::Kind::AllScalars &&
                  z2.type_III.solution.kind == ParamSolution::Kind::AllScalars && z2.type_IV.kind == TypeIVResult::Kind::Infinite &&
                  annihilator(zt).dim == 3,
              "zero tensor");
  });

  run(6, "dime1: 50 draws are infinite, annihilator dimension 2 or 0 by parameter stratum", [](Outcome& o) {
    std::mt19937_64 rng(6);
    int dim2 = 0, dim0 = 0;
    for (int n = 0; n < 50; ++n) {
      Scalar w, wt, c1, c2, c3;
      if (n % 2 == 0) {  // w = w~ = 0 and e3^2 in span{e1, e2} \ {0}
        do {
          c1 = oracle::small_scalar(rng);
          c2 = oracle::small_scalar(rng);
        } while (c1.is_zero() && c2.is_zero());
      } else {  // |w| + |w~| > 0, e3^2 arbitrary
        do {
          w = oracle::small_scalar(rng);
          wt = oracle::small_scalar(rng);
        } while (w.is_zero() && wt.is_zero());
        c1 = oracle::small_scalar(rng);
        c2 = oracle::small_scalar(rng);
        c3 = oracle::small_scalar(rng);
      }
      auto t = build({FamilyName::Dime1, {w, wt, c1, c2, c3}});
      auto e = enumerate_onedim(t);
      auto census = onedim_census(t, e);
      o.require(e.infinite() && census.infinite, "not infinite");
      int want = n % 2 == 0 ? 2 : 0;
      o.require(census.ann_dim == want, "annihilator dimension " + std::to_string(census.ann_dim));
      (want == 2 ? dim2 : dim0)++;
    }
    o.detail << dim2 << " draws with dim 2, " << dim0 << " with dim 0";
  });

  CorpusTally c;
  corpus_pass(c);
  c.c7.detail << c.verified << " reported ideals verified";
  report(7, "soundness on 500 random tensors", c.c7);
  c.c8.detail << c.grid_ideals << " grid ideals found, all reported";
  report(8, "completeness against the rational grid scan", c.c8);
  c.c9.detail << c.over_four_combined << " tensors with more than 4 isolated ideals over both dimensions";
  report(9, "bounds: at most 3 lines and at most 4 planes when finite", c.c9);
  c.c10.detail << "ranks 0..6: ";
  for (int r = 0; r <= 6; ++r) c.c10.detail << c.rank_hist[r] << (r < 6 ? "/" : "");
  c.c10.detail << ", violations by rank: ";
  for (int r = 0; r <= 6; ++r) c.c10.detail << c.rank_violations[r] << (r < 6 ? "/" : "");
  c.c10.detail << ", " << c.rank_skipped_inconsistent << " skipped with rank T < rank (T|V)";
  report(10, "type IV counts follow the rank of the linearized system", c.c10);

  run(11, "K1/K2/K3 verdicts match type II counts", [&](Outcome& o) {
    StructureTensor k2;
    k2.set_symmetric(0, 0, 1, 1);
    k2.set_symmetric(0, 1, 0, 1);
    k2.set_symmetric(1, 1, 1, 1);
    auto r2 = solve_type_II(k2);
    o.require(r2.k.verdict == KDiagnostic::Verdict::K2 && r2.solution.count() == 2, "K2 example");
    StructureTensor k3;
    k3.set(2, 0, 0, 2);
    k3.set(2, 0, 1, 1);
    auto r3 = solve_type_II(k3);
    o.require(r3.k.verdict == KDiagnostic::Verdict::K3 && r3.solution.count() == 1, "K3 example");
    o.require(c.c11.pass, c.c11.detail.str());
    o.detail << "corpus verdicts K1/K2/K3: " << c.k_seen[0] << "/" << c.k_seen[1] << "/" << c.k_seen[2];
  });

  run(12, "1000 random plane classifications round-trip", [](Outcome& o) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pick(0, 3);
    auto coord = [&]() { return pick(rng) == 0 ? Scalar(0) : Scalar(Rational(num(rng), den(rng))); };
    int done = 0, kinds[4] = {};
    while (done < 1000) {
      Vec3<Scalar> u{coord(), coord(), coord()}, v{coord(), coord(), coord()};
      if (!independent(u, v)) continue;
      ++done;
      auto p = classify_plane(u, v);
      ++kinds[static_cast<int>(p.kind)];
      auto [b1, b2] = oracle::plane_basis(p.kind, p.x, p.y);
      o.require(oracle::det3(u, b1, b2).is_zero() && oracle::det3(v, b1, b2).is_zero(), "span changed");
      o.require(classify_plane(b1, b2) == p, "reclassify");
      auto u2 = u + scale(Scalar(2), v), v2 = scale(Scalar(-1), v) + u;
      o.require(classify_plane(u2, v2) == p && classify_plane(v, u) == p, "basis dependence");
    }
    o.detail << "I/II/III/IV: " << kinds[0] << "/" << kinds[1] << "/" << kinds[2] << "/" << kinds[3];
  });

  c.c13.detail << c.quotient_checks << " representative choices";
  report(13, "quotient products do not depend on representatives", c.c13);

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << " (" << secs
            << " s)" << std::endl;
  return failures ? 1 : 0;
}
