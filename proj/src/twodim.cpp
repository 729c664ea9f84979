#include "ideals3/twodim.hpp"

#include <cmath>

namespace ideals3 {

namespace {

// 1-based accessor.
struct W {
  const StructureTensor& t;
  Scalar operator()(int i, int j, int k) const { return t(i - 1, j - 1, k - 1); }
};

SPoly poly(std::initializer_list<Scalar> c) { return SPoly(std::vector<Scalar>(c)); }

bool proportional(const SPoly& a, const SPoly& b) {
  int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(a.coeff(i) * b.coeff(j) - a.coeff(j) * b.coeff(i)).is_zero()) return false;
  return true;
}

bool discriminant_admits_two(const Scalar& d, FieldMode mode) {
  if (mode == FieldMode::RealRational) return d.sign() > 0;
  return !d.is_zero();
}

bool same_algebraic(const Algebraic& a, const Algebraic& b) {
  try {
    return a == b;
  } catch (const std::logic_error&) {
    return std::abs(a.approx() - b.approx()) < 1e-12;
  }
}

bool same_point(const PlanePoint& a, const PlanePoint& b) { return same_algebraic(a.x, b.x) && same_algebraic(a.y, b.y); }

ParamSolution common_roots(const std::array<SPoly, 12>& eqs, FieldMode mode) {
  ParamSolution s;
  for (const auto& p : eqs) s.gcd = poly_gcd(s.gcd, p);
  if (s.gcd.is_zero()) {
    s.kind = ParamSolution::Kind::AllScalars;
    return s;
  }
  s.values = roots_of(s.gcd, mode);
  s.kind = s.values.empty() ? ParamSolution::Kind::Empty : ParamSolution::Kind::Finite;
  return s;
}

}  // namespace

bool has_type_I(const StructureTensor& t) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(i == 2 && j == 2) && !t(i, j, 2).is_zero()) return false;
  return true;
}

TypeIIEquations type_II_equations(const StructureTensor& t) {
  W w{t};
  TypeIIEquations e;
  for (int i = 1; i <= 3; ++i) {
    int b = 4 * (i - 1);
    e.eqs[b] = poly({w(3, i, 1), -w(3, i, 2)});
    e.eqs[b + 1] = poly({-w(2, i, 1), w(2, i, 2) - w(1, i, 1), w(1, i, 2)});
    e.eqs[b + 2] = poly({w(i, 3, 1), -w(i, 3, 2)});
    e.eqs[b + 3] = poly({-w(i, 2, 1), w(i, 2, 2) - w(i, 1, 1), w(i, 1, 2)});
  }
  return e;
}

const char* to_string(KDiagnostic::Verdict v) {
  switch (v) {
    case KDiagnostic::Verdict::K1: return "K1";
    case KDiagnostic::Verdict::K2: return "K2";
    case KDiagnostic::Verdict::K3: return "K3";
    case KDiagnostic::Verdict::None: return "none";
  }
  return "?";
}

KDiagnostic k_diagnostic(const StructureTensor& t) {
  W w{t};
  FieldMode mode = t.mode();
  auto f = type_II_equations(t);
  KDiagnostic k;

  bool all_zero = true;
  for (const auto& p : f.eqs) all_zero = all_zero && p.is_zero();
  if (all_zero) {
    k.verdict = KDiagnostic::Verdict::K1;
    return k;
  }
  auto quad_l = [&](int i) { return f.eqs[4 * (i - 1) + 1]; };
  auto quad_r = [&](int i) { return f.eqs[4 * (i - 1) + 3]; };
  auto D1 = [&](int i) {
    Scalar b = w(2, i, 2) - w(1, i, 1);
    return b * b + Scalar(4) * w(1, i, 2) * w(2, i, 1);
  };
  auto D2 = [&](int i) {
    Scalar b = w(i, 2, 2) - w(i, 1, 1);
    return b * b + Scalar(4) * w(i, 1, 2) * w(i, 2, 1);
  };

  bool linear_zero = true;
  for (int i = 1; i <= 3; ++i)
    linear_zero = linear_zero && f.eqs[4 * (i - 1)].is_zero() && f.eqs[4 * (i - 1) + 2].is_zero();
  for (int i0 = 1; i0 <= 2 && linear_zero; ++i0) {
    bool others = true;
    for (int i = 1; i <= 3; ++i)
      if (i != i0) others = others && quad_l(i).is_zero() && quad_r(i).is_zero();
    if (!others || !proportional(quad_l(i0), quad_r(i0))) continue;
    bool left = !w(1, i0, 2).is_zero() && discriminant_admits_two(D1(i0), mode);
    bool right = !w(i0, 1, 2).is_zero() && discriminant_admits_two(D2(i0), mode);
    if (left || right) {
      k.verdict = KDiagnostic::Verdict::K2;
      k.i0 = i0;
      k.D1 = D1(i0);
      k.D2 = D2(i0);
      k.case_tag = left ? "left quadratic" : "right quadratic";
      return k;
    }
  }

  auto satisfies_all = [&](const Scalar& x0) {
    for (const auto& p : f.eqs)
      if (!p(x0).is_zero()) return false;
    return true;
  };
  for (int i0 = 1; i0 <= 3; ++i0) {
    std::vector<std::pair<std::string, Scalar>> cands;
    if (!w(3, i0, 2).is_zero()) cands.push_back({"left linear", w(3, i0, 1) / w(3, i0, 2)});
    if (!w(i0, 3, 2).is_zero()) cands.push_back({"right linear", w(i0, 3, 1) / w(i0, 3, 2)});
    Scalar bl = w(2, i0, 2) - w(1, i0, 1), br = w(i0, 2, 2) - w(i0, 1, 1);
    if (!w(1, i0, 2).is_zero() && D1(i0).is_zero())
      cands.push_back({"left double root", -bl / (Scalar(2) * w(1, i0, 2))});
    if (!w(i0, 1, 2).is_zero() && D2(i0).is_zero())
      cands.push_back({"right double root", -br / (Scalar(2) * w(i0, 1, 2))});
    if (w(1, i0, 2).is_zero() && !bl.is_zero()) cands.push_back({"left degenerate quadratic", w(2, i0, 1) / bl});
    if (w(i0, 1, 2).is_zero() && !br.is_zero()) cands.push_back({"right degenerate quadratic", w(i0, 2, 1) / br});
    for (const auto& [tag, x0] : cands) {
      if (!satisfies_all(x0)) continue;
      k.verdict = KDiagnostic::Verdict::K3;
      k.i0 = i0;
      k.case_tag = tag;
      k.x0 = x0;
      k.D1 = D1(i0);
      k.D2 = D2(i0);
      return k;
    }
  }
  return k;
}

TypeIIResult solve_type_II(const StructureTensor& t) {
  TypeIIResult r;
  r.solution = common_roots(type_II_equations(t).eqs, t.mode());
  r.k = k_diagnostic(t);
  for (const auto& x : r.solution.values)
    if (!is_ideal_plane(t, make_plane(PlaneKind::TypeII, x)))
      throw InconsistencyDetected("type II root x=" + x.to_string() + " fails verification");
  return r;
}

TypeIIResult solve_type_III(const StructureTensor& t) {
  TypeIIResult r;
  StructureTensor p = permute_basis(t, kTypeIIIPermutation);
  r.solution = common_roots(type_II_equations(p).eqs, t.mode());
  r.k = k_diagnostic(p);
  for (const auto& x : r.solution.values)
    if (!is_ideal_plane(t, make_plane(PlaneKind::TypeIII, x)))
      throw InconsistencyDetected("type III root x=" + x.to_string() + " fails verification");
  return r;
}

TypeIVEquations type_IV_equations(const StructureTensor& t) {
  W w{t};
  TypeIVEquations e;
  for (int i = 1; i <= 3; ++i) {
    BiPoly A, B, C, D;
    A.add(2, 1, w(1, i, 2));
    A.add(1, 1, w(2, i, 2) - w(1, i, 1));
    A.add(1, 0, w(1, i, 3));
    A.add(0, 1, -w(2, i, 1));
    A.add(0, 0, w(2, i, 3));
    B.add(2, 1, w(i, 1, 2));
    B.add(1, 1, w(i, 2, 2) - w(i, 1, 1));
    B.add(1, 0, w(i, 1, 3));
    B.add(0, 1, -w(i, 2, 1));
    B.add(0, 0, w(i, 2, 3));
    C.add(1, 2, w(3, i, 2));
    C.add(1, 1, w(1, i, 2));
    C.add(0, 2, -w(3, i, 1));
    C.add(0, 1, w(3, i, 3) - w(1, i, 1));
    C.add(0, 0, w(1, i, 3));
    D.add(1, 2, w(i, 3, 2));
    D.add(1, 1, w(i, 1, 2));
    D.add(0, 2, -w(i, 3, 1));
    D.add(0, 1, w(i, 3, 3) - w(i, 1, 1));
    D.add(0, 0, w(i, 1, 3));
    e.polys[i - 1] = A;
    e.polys[i + 2] = B;
    e.polys[i + 5] = C;
    e.polys[i + 8] = D;
  }
  static const BiPoly::Key cols[7] = {{2, 1}, {1, 2}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
  e.M = Matrix<Scalar>(12, 7);
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 7; ++c) e.M(r, c) = e.polys[r].coeff(cols[c].first, cols[c].second);
  e.rank = rank(e.M);
  return e;
}

namespace {
const BiPoly::Key kUnknowns[6] = {{2, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 2}, {0, 2}};
}

TSystem build_tsystem(const StructureTensor& t) {
  if (!t.is_commutative()) throw InvalidParameters("the linearized type IV system needs a commutative tensor");
  W w{t};
  TSystem s;
  s.T = Matrix<Scalar>(6, 6);
  s.V.assign(6, Scalar());
  for (int i = 1; i <= 3; ++i) {
    int r = i - 1;
    s.T(r, 0) = w(1, i, 2);
    s.T(r, 1) = w(2, i, 2) - w(1, i, 1);
    s.T(r, 2) = w(1, i, 3);
    s.T(r, 3) = -w(2, i, 1);
    s.V[r] = -w(2, i, 3);
    r = i + 2;
    s.T(r, 1) = w(1, i, 2);
    s.T(r, 3) = w(3, i, 3) - w(1, i, 1);
    s.T(r, 4) = w(3, i, 2);
    s.T(r, 5) = -w(3, i, 1);
    s.V[r] = -w(1, i, 3);
  }
  s.det = determinant(s.T);
  for (int j = 0; j < 6; ++j) {
    Matrix<Scalar> tj = s.T;
    for (int r = 0; r < 6; ++r) tj(r, j) = s.V[r];
    s.cramer_dets[j] = determinant(tj);
  }
  s.rank_T = rank(s.T);
  s.rank_TV = rank(augment(s.T, s.V));
  if (!s.det.is_zero()) {
    std::array<Scalar, 6> x;
    for (int j = 0; j < 6; ++j) x[j] = s.cramer_dets[j] / s.det;
    s.candidate = x;
    const auto& d = s.cramer_dets;
    s.dt_holds = s.det * d[0] == d[1] * d[2] && s.det * d[1] == d[2] * d[3] && s.det * d[4] == d[1] * d[3] &&
                 s.det * d[5] == d[3] * d[3];
  }
  return s;
}

std::optional<PlanePoint> sample_point(const CurveComponent& c) {
  switch (c.shape) {
    case CurveShape::WholePlane: return PlanePoint{Algebraic(2), Algebraic(3)};
    case CurveShape::FixedY:
      if (!c.value || c.value->is_zero()) return std::nullopt;
      return PlanePoint{Algebraic(2), *c.value};
    case CurveShape::FixedX:
      if (!c.value) return std::nullopt;
      return PlanePoint{*c.value, Algebraic(2)};
    case CurveShape::RationalCurve: {
      auto xc = c.poly.x_coeffs();  // a(y) x + b(y)
      for (int k = 2; k < 40; ++k) {
        Scalar y(k % 2 ? -(k / 2) : k / 2 + 1);
        Scalar a = xc[1](y);
        if (a.is_zero()) continue;
        return PlanePoint{Algebraic(-xc[0](y) / a), Algebraic(y)};
      }
      return std::nullopt;
    }
    case CurveShape::Unclassified: return std::nullopt;
  }
  return std::nullopt;
}

std::string describe(const CurveComponent& c) {
  switch (c.shape) {
    case CurveShape::WholePlane: return "every (x, y) with y != 0";
    case CurveShape::FixedY: return "y = " + c.value->to_string() + ", x free";
    case CurveShape::FixedX: return "x = " + c.value->to_string() + ", y free (y != 0)";
    case CurveShape::RationalCurve: return "curve " + c.poly.to_string() + " = 0 (y != 0)";
    case CurveShape::Unclassified: return "unclassified curve " + c.poly.to_string() + " = 0 (y != 0)";
  }
  return "?";
}

namespace {

// Common zeros with y != 0 of the commutative system through the linearization.
TypeIVResult solve_commutative(const StructureTensor& s) {
  TypeIVResult r;
  r.tsys = build_tsystem(s);
  const TSystem& ts = r.tsys;
  if (ts.rank_T != ts.rank_TV) {
    r.path = "rank-mismatch";
    return r;
  }
  if (ts.candidate) {
    r.path = "cramer";
    const auto& x = *ts.candidate;
    if (ts.dt_holds) {
      if (x[3].is_zero())
        ++r.discarded_y_zero;
      else
        r.points.push_back({Algebraic(x[2]), Algebraic(x[3])});
    }
    return r;
  }
  r.path = "reduced";
  auto e = rref(augment(ts.T, ts.V));
  std::vector<BiPoly> polys;
  for (int row = 0; row < e.rank(); ++row) {
    BiPoly p;
    for (int j = 0; j < 6; ++j) p.add(kUnknowns[j].first, kUnknowns[j].second, e.reduced(row, j));
    p.add(0, 0, -e.reduced(row, 6));
    polys.push_back(p);
  }
  PlaneSolution sol = solve_plane_system(polys, s.mode(), true);
  r.points = sol.points;
  r.families = sol.families;
  r.discarded_y_zero = sol.discarded_y_zero;
  return r;
}

BiPoly family_product(const std::vector<CurveComponent>& fams) {
  BiPoly g(1);
  for (const auto& f : fams) {
    if (f.shape == CurveShape::WholePlane) return BiPoly();
    g = g * f.poly;
  }
  return g;
}

}  // namespace

TypeIVResult solve_type_IV(const StructureTensor& t) {
  bool comm = t.is_commutative();
  StructureTensor s = comm ? t : symmetrize(t);
  TypeIVResult r = solve_commutative(s);
  r.commutative = comm;
  auto sis = type_IV_equations(t).polys;

  if (!comm) {
    std::vector<PlanePoint> kept;
    for (const auto& p : r.points)
      if (is_ideal_plane(t, make_plane(PlaneKind::TypeIV, p.x, p.y))) kept.push_back(p);
    if (!r.families.empty()) {
      // Members of the symmetrized families that are ideals of t.
      std::vector<BiPoly> sys(sis.begin(), sis.end());
      sys.push_back(family_product(r.families));
      PlaneSolution sol = solve_plane_system(sys, t.mode(), true);
      r.families = sol.families;
      r.discarded_y_zero += sol.discarded_y_zero;
      for (const auto& p : sol.points) {
        bool dup = false;
        for (const auto& q : kept) dup = dup || same_point(p, q);
        if (!dup) kept.push_back(p);
      }
    }
    r.points = kept;
  }

  for (const auto& p : r.points)
    if (!is_ideal_plane(t, make_plane(PlaneKind::TypeIV, p.x, p.y)))
      throw InconsistencyDetected("type IV point (" + p.x.to_string() + ", " + p.y.to_string() + ") fails verification");
  for (const auto& f : r.families) {
    for (const auto& p : sis)
      if (!component_satisfies(f, p))
        throw InconsistencyDetected("type IV family " + describe(f) + " does not satisfy " + p.to_string());
    if (auto sp = sample_point(f))
      if (!is_ideal_plane(t, make_plane(PlaneKind::TypeIV, sp->x, sp->y)))
        throw InconsistencyDetected("sample member of type IV family " + describe(f) + " fails verification");
  }
  r.kind = !r.families.empty() ? TypeIVResult::Kind::Infinite
           : r.points.empty()  ? TypeIVResult::Kind::Empty
                               : TypeIVResult::Kind::Finite;
  return r;
}

std::vector<Plane> TwoDimEnumeration::planes() const {
  std::vector<Plane> out;
  if (type_I) out.push_back(make_plane<Algebraic>(PlaneKind::TypeI));
  for (const auto& x : type_II.solution.values) out.push_back(make_plane(PlaneKind::TypeII, x));
  for (const auto& x : type_III.solution.values) out.push_back(make_plane(PlaneKind::TypeIII, x));
  for (const auto& p : type_IV.points) out.push_back(make_plane(PlaneKind::TypeIV, p.x, p.y));
  return out;
}

TwoDimEnumeration enumerate_twodim(const StructureTensor& t) {
  TwoDimEnumeration e;
  e.type_I = has_type_I(t);
  if (e.type_I && !is_ideal_plane(t, make_plane<Scalar>(PlaneKind::TypeI)))
    throw InconsistencyDetected("type I read-off disagrees with verification");
  e.type_II = solve_type_II(t);
  e.type_III = solve_type_III(t);
  e.type_IV = solve_type_IV(t);
  e.sis = type_IV_equations(t);
  e.infinite = e.type_II.solution.kind == ParamSolution::Kind::AllScalars ||
               e.type_III.solution.kind == ParamSolution::Kind::AllScalars ||
               e.type_IV.kind == TypeIVResult::Kind::Infinite;
  e.finite_total = (e.type_I ? 1 : 0) + e.type_II.solution.count() + e.type_III.solution.count() + e.type_IV.count();
  auto ps = e.planes();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (ps[i].kind == ps[j].kind && same_algebraic(ps[i].x, ps[j].x) && same_algebraic(ps[i].y, ps[j].y))
        throw InconsistencyDetected("duplicate plane " + describe(ps[i]));
  if (!e.infinite && e.finite_total > 4)
    throw BoundViolation("more than four two-dimensional ideals: " + std::to_string(e.finite_total));
  return e;
}

}  // namespace ideals3
