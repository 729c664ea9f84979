#include "ideals3/onedim.hpp"

#include "ideals3/polysys.hpp"

namespace ideals3 {

namespace {

using BVec = Vec3<BiPoly>;

BVec apply_poly(const Mat3<Scalar>& m, const BVec& u) {
  BVec r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m[i][j].is_zero()) r[i] += u[j] * m[i][j];
  return r;
}

// The 18 minors of (M u, u) over the six matrices, as polynomials in the chart coordinates.
std::vector<BiPoly> chart_minors(const StructureTensor& t, const BVec& u) {
  std::vector<BiPoly> out;
  for (const auto& m : structure_matrices(t)) {
    BVec w = apply_poly(m, u);
    out.push_back(w[0] * u[1] - w[1] * u[0]);
    out.push_back(w[0] * u[2] - w[2] * u[0]);
    out.push_back(w[1] * u[2] - w[2] * u[1]);
  }
  return out;
}

Vec3<Algebraic> kernel_pair_first(const Vec3<Algebraic>& n, Vec3<Algebraic>& second) {
  // Two independent vectors orthogonal (bilinearly) to n.
  int p = 0;
  while (is_zero(n[p])) ++p;
  std::array<int, 2> free{};
  for (int j = 0, k = 0; j < 3; ++j)
    if (j != p) free[k++] = j;
  Vec3<Algebraic> b[2];
  for (int k = 0; k < 2; ++k) {
    b[k] = basis_vector<Algebraic>(free[k]);
    b[k][p] = -n[free[k]] / n[p];
  }
  second = b[1];
  return b[0];
}

LineFamily make_family(const Vec3<Algebraic>& n) {
  LineFamily f;
  f.normal = n;
  f.basis[0] = kernel_pair_first(n, f.basis[1]);
  f.plane = classify_plane(f.basis[0], f.basis[1]);
  return f;
}

bool on_plane(const Vec3<Algebraic>& n, const Line& l) { return dot(n, l.dir).is_zero(); }

void push_unique(std::vector<Line>& v, const Line& l) {
  for (const auto& o : v)
    if (o == l) return;
  v.push_back(l);
}

bool one_field(std::initializer_list<const Vec3<Algebraic>*> vs) {
  const NumberField* f = nullptr;
  for (const auto* v : vs)
    for (const auto& a : *v) {
      if (a.in_base()) continue;
      if (!f)
        f = a.field().get();
      else if (!f->same_as(*a.field()))
        return false;
    }
  return true;
}

// det(a, b, c) == 0. Exact inside one field; across conjugate fields the
// determinant is enclosed ever more tightly until the box leaves zero.
bool coplanar(const Vec3<Algebraic>& a, const Vec3<Algebraic>& b, const Vec3<Algebraic>& c) {
  if (one_field({&a, &b, &c})) return dot(cross(a, b), c).is_zero();
  Rational w(1, 16);
  for (int round = 0; round < 60; ++round, w /= 16) {
    Vec3<ComplexInterval> A, B, C;
    for (int i = 0; i < 3; ++i) {
      A[i] = enclose(a[i], w);
      B[i] = enclose(b[i], w);
      C[i] = enclose(c[i], w);
    }
    ComplexInterval d = A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
                        A[2] * (B[0] * C[1] - B[1] * C[0]);
    if (!d.contains_zero()) return false;
  }
  return true;  // not separated from zero; treated as coplanar
}

Algebraic coeff_alg(const BiPoly& p, int i, int j) { return Algebraic(p.coeff(i, j)); }

}  // namespace

OneDimEnumeration enumerate_onedim(const StructureTensor& t) {
  OneDimEnumeration out;
  FieldMode mode = t.mode();
  std::optional<Vec3<Algebraic>> normal;
  auto set_normal = [&](const Vec3<Algebraic>& n) {
    if (normal) {
      // same plane iff proportional
      auto c = cross(*normal, n);
      if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero()))
        throw InconsistencyDetected("two distinct planes of ideal lines without every line being an ideal");
      return;
    }
    normal = n;
  };
  std::vector<Line> found;

  // Chart (1, s, t).
  PlaneSolution a = solve_plane_system(chart_minors(t, {BiPoly(1), BiPoly::x(), BiPoly::y()}), mode, false);
  for (const auto& f : a.families) {
    if (f.shape == CurveShape::WholePlane) {
      out.outcome = OneDimEnumeration::Outcome::Infinite;
      out.whole_space = true;
      return out;
    }
    if (f.poly.total_degree() != 1 || (f.value && !f.value->in_base()))
      throw InconsistencyDetected("curve of ideal lines that is not a rational plane: " + f.poly.to_string("s", "t"));
    set_normal({coeff_alg(f.poly, 0, 0), coeff_alg(f.poly, 1, 0), coeff_alg(f.poly, 0, 1)});
  }
  for (const auto& p : a.points) push_unique(found, make_line<Algebraic>({Algebraic(1), p.x, p.y}));

  // Chart (0, 1, t).
  std::vector<SPoly> bpolys;
  for (const auto& m : chart_minors(t, {BiPoly(), BiPoly(1), BiPoly::y()})) bpolys.push_back(m.eval_x(Scalar()));
  SPoly g;
  for (const auto& p : bpolys) g = poly_gcd(g, p);
  if (g.is_zero()) {
    set_normal({Algebraic(1), Algebraic(), Algebraic()});
  } else {
    for (const auto& r : roots_of(g, mode)) push_unique(found, make_line<Algebraic>({Algebraic(), Algebraic(1), r}));
  }

  // Chart (0, 0, 1).
  Vec3<Algebraic> e3 = basis_vector<Algebraic>(2);
  if (is_ideal_line(t, make_line(e3))) push_unique(found, make_line(e3));

  if (normal) {
    out.outcome = OneDimEnumeration::Outcome::Infinite;
    out.family = make_family(*normal);
    for (const auto& b : {out.family->basis[0], out.family->basis[1], out.family->basis[0] + out.family->basis[1]})
      if (!is_ideal_line(t, make_line(b)))
        throw InconsistencyDetected("generic member of the line family fails verification");
  }
  for (const auto& l : found) {
    if (normal && on_plane(*normal, l)) continue;
    if (!is_ideal_line(t, l)) throw InconsistencyDetected("enumerated line " + describe(l) + " is not an ideal");
    out.lines.push_back({l, line_eigenvalues(t, l)});
  }
  if (!normal && !t.is_zero()) {
    if (out.lines.size() > 3) throw BoundViolation("more than three isolated one-dimensional ideals");
    if (out.lines.size() == 3) {
      const auto& L = out.lines;
      if (coplanar(L[0].line.dir, L[1].line.dir, L[2].line.dir)) throw InconsistencyDetected("three coplanar ideal lines but no line family");
    }
  }
  return out;
}

OneDimCensus onedim_census(const StructureTensor& t) { return onedim_census(t, enumerate_onedim(t)); }

OneDimCensus onedim_census(const StructureTensor& t, const OneDimEnumeration& e) {
  OneDimCensus c;
  c.ann_dim = annihilator(t).dim;
  c.infinite = e.infinite();
  c.count = static_cast<int>(e.lines.size());
  if (c.ann_dim >= 2 && !c.infinite)
    throw InconsistencyDetected("annihilator of dimension " + std::to_string(c.ann_dim) + " but finitely many line ideals");
  if (c.ann_dim == 1 && (c.infinite || c.count < 1 || c.count > 3))
    throw InconsistencyDetected("annihilator of dimension 1 requires between one and three line ideals");
  if (c.ann_dim == 0 && !c.infinite && c.count > 3)
    throw InconsistencyDetected("more than three line ideals");
  return c;
}

}  // namespace ideals3
