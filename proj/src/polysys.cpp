#include "ideals3/polysys.hpp"

#include <cstdint>
#include <stdexcept>

#include "ideals3/factor.hpp"

namespace ideals3 {

const char* to_string(CurveShape s) {
  switch (s) {
    case CurveShape::WholePlane: return "whole-plane";
    case CurveShape::FixedX: return "fixed-x";
    case CurveShape::FixedY: return "fixed-y";
    case CurveShape::RationalCurve: return "rational-curve";
    case CurveShape::Unclassified: return "unclassified";
  }
  return "?";
}

bool component_satisfies(const CurveComponent& c, const BiPoly& p) {
  if (c.shape == CurveShape::WholePlane) return p.is_zero();
  return bipoly_divides(c.poly, p);
}

namespace {

struct AbstractPoint {
  FieldPtr field;  // null when the coordinates are base scalars
  Algebraic x, y;
};

Scalar shear_value(int k) { return Scalar((k + 1) / 2 * (k % 2 ? 1 : -1)); }

// Isolated common zeros of a system whose gcd is constant.
std::vector<AbstractPoint> finite_points(const std::vector<BiPoly>& h, FieldMode mode) {
  for (const auto& p : h)
    if (p.is_constant()) return {};
  if (h.size() < 2) throw std::logic_error("finite solve needs at least two coprime polynomials");
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next_coef = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 11) - 5;
  };
  for (int k = 0; k < 64; ++k) {
    Scalar c = shear_value(k);
    std::vector<BiPoly> hs;
    for (const auto& p : h) hs.push_back(p.shear(c));
    SPoly R;
    for (int attempt = 0; attempt < 200 && R.is_zero(); ++attempt) {
      BiPoly P, Q;
      if (attempt == 0 && hs.size() == 2) {
        P = hs[0];
        Q = hs[1];
      } else {
        for (const auto& p : hs) {
          P += p * Scalar(next_coef());
          Q += p * Scalar(next_coef());
        }
      }
      R = resultant_y_any(P, Q);
    }
    if (R.is_zero()) throw std::logic_error("no eliminating combination found");
    if (R.degree() == 0) return {};
    std::vector<AbstractPoint> pts;
    bool separating = true;
    for (const auto& f : factor_over_base(squarefree_part(R), mode).factors) {
      FieldPtr K;
      Algebraic theta;
      if (f.poly.degree() == 1) {
        theta = Algebraic(-f.poly.coeff(0));
      } else {
        K = std::make_shared<NumberField>(mode, f.poly);
        theta = Algebraic::generator(K);
      }
      UniPoly<Algebraic> g;
      for (const auto& p : hs) {
        g = poly_gcd(g, p.eval_x(theta));
        if (g.degree() == 0) break;
      }
      if (g.is_zero()) throw std::logic_error("vertical line inside a zero-dimensional system");
      if (g.degree() == 0) continue;
      g = squarefree_part(g);
      if (g.degree() >= 2) {
        separating = false;
        break;
      }
      Algebraic y0 = -g.coeff(0) / g.coeff(1);
      Algebraic x0 = theta - Algebraic(c) * y0;
      pts.push_back({K, x0, y0});
    }
    if (separating) return pts;
  }
  throw std::logic_error("no separating shear found");
}

std::vector<PlanePoint> embed(const AbstractPoint& p) {
  if (!p.field) return {{p.x, p.y}};
  std::vector<PlanePoint> out;
  for (const auto& e : embeddings(p.field)) out.push_back({p.x.rebase(e), p.y.rebase(e)});
  return out;
}

// s with s^2 = d in F[y], if any.
bool poly_sqrt(const SPoly& d, FieldMode mode, SPoly& s) {
  if (d.is_zero()) {
    s = SPoly();
    return true;
  }
  Scalar lc_root;
  if (!sqrt_in_base(d.lead(), mode, lc_root)) return false;
  SPoly acc(lc_root);
  auto parts = squarefree_decomposition(d);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int m = static_cast<int>(i) + 1;
    if (parts[i].degree() <= 0) continue;
    if (m % 2) return false;
    acc *= poly_pow(parts[i], m / 2);
  }
  if (!(acc * acc == d)) return false;
  s = acc;
  return true;
}

BiPoly strip_y_content(const BiPoly& g) {
  SPoly c = content_in_y(g);
  if (c.degree() <= 0) return g.normalized();
  return bipoly_divide(g, BiPoly::from_x_coeffs({c})).normalized();
}

// Split a squarefree polynomial of x-degree 2 into x-linear factors when its
// discriminant is a square.
std::vector<BiPoly> split_quadratic_in_x(const BiPoly& g, FieldMode mode) {
  auto c = g.x_coeffs();
  SPoly disc = c[1] * c[1] - c[2] * c[0] * Scalar(4);
  SPoly s;
  if (!poly_sqrt(disc, mode, s)) return {g};
  BiPoly base = BiPoly::from_x_coeffs({c[1], c[2] * Scalar(2)});
  BiPoly sb = BiPoly::from_x_coeffs({s});
  return {strip_y_content(base - sb), strip_y_content(base + sb)};
}

std::vector<BiPoly> split_component(const BiPoly& g, FieldMode mode) {
  if (g.degree_x() == 1 || g.degree_y() == 1) return {g};
  if (g.degree_x() == 2) return split_quadratic_in_x(g, mode);
  if (g.degree_y() == 2) {
    std::vector<BiPoly> out;
    for (const auto& p : split_quadratic_in_x(g.swap_xy(), mode)) out.push_back(p.swap_xy().normalized());
    return out;
  }
  throw std::logic_error("curve component of unsupported degree: " + g.to_string());
}

// Real-mode test: does the irreducible curve g have infinitely many real points?
bool real_points_infinite(const BiPoly& g) {
  if (g.degree_x() <= 1 || g.degree_y() <= 1) return true;
  BiPoly h = g;
  if (h.degree_x() != 2) {
    if (h.degree_y() != 2) throw std::logic_error("curve component of unsupported degree: " + g.to_string());
    h = h.swap_xy();
  }
  auto c = h.x_coeffs();
  QPoly disc = re_part(c[1] * c[1] - c[2] * c[0] * Scalar(4));
  if (disc.degree() <= 0) return sgn(disc.coeff(0)) > 0;
  auto roots = isolate_real_roots(disc);
  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.push_back(0);
  } else {
    samples.push_back(roots.front().re_lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].re_hi + roots[i + 1].re_lo) / 2);
    samples.push_back(roots.back().re_hi + 1);
  }
  for (const auto& s : samples)
    if (sgn(disc(s)) > 0) return true;
  return false;
}

void add_fixed(std::vector<CurveComponent>& fams, const SPoly& content, CurveShape shape, FieldMode mode,
               bool exclude_y_zero, int& discarded) {
  if (content.degree() <= 0) return;
  for (const auto& f : factor_over_base(content, mode).factors) {
    BiPoly poly = shape == CurveShape::FixedY ? BiPoly::from_x_coeffs({f.poly}) : BiPoly::from_y_coeffs({f.poly});
    for (auto& r : roots_of(f.poly, mode)) {
      if (shape == CurveShape::FixedY && exclude_y_zero && r.is_zero()) {
        ++discarded;
        continue;
      }
      fams.push_back({shape, poly, r});
    }
  }
}

}  // namespace

PlaneSolution solve_plane_system(const std::vector<BiPoly>& polys, FieldMode mode, bool exclude_y_zero) {
  PlaneSolution sol;
  std::vector<BiPoly> nz;
  for (const auto& p : polys)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) {
    sol.families.push_back({CurveShape::WholePlane, BiPoly(), std::nullopt});
    return sol;
  }
  BiPoly G;
  for (const auto& p : nz) G = bipoly_gcd(G, p);
  sol.gcd = G;

  std::vector<BiPoly> nonreal_curves;
  if (!G.is_constant()) {
    SPoly cy = content_in_y(G);
    BiPoly G1 = cy.degree() > 0 ? bipoly_divide(G, BiPoly::from_x_coeffs({cy})) : G;
    SPoly cx = content_in_x(G1);
    BiPoly pp = cx.degree() > 0 ? bipoly_divide(G1, BiPoly::from_y_coeffs({cx})) : G1;
    add_fixed(sol.families, cy, CurveShape::FixedY, mode, exclude_y_zero, sol.discarded_y_zero);
    add_fixed(sol.families, cx, CurveShape::FixedX, mode, exclude_y_zero, sol.discarded_y_zero);
    if (!pp.is_constant()) {
      BiPoly sqf = bipoly_divide(pp, bipoly_gcd(pp, pp.dx()));
      for (const auto& g : split_component(sqf.normalized(), mode)) {
        if (g.degree_x() == 1) {
          sol.families.push_back({CurveShape::RationalCurve, g, std::nullopt});
        } else if (mode == FieldMode::ComplexGaussian || real_points_infinite(g)) {
          sol.families.push_back({CurveShape::Unclassified, g, std::nullopt});
        } else {
          nonreal_curves.push_back(g);
        }
      }
    }
  }

  auto on_family = [&](const PlanePoint& p) {
    for (const auto& f : sol.families)
      if (f.shape == CurveShape::WholePlane || f.poly.eval(p.x, p.y).is_zero()) return true;
    return false;
  };

  // Real points of curves with only finitely many of them: singular points and
  // points where the x-leading coefficient vanishes.
  if (!nonreal_curves.empty()) {
    BiPoly prod(1);
    for (const auto& g : nonreal_curves) prod = prod * g;
    BiPoly lc = BiPoly::from_x_coeffs({prod.x_coeffs().back()});
    for (const auto& ap : finite_points({prod, prod.dx() * lc}, mode)) {
      if (ap.y.is_zero() && exclude_y_zero) {
        ++sol.discarded_y_zero;
        continue;
      }
      for (auto& p : embed(ap))
        if (!on_family(p)) sol.points.push_back(p);
    }
  }

  std::vector<BiPoly> h;
  for (const auto& p : nz) h.push_back(G.is_constant() ? p : bipoly_divide(p, G));
  for (const auto& ap : finite_points(h, mode)) {
    if (!G.is_constant() && G.eval(ap.x, ap.y).is_zero()) continue;
    if (exclude_y_zero && ap.y.is_zero()) {
      ++sol.discarded_y_zero;
      continue;
    }
    for (auto& p : embed(ap)) sol.points.push_back(p);
  }
  return sol;
}

}  // namespace ideals3
