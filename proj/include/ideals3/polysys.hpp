#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ideals3/algebraic.hpp"
#include "ideals3/bipoly.hpp"

namespace ideals3 {

enum class CurveShape { WholePlane, FixedX, FixedY, RationalCurve, Unclassified };
const char* to_string(CurveShape s);

// One positive-dimensional piece of the common zero set. FixedX / FixedY carry the
// coordinate value (one component per root the field mode admits).
struct CurveComponent {
  CurveShape shape = CurveShape::Unclassified;
  BiPoly poly;  // irreducible over the base field; zero for WholePlane
  std::optional<Algebraic> value;
};

struct PlanePoint {
  Algebraic x, y;
};

struct PlaneSolution {
  BiPoly gcd;  // gcd of the input system; 1 when the zero set is finite
  std::vector<CurveComponent> families;
  std::vector<PlanePoint> points;  // isolated solutions off the families
  int discarded_y_zero = 0;
  bool infinite() const { return !families.empty(); }
};

// Common zeros of polynomials in (x, y): over Q^2 (real points of the real
// closure) in RealRational mode, over the algebraic closure of Q(i) otherwise.
PlaneSolution solve_plane_system(const std::vector<BiPoly>& polys, FieldMode mode, bool exclude_y_zero);

// Does some point of the component (other than those with y = 0 when excluded)
// lie in the zero set of every polynomial? Decided by divisibility for curves.
bool component_satisfies(const CurveComponent& c, const BiPoly& p);

}  // namespace ideals3
