#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ideals3/linsys.hpp"
#include "ideals3/polysys.hpp"
#include "ideals3/subspace.hpp"

namespace ideals3 {

// Lin{e1, e2} is an ideal iff w(i,j,3) = 0 for (i,j) != (3,3).
bool has_type_I(const StructureTensor& t);

// Per i = 1,2,3: w3i1 - x w3i2, the left quadratic, wi31 - x wi32, the right quadratic.
struct TypeIIEquations {
  std::array<SPoly, 12> eqs;
};
TypeIIEquations type_II_equations(const StructureTensor& t);

struct KDiagnostic {
  enum class Verdict { K1, K2, K3, None } verdict = Verdict::None;
  int i0 = 0;  // 1-based
  std::optional<Scalar> D1, D2;
  std::string case_tag;
  std::optional<Scalar> x0;
};
const char* to_string(KDiagnostic::Verdict v);
KDiagnostic k_diagnostic(const StructureTensor& t);

struct ParamSolution {
  enum class Kind { Empty, Finite, AllScalars } kind = Kind::Empty;
  std::vector<Algebraic> values;
  SPoly gcd;
  int count() const { return static_cast<int>(values.size()); }
};

struct TypeIIResult {
  ParamSolution solution;
  KDiagnostic k;
};
TypeIIResult solve_type_II(const StructureTensor& t);
// Through the basis reordering (e2, e3, e1); the diagnostic refers to the reordered tensor.
TypeIIResult solve_type_III(const StructureTensor& t);
// Index map sending type III of t to type II of the result.
inline constexpr std::array<int, 3> kTypeIIIPermutation{2, 0, 1};

// Monomial order of the 7 columns: x^2y, xy^2, xy, y^2, x, y, 1.
struct TypeIVEquations {
  std::array<BiPoly, 12> polys;  // A1..A3, B1..B3, C1..C3, D1..D3
  Matrix<Scalar> M;
  int rank = 0;
};
TypeIVEquations type_IV_equations(const StructureTensor& t);

// Linearized commutative system in x1..x6 = (x^2y, xy, x, y, xy^2, y^2).
struct TSystem {
  Matrix<Scalar> T;
  std::vector<Scalar> V;
  Scalar det;
  std::array<Scalar, 6> cramer_dets{};  // det T_j
  int rank_T = 0, rank_TV = 0;
  std::optional<std::array<Scalar, 6>> candidate;  // Cramer solution when det != 0
  bool dt_holds = false;                           // candidate is of the form (x^2y, xy, x, y, xy^2, y^2)
};
// Requires a commutative tensor.
TSystem build_tsystem(const StructureTensor& t);

struct TypeIVResult {
  enum class Kind { Empty, Finite, Infinite } kind = Kind::Empty;
  std::vector<PlanePoint> points;
  std::vector<CurveComponent> families;
  bool commutative = true;
  std::string path;  // rank-mismatch, cramer, reduced
  TSystem tsys;      // of the symmetrized tensor
  int discarded_y_zero = 0;
  int count() const { return static_cast<int>(points.size()); }
};
TypeIVResult solve_type_IV(const StructureTensor& t);

// A point of the family with y != 0, when one is easy to write down.
std::optional<PlanePoint> sample_point(const CurveComponent& c);
std::string describe(const CurveComponent& c);

struct TwoDimEnumeration {
  bool type_I = false;
  TypeIIResult type_II, type_III;
  TypeIVResult type_IV;
  TypeIVEquations sis;
  bool infinite = false;
  int finite_total = 0;  // over the finite types when infinite
  std::vector<Plane> planes() const;  // all isolated planes, by type
};
TwoDimEnumeration enumerate_twodim(const StructureTensor& t);

}  // namespace ideals3
