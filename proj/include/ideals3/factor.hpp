#pragma once
#include <vector>

#include "ideals3/roots.hpp"
#include "ideals3/unipoly.hpp"

namespace ideals3 {

struct PolyFactor {
  SPoly poly;  // monic, irreducible over the base field
  int multiplicity = 1;
  std::vector<RootRegion> roots;  // filled for degree >= 2 by factor_univariate
};

struct Factorization {
  Scalar unit;
  std::vector<PolyFactor> factors;
  SPoly expand() const;
};

// Public entry point: degree <= 8, regions attached to nonlinear factors.
Factorization factor_univariate(const SPoly& p, FieldMode mode);

// Same decomposition without the degree cap or region isolation; used by the solvers.
Factorization factor_over_base(const SPoly& p, FieldMode mode);
std::vector<QPoly> factor_squarefree_rational(const QPoly& p);

}  // namespace ideals3
