#pragma once
#include <optional>
#include <vector>

#include "ideals3/subspace.hpp"

namespace ideals3 {

struct IdealLine {
  Line line;
  std::array<Algebraic, 6> eigenvalues;  // hat1, tilde1, hat2, tilde2, hat3, tilde3
};

// Every line inside the plane n . u = 0 is an ideal.
struct LineFamily {
  Vec3<Algebraic> normal{};
  Plane plane;
  std::array<Vec3<Algebraic>, 2> basis{};
};

struct OneDimEnumeration {
  enum class Outcome { Finite, Infinite } outcome = Outcome::Finite;
  bool whole_space = false;           // every line is an ideal
  std::optional<LineFamily> family;   // set for a plane family
  std::vector<IdealLine> lines;       // the finite list, or isolated lines off the family plane
  bool infinite() const { return outcome == Outcome::Infinite; }
};

OneDimEnumeration enumerate_onedim(const StructureTensor& t);

struct OneDimCensus {
  int ann_dim = 0;
  bool infinite = false;
  int count = 0;  // meaningful when !infinite
};

// Cross-checks the enumeration against the annihilator dimension; throws
// InconsistencyDetected when they disagree.
OneDimCensus onedim_census(const StructureTensor& t);
OneDimCensus onedim_census(const StructureTensor& t, const OneDimEnumeration& e);

}  // namespace ideals3
