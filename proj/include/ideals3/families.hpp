#pragma once
#include <string>
#include <vector>

#include "ideals3/linsys.hpp"
#include "ideals3/twodim.hpp"

namespace ideals3 {

enum class FamilyName { Zero, AllOnes, DiagonalI, DiagonalII, DiagonalIII, Dime1, TwoOneDim, Section7 };

// Parameter lists by family:
//   Dime1: w, w~, c1, c2, c3 (e3 e3 = c)
//   TwoOneDim: w111, w131, w331, w222, w232, w332, w333
//   Section7: a, b, c, d, e, f, g, k
//   the rest take none.
struct FamilySpec {
  FamilyName name = FamilyName::Zero;
  std::vector<Scalar> params;
  FieldMode mode = FieldMode::RealRational;
};

StructureTensor build(const FamilySpec& spec);
int family_param_count(FamilyName n);
const char* to_string(FamilyName n);

// CLI names: zero, all-ones, diagonal-i, diagonal-ii, diagonal-iii, dime1, two-one-dim,
// section7, section7-rank3, section7-rank4, section7-rank5. Presets fill in the parameters.
FamilySpec family_from_name(const std::string& name, const std::vector<Scalar>& params,
                            FieldMode mode = FieldMode::RealRational);
std::vector<std::string> family_names();

FamilySpec section7(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f, Scalar g, Scalar k);
FamilySpec section7_rank3();
FamilySpec section7_rank4();
FamilySpec section7_rank5();

// (T | V) of the linearized type IV system for a Section7 spec, from the tensor.
TSystem section7_T_matrix(const FamilySpec& spec);
// The same matrix written directly in the free parameters.
Matrix<Scalar> section7_symbolic_TV(const FamilySpec& spec);

}  // namespace ideals3
