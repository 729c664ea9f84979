#include "ideals3/families.hpp"

namespace ideals3 {

namespace {

void put(StructureTensor& t, int i, int j, int k, const Scalar& v) { t.set(i - 1, j - 1, k - 1, v); }
void put_sym(StructureTensor& t, int i, int j, int k, const Scalar& v) { t.set_symmetric(i - 1, j - 1, k - 1, v); }

}  // namespace

int family_param_count(FamilyName n) {
  switch (n) {
    case FamilyName::Dime1: return 5;
    case FamilyName::TwoOneDim: return 7;
    case FamilyName::Section7: return 8;
    default: return 0;
  }
}

const char* to_string(FamilyName n) {
  switch (n) {
    case FamilyName::Zero: return "zero";
    case FamilyName::AllOnes: return "all-ones";
    case FamilyName::DiagonalI: return "diagonal-i";
    case FamilyName::DiagonalII: return "diagonal-ii";
    case FamilyName::DiagonalIII: return "diagonal-iii";
    case FamilyName::Dime1: return "dime1";
    case FamilyName::TwoOneDim: return "two-one-dim";
    case FamilyName::Section7: return "section7";
  }
  return "?";
}

StructureTensor build(const FamilySpec& spec) {
  if (static_cast<int>(spec.params.size()) != family_param_count(spec.name))
    throw InvalidParameters(std::string("family ") + to_string(spec.name) + " takes " +
                            std::to_string(family_param_count(spec.name)) + " parameters, got " +
                            std::to_string(spec.params.size()));
  StructureTensor t(spec.mode);
  const auto& p = spec.params;
  switch (spec.name) {
    case FamilyName::Zero: break;
    case FamilyName::AllOnes:
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          for (int k = 1; k <= 3; ++k) put(t, i, j, k, 1);
      break;
    case FamilyName::DiagonalI:
      for (int i = 1; i <= 3; ++i) put(t, i, i, i, 1);
      break;
    case FamilyName::DiagonalII:
      put(t, 1, 1, 1, 1);
      put(t, 2, 2, 2, 1);
      put(t, 3, 3, 2, 1);
      break;
    case FamilyName::DiagonalIII:
      put(t, 1, 1, 1, 1);
      put(t, 2, 2, 3, 1);
      put(t, 3, 3, 2, 1);
      break;
    case FamilyName::Dime1:
      put(t, 3, 1, 1, p[0]);
      put(t, 3, 2, 2, p[0]);
      put(t, 1, 3, 1, p[1]);
      put(t, 2, 3, 2, p[1]);
      for (int k = 1; k <= 3; ++k) put(t, 3, 3, k, p[2 + k - 1]);
      break;
    case FamilyName::TwoOneDim:
      put(t, 1, 1, 1, p[0]);
      put_sym(t, 1, 3, 1, p[1]);
      put(t, 3, 3, 1, p[2]);
      put(t, 2, 2, 2, p[3]);
      put_sym(t, 2, 3, 2, p[4]);
      put(t, 3, 3, 2, p[5]);
      put(t, 3, 3, 3, p[6]);
      break;
    case FamilyName::Section7: {
      const Scalar &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4], &f = p[5], &g = p[6], &k = p[7];
      put_sym(t, 1, 2, 1, a);
      put(t, 2, 2, 1, b);
      put_sym(t, 2, 3, 1, c);
      put(t, 1, 1, 2, d);
      put_sym(t, 1, 2, 2, e);
      put(t, 1, 1, 3, f);
      put_sym(t, 1, 3, 1, g);
      put(t, 3, 3, 1, k);
      put_sym(t, 1, 2, 3, a);
      put(t, 2, 2, 3, b);
      put_sym(t, 2, 3, 3, c);
      put_sym(t, 1, 3, 2, -d);
      put(t, 3, 3, 2, d);
      put(t, 2, 2, 2, -e);
      put_sym(t, 2, 3, 2, -e);
      put(t, 1, 1, 1, d + e + f);
      put_sym(t, 1, 3, 3, d + e + g);
      put(t, 3, 3, 3, k - d - e);
      break;
    }
  }
  return t;
}

FamilySpec section7(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f, Scalar g, Scalar k) {
  return {FamilyName::Section7, {a, b, c, d, e, f, g, k}, FieldMode::RealRational};
}
FamilySpec section7_rank3() { return section7(1, 0, 1, 0, 0, 1, 0, 0); }
FamilySpec section7_rank4() { return section7(1, 0, -1, 1, -1, -1, 1, 0); }
// k is not fixed by the displayed example; k = 0 is the value that gives rank 5.
FamilySpec section7_rank5() { return section7(1, 0, 1, 1, -1, 0, -1, 0); }

std::vector<std::string> family_names() {
  return {"zero",        "all-ones", "diagonal-i",     "diagonal-ii",    "diagonal-iii",  "dime1",
          "two-one-dim", "section7", "section7-rank3", "section7-rank4", "section7-rank5"};
}

FamilySpec family_from_name(const std::string& name, const std::vector<Scalar>& params, FieldMode mode) {
  FamilySpec s;
  if (name == "section7-rank3" || name == "section7-rank4" || name == "section7-rank5") {
    if (!params.empty()) throw InvalidParameters("preset " + name + " takes no parameters");
    s = name == "section7-rank3" ? section7_rank3() : name == "section7-rank4" ? section7_rank4() : section7_rank5();
    s.mode = mode;
    return s;
  }
  static const std::pair<const char*, FamilyName> table[] = {
      {"zero", FamilyName::Zero},           {"all-ones", FamilyName::AllOnes},
      {"diagonal-i", FamilyName::DiagonalI}, {"diagonal-ii", FamilyName::DiagonalII},
      {"diagonal-iii", FamilyName::DiagonalIII}, {"dime1", FamilyName::Dime1},
      {"two-one-dim", FamilyName::TwoOneDim}, {"section7", FamilyName::Section7}};
  for (const auto& [n, f] : table)
    if (name == n) {
      s.name = f;
      s.params = params;
      s.mode = mode;
      if (static_cast<int>(params.size()) != family_param_count(f))
        throw InvalidParameters("family " + name + " takes " + std::to_string(family_param_count(f)) + " parameters");
      return s;
    }
  throw InvalidParameters("unknown family '" + name + "'");
}

TSystem section7_T_matrix(const FamilySpec& spec) {
  if (spec.name != FamilyName::Section7) throw InvalidParameters("not a section7 spec");
  return build_tsystem(build(spec));
}

Matrix<Scalar> section7_symbolic_TV(const FamilySpec& spec) {
  if (spec.name != FamilyName::Section7 || spec.params.size() != 8) throw InvalidParameters("not a section7 spec");
  const auto& p = spec.params;
  const Scalar &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4], &f = p[5], &g = p[6], &k = p[7];
  Scalar z;
  return Matrix<Scalar>{{d, -(d + f), f, -a, z, z, -a},
                        {e, -(a + e), a, -b, z, z, -b},
                        {-d, -(e + g), d + e + g, -c, z, z, -c},
                        {z, d, z, g - f, -d, -g, -f},
                        {z, e, z, c - a, -e, -c, -a},
                        {z, -d, z, k - d - e - g, d, -k, -d - e - g}};
}

}  // namespace ideals3
