#include "ideals3/subspace.hpp"

namespace ideals3 {

const char* to_string(PlaneKind k) {
  switch (k) {
    case PlaneKind::TypeI: return "I";
    case PlaneKind::TypeII: return "II";
    case PlaneKind::TypeIII: return "III";
    case PlaneKind::TypeIV: return "IV";
  }
  return "?";
}

PlaneKind parse_plane_kind(const std::string& s) {
  if (s == "I") return PlaneKind::TypeI;
  if (s == "II") return PlaneKind::TypeII;
  if (s == "III") return PlaneKind::TypeIII;
  if (s == "IV") return PlaneKind::TypeIV;
  throw ParseError("unknown plane type '" + s + "' (expected I, II, III or IV)");
}

std::vector<Algebraic> QuotientAlgebra::reduce(const Vec3<Algebraic>& w) const {
  if (plane_) return {dot(ideal_vec_, w) / normal_scale_};
  std::vector<Algebraic> out;
  for (int j = 0; j < 3; ++j)
    if (j != pivot_) out.push_back(w[j] - w[pivot_] * ideal_vec_[j]);
  return out;
}

std::vector<Algebraic> QuotientAlgebra::coset_product(const Vec3<Algebraic>& a, const Vec3<Algebraic>& b) const {
  return reduce(product(t_, a, b));
}

void QuotientAlgebra::fill_table() {
  int d = dim();
  table_.assign(d, std::vector<std::vector<Algebraic>>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) table_[a][b] = coset_product(complement_[a], complement_[b]);
}

QuotientAlgebra quotient(const StructureTensor& t, const Line& l) {
  if (!is_ideal_line(t, l)) throw NotAnIdeal("line " + describe(l) + " is not an ideal");
  QuotientAlgebra q;
  q.t_ = t;
  q.ideal_ = describe(l);
  q.ideal_vec_ = l.dir;
  q.pivot_ = l.pivot;
  for (int j = 0; j < 3; ++j)
    if (j != l.pivot) q.complement_.push_back(basis_vector<Algebraic>(j));
  q.fill_table();
  return q;
}

QuotientAlgebra quotient(const StructureTensor& t, const Plane& p) {
  if (!is_ideal_plane(t, p)) throw NotAnIdeal("plane " + describe(p) + " is not an ideal");
  QuotientAlgebra q;
  q.t_ = t;
  q.ideal_ = describe(p);
  q.plane_ = true;
  q.ideal_vec_ = p.normal();
  int c = 0;
  switch (p.kind) {
    case PlaneKind::TypeI: c = 2; break;
    case PlaneKind::TypeII: c = 0; break;
    case PlaneKind::TypeIII: c = 1; break;
    case PlaneKind::TypeIV: c = p.x.is_zero() ? 2 : 1; break;
  }
  q.complement_.push_back(basis_vector<Algebraic>(c));
  q.normal_scale_ = q.ideal_vec_[c];
  q.fill_table();
  return q;
}

std::string describe(const Line& l) {
  return "span(" + l.dir[0].to_string() + ", " + l.dir[1].to_string() + ", " + l.dir[2].to_string() + ")";
}

std::string describe(const Plane& p) {
  std::string s = std::string("type ") + to_string(p.kind);
  if (p.kind == PlaneKind::TypeII || p.kind == PlaneKind::TypeIII) s += "(x=" + p.x.to_string() + ")";
  if (p.kind == PlaneKind::TypeIV) s += "(x=" + p.x.to_string() + ", y=" + p.y.to_string() + ")";
  return s;
}

}  // namespace ideals3
