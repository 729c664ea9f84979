#pragma once
#include <string>
#include <utility>
#include <vector>

#include "ideals3/algebra.hpp"

namespace ideals3 {

// A 1-dimensional subspace, scaled so the first nonzero coordinate is 1.
template <class T>
struct LineT {
  Vec3<T> dir{};
  int pivot = 0;
  friend bool operator==(const LineT& a, const LineT& b) { return a.dir == b.dir; }
};
using Line = LineT<Algebraic>;

template <class T>
LineT<T> make_line(const Vec3<T>& u) {
  for (int p = 0; p < 3; ++p) {
    if (is_zero(u[p])) continue;
    T inv = T(1) / u[p];
    LineT<T> l;
    l.pivot = p;
    for (int i = 0; i < 3; ++i) l.dir[i] = i < p ? T{} : u[i] * inv;
    l.dir[p] = T(1);
    return l;
  }
  throw DependentVectors("zero vector does not span a line");
}

enum class PlaneKind { TypeI, TypeII, TypeIII, TypeIV };
const char* to_string(PlaneKind k);
PlaneKind parse_plane_kind(const std::string& s);

// I: {e1,e2}; II(x): {x e1 + e2, e3}; III(x): {x e2 + e3, e1}; IV(x,y): {x e1 + e2, e1 + y e3}, y != 0.
template <class T>
struct PlaneT {
  PlaneKind kind = PlaneKind::TypeI;
  T x{}, y{};

  std::pair<Vec3<T>, Vec3<T>> basis() const {
    switch (kind) {
      case PlaneKind::TypeI: return {{T(1), T{}, T{}}, {T{}, T(1), T{}}};
      case PlaneKind::TypeII: return {{x, T(1), T{}}, {T{}, T{}, T(1)}};
      case PlaneKind::TypeIII: return {{T{}, x, T(1)}, {T(1), T{}, T{}}};
      case PlaneKind::TypeIV: return {{x, T(1), T{}}, {T(1), T{}, y}};
    }
    return {};
  }
  // Cross product of the basis pair.
  Vec3<T> normal() const {
    switch (kind) {
      case PlaneKind::TypeI: return {T{}, T{}, T(1)};
      case PlaneKind::TypeII: return {T(1), -x, T{}};
      case PlaneKind::TypeIII: return {T{}, T(1), -x};
      case PlaneKind::TypeIV: return {y, -(x * y), T(-1)};
    }
    return {};
  }
  friend bool operator==(const PlaneT& a, const PlaneT& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case PlaneKind::TypeI: return true;
      case PlaneKind::TypeII:
      case PlaneKind::TypeIII: return a.x == b.x;
      case PlaneKind::TypeIV: return a.x == b.x && a.y == b.y;
    }
    return false;
  }
};
using Plane = PlaneT<Algebraic>;

template <class T>
PlaneT<T> make_plane(PlaneKind k, const T& x = T{}, const T& y = T{}) {
  if (k == PlaneKind::TypeIV && is_zero(y)) throw InvalidParameters("type IV plane needs y != 0");
  PlaneT<T> p;
  p.kind = k;
  if (k != PlaneKind::TypeI) p.x = x;
  if (k == PlaneKind::TypeIV) p.y = y;
  return p;
}

template <class T>
bool independent(const Vec3<T>& u, const Vec3<T>& v) {
  auto n = cross(u, v);
  return !(is_zero(n[0]) && is_zero(n[1]) && is_zero(n[2]));
}

// Eliminate the e3 coordinate of one generator, then split on its e2 coordinate.
template <class T>
PlaneT<T> classify_plane(Vec3<T> u, Vec3<T> v) {
  if (!independent(u, v)) throw DependentVectors("vectors do not span a plane");
  if (!is_zero(u[2])) {
    if (is_zero(v[2]))
      std::swap(u, v);
    else
      u = scale(T(1) / u[2], u) - scale(T(1) / v[2], v);
  }
  if (!is_zero(u[1])) {
    u = scale(T(1) / u[1], u);
    T x = u[0];
    if (!is_zero(v[1])) v = v - scale(v[1], u);
    if (is_zero(v[0])) return make_plane(PlaneKind::TypeII, x);
    v = scale(T(1) / v[0], v);
    if (is_zero(v[2])) return make_plane<T>(PlaneKind::TypeI);
    return make_plane(PlaneKind::TypeIV, x, v[2]);
  }
  if (!is_zero(v[1])) {
    T yt = v[2] / v[1];
    if (is_zero(yt)) return make_plane<T>(PlaneKind::TypeI);
    return make_plane(PlaneKind::TypeIII, T(1) / yt);
  }
  return make_plane(PlaneKind::TypeIII, T{});
}

// One row per structure matrix: M u and the three 2x2 minors of (M u, u).
template <class T>
struct LineCheck {
  std::string matrix;
  Vec3<T> image{};
  std::array<T, 3> minors{};
  bool ok() const { return is_zero(minors[0]) && is_zero(minors[1]) && is_zero(minors[2]); }
};

template <class T>
struct LineCertificate {
  bool ideal = true;
  std::vector<LineCheck<T>> checks;
};

inline const char* matrix_label(int q) {
  static const char* names[6] = {"hat1", "tilde1", "hat2", "tilde2", "hat3", "tilde3"};
  return names[q];
}

template <class T>
LineCertificate<T> check_line(const StructureTensor& t, const Vec3<T>& u) {
  LineCertificate<T> c;
  auto ms = structure_matrices(t);
  for (int q = 0; q < 6; ++q) {
    LineCheck<T> r;
    r.matrix = matrix_label(q);
    r.image = mat_apply(ms[q], u);
    r.minors = {r.image[0] * u[1] - r.image[1] * u[0], r.image[0] * u[2] - r.image[2] * u[0],
                r.image[1] * u[2] - r.image[2] * u[1]};
    c.ideal = c.ideal && r.ok();
    c.checks.push_back(std::move(r));
  }
  return c;
}

template <class T>
bool is_ideal_line(const StructureTensor& t, const LineT<T>& l) {
  auto ms = structure_matrices(t);
  const auto& u = l.dir;
  for (const auto& m : ms) {
    auto w = mat_apply(m, u);
    if (!is_zero(w[0] * u[1] - w[1] * u[0]) || !is_zero(w[0] * u[2] - w[2] * u[0]) ||
        !is_zero(w[1] * u[2] - w[2] * u[1]))
      return false;
  }
  return true;
}

// lambda_q with M_q u = lambda_q u, in the order hat1, tilde1, ..., tilde3.
template <class T>
std::array<T, 6> line_eigenvalues(const StructureTensor& t, const LineT<T>& l) {
  auto ms = structure_matrices(t);
  std::array<T, 6> lam{};
  for (int q = 0; q < 6; ++q) lam[q] = mat_apply(ms[q], l.dir)[l.pivot];
  return lam;
}

// det(product | u | v) = n . product for the twelve products e_i w, w e_i, w in {u, v}.
template <class T>
struct PlaneCheck {
  std::string label;
  Vec3<T> product{};
  T det{};
};

template <class T>
struct PlaneCertificate {
  bool ideal = true;
  std::vector<PlaneCheck<T>> checks;
};

template <class T>
PlaneCertificate<T> check_plane(const StructureTensor& t, const PlaneT<T>& p) {
  PlaneCertificate<T> c;
  auto [u, v] = p.basis();
  auto n = p.normal();
  const Vec3<T>* ws[2] = {&u, &v};
  const char* wn[2] = {"u", "v"};
  for (int i = 0; i < 3; ++i) {
    auto e = basis_vector<T>(i);
    for (int w = 0; w < 2; ++w) {
      for (int side = 0; side < 2; ++side) {
        PlaneCheck<T> r;
        std::string ei = "e" + std::to_string(i + 1);
        r.label = side == 0 ? ei + "*" + wn[w] : std::string(wn[w]) + "*" + ei;
        r.product = side == 0 ? product(t, e, *ws[w]) : product(t, *ws[w], e);
        r.det = dot(n, r.product);
        c.ideal = c.ideal && is_zero(r.det);
        c.checks.push_back(std::move(r));
      }
    }
  }
  return c;
}

template <class T>
bool is_ideal_plane(const StructureTensor& t, const PlaneT<T>& p) {
  auto [u, v] = p.basis();
  auto n = p.normal();
  for (int i = 0; i < 3; ++i) {
    auto e = basis_vector<T>(i);
    for (const auto* w : {&u, &v})
      if (!is_zero(dot(n, product(t, e, *w))) || !is_zero(dot(n, product(t, *w, e)))) return false;
  }
  return true;
}

template <class T>
Line to_algebraic(const LineT<T>& l) {
  return {to_algebraic(l.dir), l.pivot};
}
template <class T>
Plane to_algebraic(const PlaneT<T>& p) {
  return {p.kind, Algebraic(p.x), Algebraic(p.y)};
}

// A/I in the complement basis: e_j (j != pivot) for a line; for a plane e3 (I),
// e1 (II), e2 (III), and for IV e2 unless x = 0, where e2 lies in the plane and e3 is used.
class QuotientAlgebra {
 public:
  int dim() const { return static_cast<int>(complement_.size()); }
  const std::vector<Vec3<Algebraic>>& complement() const { return complement_; }
  // table()[a][b][c]: coset a times coset b has coordinate c.
  const std::vector<std::vector<std::vector<Algebraic>>>& table() const { return table_; }
  std::vector<Algebraic> reduce(const Vec3<Algebraic>& w) const;
  // Coordinates of (a + I)(b + I) computed from the given representatives.
  std::vector<Algebraic> coset_product(const Vec3<Algebraic>& a, const Vec3<Algebraic>& b) const;
  const std::string& ideal_description() const { return ideal_; }

 private:
  friend QuotientAlgebra quotient(const StructureTensor&, const Line&);
  friend QuotientAlgebra quotient(const StructureTensor&, const Plane&);
  void fill_table();

  StructureTensor t_;
  std::string ideal_;
  std::vector<Vec3<Algebraic>> complement_;
  bool plane_ = false;
  Vec3<Algebraic> ideal_vec_{};  // line direction or plane normal
  int pivot_ = 0;
  Algebraic normal_scale_;  // n . c for the plane complement c
  std::vector<std::vector<std::vector<Algebraic>>> table_;
};

QuotientAlgebra quotient(const StructureTensor& t, const Line& l);
QuotientAlgebra quotient(const StructureTensor& t, const Plane& p);

std::string describe(const Line& l);
std::string describe(const Plane& p);

}  // namespace ideals3
