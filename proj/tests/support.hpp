#pragma once
// Independent oracles and generators shared by the unit tests and the acceptance run.
// Nothing here calls the library's product, structure matrices or membership tests.
#include <random>
#include <string>
#include <vector>

#include "ideals3/algebra.hpp"
#include "ideals3/families.hpp"
#include "ideals3/subspace.hpp"

namespace oracle {

using namespace ideals3;

template <class T>
Vec3<T> mul(const StructureTensor& t, const Vec3<T>& a, const Vec3<T>& b) {
  Vec3<T> r{T{}, T{}, T{}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[k] = r[k] + a[i] * b[j] * T(t(i, j, k));
  return r;
}

template <class T>
Vec3<T> unit(int i) {
  Vec3<T> e{T{}, T{}, T{}};
  e[i] = T(1);
  return e;
}

template <class T>
bool parallel(const Vec3<T>& w, const Vec3<T>& u) {
  return is_zero(w[1] * u[2] - w[2] * u[1]) && is_zero(w[2] * u[0] - w[0] * u[2]) &&
         is_zero(w[0] * u[1] - w[1] * u[0]);
}

template <class T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// e_i u and u e_i lie on the line through u.
template <class T>
bool line_ideal(const StructureTensor& t, const Vec3<T>& u) {
  for (int i = 0; i < 3; ++i) {
    auto e = unit<T>(i);
    if (!parallel(mul(t, e, u), u) || !parallel(mul(t, u, e), u)) return false;
  }
  return true;
}

template <class T>
bool plane_ideal(const StructureTensor& t, const Vec3<T>& u, const Vec3<T>& v) {
  for (int i = 0; i < 3; ++i) {
    auto e = unit<T>(i);
    for (const auto* w : {&u, &v})
      if (!is_zero(det3(mul(t, e, *w), u, v)) || !is_zero(det3(mul(t, *w, e), u, v))) return false;
  }
  return true;
}

// Written out from the definitions of the four plane types.
template <class T>
std::pair<Vec3<T>, Vec3<T>> plane_basis(PlaneKind k, const T& x, const T& y) {
  T o(1), z{};
  switch (k) {
    case PlaneKind::TypeI: return {{o, z, z}, {z, o, z}};
    case PlaneKind::TypeII: return {{x, o, z}, {z, z, o}};
    case PlaneKind::TypeIII: return {{z, x, o}, {o, z, z}};
    case PlaneKind::TypeIV: return {{x, o, z}, {o, z, y}};
  }
  return {};
}

template <class T>
bool plane_ideal(const StructureTensor& t, const PlaneT<T>& p) {
  auto [u, v] = plane_basis(p.kind, p.x, p.y);
  return plane_ideal(t, u, v);
}

// {p/q : |p| <= 3, 1 <= q <= 3}, each value once.
inline std::vector<Rational> grid() {
  std::vector<Rational> g;
  for (int q = 1; q <= 3; ++q)
    for (int p = -3; p <= 3; ++p) {
      Rational r(p, q);
      r.canonicalize();
      bool seen = false;
      for (const auto& s : g) seen = seen || s == r;
      if (!seen) g.push_back(r);
    }
  return g;
}

// Canonical line directions over the grid: (1,s,t), (0,1,t), (0,0,1).
inline std::vector<Vec3<Scalar>> grid_lines() {
  auto g = grid();
  std::vector<Vec3<Scalar>> out;
  for (const auto& s : g)
    for (const auto& t : g) out.push_back({Scalar(1), Scalar(s), Scalar(t)});
  for (const auto& t : g) out.push_back({Scalar(0), Scalar(1), Scalar(t)});
  out.push_back({Scalar(0), Scalar(0), Scalar(1)});
  return out;
}

inline std::vector<PlaneT<Scalar>> grid_planes() {
  auto g = grid();
  std::vector<PlaneT<Scalar>> out;
  out.push_back(make_plane<Scalar>(PlaneKind::TypeI));
  for (const auto& x : g) out.push_back(make_plane(PlaneKind::TypeII, Scalar(x)));
  for (const auto& x : g) out.push_back(make_plane(PlaneKind::TypeIII, Scalar(x)));
  for (const auto& x : g)
    for (const auto& y : g)
      if (y != 0) out.push_back(make_plane(PlaneKind::TypeIV, Scalar(x), Scalar(y)));
  return out;
}

struct CorpusItem {
  StructureTensor tensor;
  bool commutative = false;
  std::string label;
};

inline StructureTensor random_tensor(std::mt19937_64& rng, bool commutative, FieldMode mode, int zero_percent) {
  std::uniform_int_distribution<int> entry(-2, 2), pct(0, 99);
  StructureTensor t(mode);
  for (int i = 0; i < 3; ++i)
    for (int j = commutative ? i : 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int v = pct(rng) < zero_percent ? 0 : entry(rng);
        if (commutative)
          t.set_symmetric(i, j, k, Scalar(v));
        else
          t.set(i, j, k, Scalar(v));
      }
  return t;
}

// 500 tensors, entries in {-2..2}: even index commutative, modes alternate in pairs,
// sparsity cycles so that tensors with many ideals are well represented.
inline std::vector<CorpusItem> corpus(std::size_t n = 500, std::uint64_t seed = 0x1dea153) {
  std::mt19937_64 rng(seed);
  const int zero_percent[] = {85, 70, 55, 30};
  std::vector<CorpusItem> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool comm = i % 2 == 0;
    FieldMode mode = (i / 2) % 2 == 0 ? FieldMode::RealRational : FieldMode::ComplexGaussian;
    int zp = zero_percent[(i / 4) % 4];
    out.push_back({random_tensor(rng, comm, mode, zp), comm,
                   "corpus#" + std::to_string(i) + (comm ? " comm" : " gen") + " " + to_string(mode)});
  }
  return out;
}

inline Scalar small_scalar(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Scalar grid_scalar(std::mt19937_64& rng) {
  static const auto g = grid();
  return Scalar(g[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)]);
}

}  // namespace oracle
