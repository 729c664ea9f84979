#pragma once
#include <array>
#include <vector>

#include "ideals3/algebraic.hpp"
#include "ideals3/errors.hpp"
#include "ideals3/scalar.hpp"

namespace ideals3 {

template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

// The 27 constants w(i,j,k), 0-based here: e_i e_j = sum_k w(i,j,k) e_k.
class StructureTensor {
 public:
  explicit StructureTensor(FieldMode mode = FieldMode::RealRational) : mode_(mode) {}

  FieldMode mode() const { return mode_; }
  const Scalar& operator()(int i, int j, int k) const { return w_[idx(i, j, k)]; }
  // Construction only; rejects non-real entries in RealRational mode.
  void set(int i, int j, int k, const Scalar& v);
  void set_symmetric(int i, int j, int k, const Scalar& v) {
    set(i, j, k, v);
    set(j, i, k, v);
  }

  bool is_commutative() const;
  bool is_zero() const;
  StructureTensor with_mode(FieldMode m) const;
  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.mode_ == b.mode_ && a.w_ == b.w_;
  }

 private:
  static int idx(int i, int j, int k) { return 9 * i + 3 * j + k; }
  FieldMode mode_;
  std::array<Scalar, 27> w_{};
};

template <class T>
Vec3<T> product(const StructureTensor& t, const Vec3<T>& a, const Vec3<T>& b) {
  Vec3<T> g{};
  for (int i = 0; i < 3; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < 3; ++j) {
      if (is_zero(b[j])) continue;
      T ab = a[i] * b[j];
      for (int k = 0; k < 3; ++k)
        if (!t(i, j, k).is_zero()) g[k] += ab * T(t(i, j, k));
    }
  }
  return g;
}

template <class T>
Vec3<T> mat_apply(const Mat3<Scalar>& m, const Vec3<T>& u) {
  Vec3<T> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m[i][j].is_zero() && !is_zero(u[j])) r[i] += T(m[i][j]) * u[j];
  return r;
}

template <class T>
Vec3<T> basis_vector(int i) {
  Vec3<T> e{};
  e[i] = T(1);
  return e;
}

template <class T>
Vec3<T> cross(const Vec3<T>& u, const Vec3<T>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class T>
T dot(const Vec3<T>& u, const Vec3<T>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

template <class T>
Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <class T>
Vec3<T> scale(const T& s, const Vec3<T>& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

template <class T>
Vec3<Algebraic> to_algebraic(const Vec3<T>& v) {
  return {Algebraic(v[0]), Algebraic(v[1]), Algebraic(v[2])};
}

// hat: left multiplication by e_k, tilde: right multiplication by e_k.
Mat3<Scalar> hat_matrix(const StructureTensor& t, int k);
Mat3<Scalar> tilde_matrix(const StructureTensor& t, int k);
// The six matrices in the order hat_1, tilde_1, hat_2, tilde_2, hat_3, tilde_3.
std::array<Mat3<Scalar>, 6> structure_matrices(const StructureTensor& t);
// Slice M_k with rows i and columns j: (M_k)_{ij} = w(i,j,k).
Mat3<Scalar> slice_matrix(const StructureTensor& t, int k);

struct Subspace {
  int dim = 0;
  std::vector<Vec3<Scalar>> basis;
};

Subspace annihilator(const StructureTensor& t);
StructureTensor symmetrize(const StructureTensor& t);
// perm[i] is the image of basis index i; w'(p(i),p(j),p(k)) = w(i,j,k).
StructureTensor permute_basis(const StructureTensor& t, const std::array<int, 3>& perm);

}  // namespace ideals3
