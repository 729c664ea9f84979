#include "ideals3/algebra.hpp"

#include "ideals3/linsys.hpp"

namespace ideals3 {

void StructureTensor::set(int i, int j, int k, const Scalar& v) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 2) throw IndexOutOfRange("structure constant index out of range");
  if (mode_ == FieldMode::RealRational && !v.is_real())
    throw InvalidParameters("non-real structure constant in real mode");
  w_[idx(i, j, k)] = v;
}

bool StructureTensor::is_commutative() const {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!((*this)(i, j, k) == (*this)(j, i, k))) return false;
  return true;
}

bool StructureTensor::is_zero() const {
  for (const auto& w : w_)
    if (!w.is_zero()) return false;
  return true;
}

StructureTensor StructureTensor::with_mode(FieldMode m) const {
  StructureTensor t(m);
  for (int i = 0; i < 27; ++i) t.set(i / 9, i / 3 % 3, i % 3, w_[i]);
  return t;
}

static void check_k(int k) {
  if (k < 0 || k > 2) throw IndexOutOfRange("matrix index must be 1, 2 or 3");
}

Mat3<Scalar> hat_matrix(const StructureTensor& t, int k) {
  check_k(k);
  Mat3<Scalar> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = t(k, c, r);
  return m;
}

Mat3<Scalar> tilde_matrix(const StructureTensor& t, int k) {
  check_k(k);
  Mat3<Scalar> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = t(c, k, r);
  return m;
}

std::array<Mat3<Scalar>, 6> structure_matrices(const StructureTensor& t) {
  return {hat_matrix(t, 0), tilde_matrix(t, 0), hat_matrix(t, 1), tilde_matrix(t, 1), hat_matrix(t, 2), tilde_matrix(t, 2)};
}

Mat3<Scalar> slice_matrix(const StructureTensor& t, int k) {
  check_k(k);
  Mat3<Scalar> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = t(i, j, k);
  return m;
}

Subspace annihilator(const StructureTensor& t) {
  Matrix<Scalar> stacked(18, 3);
  auto ms = structure_matrices(t);
  for (int q = 0; q < 6; ++q)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) stacked(3 * q + r, c) = ms[q][r][c];
  Subspace s;
  for (auto& v : kernel_basis(stacked)) s.basis.push_back({v[0], v[1], v[2]});
  s.dim = static_cast<int>(s.basis.size());
  return s;
}

StructureTensor symmetrize(const StructureTensor& t) {
  StructureTensor s(t.mode());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s.set(i, j, k, (t(i, j, k) + t(j, i, k)) * Scalar(Rational(1, 2)));
  return s;
}

StructureTensor permute_basis(const StructureTensor& t, const std::array<int, 3>& p) {
  std::array<bool, 3> seen{};
  for (int v : p) {
    if (v < 0 || v > 2 || seen[v]) throw InvalidParameters("not a permutation of {1,2,3}");
    seen[v] = true;
  }
  StructureTensor s(t.mode());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s.set(p[i], p[j], p[k], t(i, j, k));
  return s;
}

}  // namespace ideals3
