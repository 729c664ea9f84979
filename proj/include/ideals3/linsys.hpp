#pragma once
#include <string>
#include <vector>

#include "ideals3/scalar.hpp"

namespace ideals3 {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    for (const auto& r : init) a_.insert(a_.end(), r.begin(), r.end());
  }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class T>
struct Echelon {
  Matrix<T> reduced;  // reduced row echelon form
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> e;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

template <class T>
int rank(const Matrix<T>& m) {
  return rref(m).rank();
}

template <class T>
T determinant(Matrix<T> m) {
  int n = m.rows();
  T det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T{};
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    T inv = T(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  Echelon<T> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols());
    v[f] = T(1);
    for (int r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

struct LinearSystem {
  Matrix<Scalar> a;
  std::vector<Scalar> b;
};

struct LinearSolution {
  enum class Outcome { Empty, Unique, Affine } outcome = Outcome::Empty;
  int rank_coeff = 0, rank_augmented = 0;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

LinearSolution solve_linear_with_rank(const LinearSystem& sys);
Matrix<Scalar> augment(const Matrix<Scalar>& a, const std::vector<Scalar>& b);

}  // namespace ideals3
