#include "ideals3/linsys.hpp"

#include <stdexcept>

namespace ideals3 {

Matrix<Scalar> augment(const Matrix<Scalar>& a, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  Matrix<Scalar> m(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[i];
  }
  return m;
}

LinearSolution solve_linear_with_rank(const LinearSystem& sys) {
  LinearSolution s;
  int n = sys.a.cols();
  auto e = rref(augment(sys.a, sys.b));
  s.rank_augmented = e.rank();
  s.rank_coeff = 0;
  for (int c : e.pivots)
    if (c < n) ++s.rank_coeff;
  if (s.rank_coeff != s.rank_augmented) {
    s.outcome = LinearSolution::Outcome::Empty;
    return s;
  }
  s.particular.assign(n, Scalar());
  for (int r = 0; r < e.rank(); ++r) s.particular[e.pivots[r]] = e.reduced(r, n);
  s.kernel = kernel_basis(sys.a);
  s.outcome = s.kernel.empty() ? LinearSolution::Outcome::Unique : LinearSolution::Outcome::Affine;
  return s;
}

}  // namespace ideals3
