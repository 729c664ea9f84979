#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ideals3/algebraic.hpp"
#include "ideals3/unipoly.hpp"

namespace ideals3 {

// Sparse polynomial in x, y over the base field; key is (x-degree, y-degree).
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  BiPoly() = default;
  BiPoly(const Scalar& c) { add(0, 0, c); }
  BiPoly(int c) : BiPoly(Scalar(c)) {}
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }
  static BiPoly monomial(int i, int j, const Scalar& c = Scalar(1)) {
    BiPoly p;
    p.add(i, j, c);
    return p;
  }
  static BiPoly from_y_coeffs(const std::vector<SPoly>& c);  // c[j](x) * y^j
  static BiPoly from_x_coeffs(const std::vector<SPoly>& c);  // c[i](y) * x^i

  void add(int i, int j, const Scalar& c);
  Scalar coeff(int i, int j) const;
  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0}); }
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;

  std::vector<SPoly> y_coeffs() const;  // index j -> coefficient of y^j, polynomial in x
  std::vector<SPoly> x_coeffs() const;  // index i -> coefficient of x^i, polynomial in y
  BiPoly swap_xy() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Scalar& s);
  BiPoly operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  BiPoly dx() const;
  BiPoly dy() const;
  // p(x - c*y, y)
  BiPoly shear(const Scalar& c) const;
  // Leading coefficient (lex on (y-degree, x-degree)) scaled to one.
  BiPoly normalized() const;

  template <class T>
  T eval(const T& xv, const T& yv) const {
    T acc{};
    for (const auto& [k, c] : t_) acc += T(c) * power(xv, k.first) * power(yv, k.second);
    return acc;
  }
  // Substitute x = xv, leaving a polynomial in y.
  template <class T>
  UniPoly<T> eval_x(const T& xv) const {
    std::vector<T> c(std::max(0, degree_y() + 1));
    for (const auto& [k, v] : t_) c[k.second] += T(v) * power(xv, k.first);
    return UniPoly<T>(std::move(c));
  }
  template <class T>
  UniPoly<T> eval_y(const T& yv) const {
    return swap_xy().eval_x(yv);
  }

  std::string to_string(const std::string& xs = "x", const std::string& ys = "y") const;

 private:
  template <class T>
  static T power(const T& b, int e) {
    T r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }
  std::map<Key, Scalar> t_;
};

// gcd in F[x, y], normalized; gcd(0, p) = p normalized.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);
// Exact quotient; throws std::logic_error if b does not divide a.
BiPoly bipoly_divide(const BiPoly& a, const BiPoly& b);
bool bipoly_divides(const BiPoly& b, const BiPoly& a);
// Content with respect to y (gcd of the y-coefficients): a polynomial in x only.
SPoly content_in_x(const BiPoly& p);
// Content with respect to x: a polynomial in y only.
SPoly content_in_y(const BiPoly& p);

// Sylvester resultant eliminating y. Throws DegenerateInput if either has y-degree 0.
SPoly resultant_y(const BiPoly& p, const BiPoly& q);
// Variant used internally: degree-0 inputs handled by the usual power convention.
SPoly resultant_y_any(const BiPoly& p, const BiPoly& q);

}  // namespace ideals3
