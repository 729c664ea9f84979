#pragma once
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ideals3/roots.hpp"
#include "ideals3/unipoly.hpp"

namespace ideals3 {

// K = F[t]/(m(t)) with m monic irreducible over F. A field without a region is an
// abstract extension used during elimination; solvers embed it before reporting.
class NumberField {
 public:
  NumberField(FieldMode mode, SPoly minpoly, std::optional<RootRegion> region = std::nullopt);

  FieldMode mode() const { return mode_; }
  const SPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const std::optional<RootRegion>& region() const { return region_; }
  bool same_as(const NumberField& o) const;
  // Decimal value of the generator, for rendering.
  std::complex<double> generator_approx() const;

 private:
  FieldMode mode_;
  SPoly minpoly_;
  std::optional<RootRegion> region_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class Algebraic {
 public:
  Algebraic() = default;
  Algebraic(int v) : r_(Scalar(v)) {}
  Algebraic(const Scalar& s) : r_(s) {}
  Algebraic(const Rational& s) : r_(Scalar(s)) {}
  // residue is reduced modulo the minimal polynomial
  Algebraic(FieldPtr field, const SPoly& residue);
  static Algebraic generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const SPoly& residue() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }
  bool in_base() const { return r_.degree() <= 0; }
  Scalar base_value() const;  // requires in_base()

  Algebraic inverse() const;
  Algebraic& operator+=(const Algebraic& o);
  Algebraic& operator-=(const Algebraic& o);
  Algebraic& operator*=(const Algebraic& o);
  Algebraic& operator/=(const Algebraic& o) { return *this *= o.inverse(); }
  friend Algebraic operator+(Algebraic a, const Algebraic& b) { return a += b; }
  friend Algebraic operator-(Algebraic a, const Algebraic& b) { return a -= b; }
  friend Algebraic operator*(Algebraic a, const Algebraic& b) { return a *= b; }
  friend Algebraic operator/(Algebraic a, const Algebraic& b) { return a /= b; }
  Algebraic operator-() const;
  friend bool operator==(const Algebraic& a, const Algebraic& b);

  // Same residue, reinterpreted in another field with the same minimal polynomial.
  Algebraic rebase(FieldPtr f) const { return Algebraic(std::move(f), r_); }

  std::complex<double> approx() const;
  // Base values print as scalars; extension values as a polynomial in t.
  std::string to_string() const;

 private:
  void unify(const Algebraic& o);
  FieldPtr field_;
  SPoly r_;
};

inline bool is_zero(const Algebraic& a) { return a.is_zero(); }

// Closed rational rectangle. Lets expressions that mix number fields be shown nonzero.
struct ComplexInterval {
  Rational re_lo, re_hi, im_lo, im_hi;
  bool contains_zero() const { return re_lo <= 0 && 0 <= re_hi && im_lo <= 0 && 0 <= im_hi; }
  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
};
// A rectangle around a whose sides are at most `width` (exact for base elements).
ComplexInterval enclose(const Algebraic& a, const Rational& width);

// Real roots (RealRational) or all roots (ComplexGaussian) of p, each as an
// embedded element: base scalars for linear factors, generators otherwise.
std::vector<Algebraic> roots_of(const SPoly& p, FieldMode mode);

// Embeddings of an abstract field: one field per root of its minimal polynomial
// that the mode admits.
std::vector<FieldPtr> embeddings(const FieldPtr& abstract);

struct QuadraticRoots {
  enum class Kind { Empty, Finite, AllScalars } kind = Kind::Empty;
  std::vector<Algebraic> roots;
};
QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c, FieldMode mode);

}  // namespace ideals3
