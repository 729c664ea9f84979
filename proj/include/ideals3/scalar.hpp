#pragma once
#include <gmpxx.h>

#include <ostream>
#include <string>

namespace ideals3 {

using Rational = mpq_class;
using Integer = mpz_class;

enum class FieldMode { RealRational, ComplexGaussian };

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "-3/7", "12", "+1/2". Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
const char* to_string(FieldMode m);
FieldMode parse_field_mode(const std::string& s);

// Element of Q(i). Under RealRational the imaginary part is kept at zero by every
// producer; arithmetic itself does not care.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(const Rational& re) : re_(re) { re_.canonicalize(); }
  Scalar(const Rational& re, const Rational& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static Scalar I() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  Scalar conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  // Real-only ordering helper; callers must know the value is real.
  int sign() const { return sgn(re_); }

  // "3/2" for real values, "3/2+1/2*i" style otherwise.
  std::string to_string() const;

 private:
  Rational re_{0}, im_{0};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Exact square root in the base field if one exists.
bool sqrt_in_base(const Scalar& d, FieldMode mode, Scalar& root);
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace ideals3
