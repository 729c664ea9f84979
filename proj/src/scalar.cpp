#include "ideals3/scalar.hpp"

#include <cctype>

#include "ideals3/errors.hpp"

namespace ideals3 {

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    return i > start;
  };
  std::string num, den;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num += '-';
    ++i;
  }
  if (!digits(num)) throw ParseError("bad rational literal '" + text + "'");
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den)) throw ParseError("bad rational literal '" + text + "'");
  }
  if (i != text.size()) throw ParseError("bad rational literal '" + text + "'");
  Rational r;
  if (den.empty()) {
    r = Rational(Integer(num));
  } else {
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    r = Rational(Integer(num), d);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

const char* to_string(FieldMode m) { return m == FieldMode::RealRational ? "real" : "complex"; }

FieldMode parse_field_mode(const std::string& s) {
  if (s == "real") return FieldMode::RealRational;
  if (s == "complex") return FieldMode::ComplexGaussian;
  throw ParseError("field mode must be 'real' or 'complex', got '" + s + "'");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string s;
  if (sgn(re_) != 0) s = re_.get_str();
  Rational a = abs(im_);
  std::string coef = a == 1 ? "" : a.get_str() + "*";
  if (sgn(im_) < 0)
    s += "-";
  else if (!s.empty())
    s += "+";
  return s + coef + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn = sqrt(n), rd = sqrt(d);
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

bool sqrt_in_base(const Scalar& d, FieldMode mode, Scalar& root) {
  if (d.is_zero()) {
    root = Scalar();
    return true;
  }
  if (mode == FieldMode::RealRational || d.is_real()) {
    Rational r;
    if (d.is_real()) {
      if (rational_sqrt(d.re(), r)) {
        root = Scalar(r);
        return true;
      }
      if (mode == FieldMode::ComplexGaussian && rational_sqrt(-d.re(), r)) {
        root = Scalar(0, r);
        return true;
      }
      return false;
    }
  }
  // (p + qi)^2 = a + bi: p^2 = (|d| + a)/2, q = b/(2p)
  Rational n2 = d.norm(), n;
  if (!rational_sqrt(n2, n)) return false;
  Rational p2 = (n + d.re()) / 2, p;
  if (!rational_sqrt(p2, p) || sgn(p) == 0) return false;
  root = Scalar(p, d.im() / (2 * p));
  return true;
}

}  // namespace ideals3
