#pragma once
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "ideals3/scalar.hpp"

namespace ideals3 {

namespace detail {
template <class T>
bool coeff_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

// Dense univariate polynomial, lowest degree first. T needs field operations,
// T{} as zero, T(1) as one and a free is_zero(const T&).
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(T c) {
    if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static UniPoly monomial(T coef, int deg) {
    std::vector<T> c(deg + 1);
    c[deg] = std::move(coef);
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T{}; }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  T operator()(const T& v) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }
  // Evaluate at a value of a larger ring U that accepts T coefficients.
  template <class U>
  U eval(const U& v) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + U(*it);
    return acc;
  }
  template <class U, class F>
  UniPoly<U> map(F f) const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(f(a));
    return UniPoly<U>(std::move(out));
  }

  UniPoly derivative() const {
    std::vector<T> d;
    for (int i = 1; i < static_cast<int>(c_.size()); ++i) d.push_back(c_[i] * T(i));
    return UniPoly(std::move(d));
  }
  UniPoly monic() const {
    if (c_.empty()) return *this;
    T inv = T(1) / c_.back();
    return *this * inv;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ideals3_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const T& s) {
    if (ideals3_is_zero(s)) return {};
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  // Euclidean division; b must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    assert(!b.is_zero());
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<T> r = a.c_;
    std::vector<T> q(a.c_.size() - b.c_.size() + 1);
    T inv = T(1) / b.lead();
    int db = b.degree();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      T f = r[k + db] * inv;
      if (ideals3_is_zero(f)) continue;
      for (int j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
      q[k] = std::move(f);
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (ideals3_is_zero(c_[i])) continue;
      std::string cs = scalar_text(c_[i]);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      if (compound) cs = "(" + cs + ")";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      std::string term;
      if (i == 0)
        term = cs;
      else if (cs == "1")
        term = mono;
      else if (cs == "-1")
        term = "-" + mono;
      else
        term = cs + "*" + mono;
      if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
      else s = term;
    }
    return s;
  }

 private:
  static bool ideals3_is_zero(const T& v) { return detail::coeff_is_zero(v); }
  template <class V>
  static std::string scalar_text(const V& v) {
    if constexpr (requires { v.to_string(); })
      return v.to_string();
    else
      return v.get_str();
  }
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
UniPoly<T> poly_gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// s*a + t*b = g with g monic (or zero when both inputs are zero).
template <class T>
UniPoly<T> poly_xgcd(const UniPoly<T>& a, const UniPoly<T>& b, UniPoly<T>& s, UniPoly<T>& t) {
  UniPoly<T> r0 = a, r1 = b, s0(T(1)), s1, t0, t1(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = UniPoly<T>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  T inv = T(1) / r0.lead();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

template <class T>
UniPoly<T> squarefree_part(const UniPoly<T>& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UniPoly<T>(T(1));
  return (p / poly_gcd(p, p.derivative())).monic();
}

// Yun: returns monic a_1, a_2, ... with p = lc * prod a_i^i.
template <class T>
std::vector<UniPoly<T>> squarefree_decomposition(const UniPoly<T>& p) {
  std::vector<UniPoly<T>> out;
  if (p.degree() <= 0) return out;
  UniPoly<T> f = p.monic();
  UniPoly<T> d = f.derivative();
  UniPoly<T> a = poly_gcd(f, d);
  UniPoly<T> b = f / a, c = d / a;
  for (;;) {
    UniPoly<T> e = c - b.derivative();
    if (e.is_zero()) {
      out.push_back(b.monic());
      break;
    }
    UniPoly<T> g = poly_gcd(b, e);
    out.push_back(g);
    b = b / g;
    c = e / g;
    if (b.degree() <= 0) break;
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

// p(q(x))
template <class T>
UniPoly<T> compose(const UniPoly<T>& p, const UniPoly<T>& q) {
  UniPoly<T> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + UniPoly<T>(*it);
  return acc;
}

template <class T>
UniPoly<T> poly_pow(UniPoly<T> b, int e) {
  UniPoly<T> r(T(1));
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

using QPoly = UniPoly<Rational>;
using SPoly = UniPoly<Scalar>;

SPoly to_spoly(const QPoly& p);
// Real and imaginary parts of the coefficients.
QPoly re_part(const SPoly& p);
QPoly im_part(const SPoly& p);
bool is_real_poly(const SPoly& p);

}  // namespace ideals3
