#include "ideals3/bipoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ideals3/errors.hpp"

namespace ideals3 {

void BiPoly::add(int i, int j, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Scalar BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Scalar() : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first);
  return d;
}
int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}
int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
  return d;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<SPoly>& c) {
  BiPoly p;
  for (int j = 0; j < static_cast<int>(c.size()); ++j)
    for (int i = 0; i <= c[j].degree(); ++i) p.add(i, j, c[j].coeff(i));
  return p;
}

BiPoly BiPoly::from_x_coeffs(const std::vector<SPoly>& c) { return from_y_coeffs(c).swap_xy(); }

std::vector<SPoly> BiPoly::y_coeffs() const {
  std::vector<std::vector<Scalar>> raw(std::max(0, degree_y() + 1));
  for (const auto& [k, c] : t_) {
    auto& v = raw[k.second];
    if (static_cast<int>(v.size()) <= k.first) v.resize(k.first + 1);
    v[k.first] = c;
  }
  std::vector<SPoly> out;
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

std::vector<SPoly> BiPoly::x_coeffs() const { return swap_xy().y_coeffs(); }

BiPoly BiPoly::swap_xy() const {
  BiPoly p;
  for (const auto& [k, c] : t_) p.t_.emplace(Key{k.second, k.first}, c);
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}
BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly operator*(BiPoly a, const Scalar& s) {
  if (s.is_zero()) return {};
  for (auto& [k, c] : a.t_) c *= s;
  return a;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.first > 0) r.add(k.first - 1, k.second, c * Scalar(k.first));
  return r;
}
BiPoly BiPoly::dy() const { return swap_xy().dx().swap_xy(); }

BiPoly BiPoly::shear(const Scalar& s) const {
  if (s.is_zero()) return *this;
  BiPoly r;
  for (const auto& [k, c] : t_) {
    auto [i, j] = k;
    // (x - s y)^i = sum_m C(i,m) x^(i-m) (-s)^m y^m
    Integer binom = 1;
    Scalar ps(1);
    for (int m = 0; m <= i; ++m) {
      r.add(i - m, j + m, c * Scalar(Rational(binom)) * ps);
      binom = binom * (i - m) / (m + 1);
      ps *= -s;
    }
  }
  return r;
}

BiPoly BiPoly::normalized() const {
  if (t_.empty()) return *this;
  auto lead = std::max_element(t_.begin(), t_.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  return *this * lead->second.inverse();
}

std::string BiPoly::to_string(const std::string& xs, const std::string& ys) const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Key, Scalar>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string s;
  for (const auto& [k, c] : terms) {
    std::string mono;
    auto pw = [](const std::string& v, int e) { return e == 0 ? std::string() : e == 1 ? v : v + "^" + std::to_string(e); };
    std::string px = pw(xs, k.first), py = pw(ys, k.second);
    mono = px.empty() ? py : py.empty() ? px : px + "*" + py;
    std::string cs = c.to_string();
    if (!c.is_real() && cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = cs + "*" + mono;
    if (s.empty())
      s = term;
    else
      s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
  }
  return s;
}

namespace {

using YPoly = std::vector<SPoly>;

void ytrim(YPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

SPoly ycontent(const YPoly& a) {
  SPoly g;
  for (const auto& c : a) g = poly_gcd(g, c);
  return g;
}

std::optional<SPoly> exact_quo(const SPoly& a, const SPoly& b) {
  auto [q, r] = SPoly::divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

YPoly ydiv_scalarpoly(const YPoly& a, const SPoly& c) {
  YPoly r;
  for (const auto& x : a) r.push_back(x / c);
  return r;
}

YPoly yprimitive(const YPoly& a) {
  if (a.empty()) return a;
  return ydiv_scalarpoly(a, ycontent(a));
}

YPoly yprem(YPoly r, const YPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  const SPoly& lb = b.back();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    int dr = static_cast<int>(r.size()) - 1;
    SPoly lr = r.back();
    for (auto& c : r) c = c * lb;
    for (int j = 0; j <= db; ++j) r[j + dr - db] -= lr * b[j];
    ytrim(r);
  }
  return r;
}

std::optional<YPoly> ydivide(YPoly r, const YPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) {
    if (r.empty()) return YPoly{};
    return std::nullopt;
  }
  YPoly q(r.size() - b.size() + 1);
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    int dr = static_cast<int>(r.size()) - 1;
    auto t = exact_quo(r.back(), b.back());
    if (!t) return std::nullopt;
    q[dr - db] = *t;
    for (int j = 0; j <= db; ++j) r[j + dr - db] -= *t * b[j];
    ytrim(r);
  }
  if (!r.empty()) return std::nullopt;
  ytrim(q);
  return q;
}

}  // namespace

SPoly content_in_x(const BiPoly& p) { return ycontent(p.y_coeffs()); }
SPoly content_in_y(const BiPoly& p) { return ycontent(p.x_coeffs()); }

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  YPoly A = a.y_coeffs(), B = b.y_coeffs();
  SPoly ca = ycontent(A), cb = ycontent(B);
  SPoly c = poly_gcd(ca, cb);
  A = ydiv_scalarpoly(A, ca);
  B = ydiv_scalarpoly(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  YPoly g;
  if (B.size() <= 1) {
    g = {SPoly(Scalar(1))};
  } else {
    while (!B.empty()) {
      YPoly r = yprem(A, B);
      A = std::move(B);
      B = yprimitive(r);
    }
    g = A.size() <= 1 ? YPoly{SPoly(Scalar(1))} : A;
  }
  for (auto& x : g) x = x * c;
  return BiPoly::from_y_coeffs(g).normalized();
}

bool bipoly_divides(const BiPoly& b, const BiPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return ydivide(a.y_coeffs(), b.y_coeffs()).has_value();
}

BiPoly bipoly_divide(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  auto q = ydivide(a.y_coeffs(), b.y_coeffs());
  if (!q) throw std::logic_error("inexact bivariate division");
  return BiPoly::from_y_coeffs(*q);
}

namespace {

// Bareiss determinant over F[x].
SPoly poly_det(std::vector<std::vector<SPoly>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return SPoly(Scalar(1));
  SPoly prev(Scalar(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return SPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        SPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = v / prev;
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

SPoly resultant_y_any(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return SPoly();
  YPoly A = p.y_coeffs(), B = q.y_coeffs();
  int m = static_cast<int>(A.size()) - 1, n = static_cast<int>(B.size()) - 1;
  if (m == 0) return poly_pow(A[0], n);
  if (n == 0) return poly_pow(B[0], m);
  int N = m + n;
  std::vector<std::vector<SPoly>> s(N, std::vector<SPoly>(N));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[r][r + j] = A[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[n + r][r + j] = B[n - j];
  return poly_det(std::move(s));
}

SPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.degree_y() <= 0 || q.degree_y() <= 0) throw DegenerateInput("resultant_y needs positive y-degree in both inputs");
  return resultant_y_any(p, q);
}

}  // namespace ideals3
