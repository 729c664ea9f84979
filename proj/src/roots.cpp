#include "ideals3/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace ideals3 {

Rational RootRegion::width() const {
  Rational w = re_hi - re_lo;
  if (box) w = std::max(w, Rational(im_hi - im_lo));
  return w;
}

static Rational abs_upper(const Scalar& s) { return abs(s.re()) + abs(s.im()); }
static Rational abs_lower(const Scalar& s) { return std::max(Rational(abs(s.re())), Rational(abs(s.im()))); }

Rational cauchy_bound(const SPoly& p) {
  Rational m = 0, lc = abs_lower(p.lead());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs_upper(p.coeff(i)) / lc));
  // integer strictly above 1 + m
  Integer c = m.get_num() / m.get_den();
  return Rational(c + 2);
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) s.push_back(-(s[s.size() - 2] % s.back()));
  s.pop_back();
  return s;
}

static int sgn_at(const QPoly& p, const Rational& x) { return sgn(p(x)); }

int sign_variations(const std::vector<QPoly>& seq, const Rational& at) {
  int v = 0, last = 0;
  for (const auto& q : seq) {
    int s = sgn_at(q, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int count_real_roots(const std::vector<QPoly>& sturm, const Rational& lo, const Rational& hi) {
  return sign_variations(sturm, lo) - sign_variations(sturm, hi);
}

std::vector<RootRegion> isolate_real_roots(const QPoly& p) {
  std::vector<RootRegion> out;
  if (p.degree() <= 0) return out;
  QPoly f = squarefree_part(p);
  auto st = sturm_sequence(f);
  Rational b = cauchy_bound(to_spoly(f));
  struct Job { Rational lo, hi; int n; };
  std::vector<Job> stack{{-b, b, count_real_roots(st, -b, b)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.n == 0) continue;
    if (j.n == 1) {
      out.push_back({false, j.lo, j.hi, 0, 0});
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    if (sgn(f(mid)) != 0) {
      stack.push_back({j.lo, mid, count_real_roots(st, j.lo, mid)});
      stack.push_back({mid, j.hi, count_real_roots(st, mid, j.hi)});
      continue;
    }
    out.push_back({false, mid, mid, 0, 0});
    Rational d = (j.hi - j.lo) / 4;
    while (sgn(f(mid - d)) == 0 || sgn(f(mid + d)) == 0 || count_real_roots(st, mid - d, mid + d) != 1) d /= 2;
    stack.push_back({j.lo, mid - d, count_real_roots(st, j.lo, mid - d)});
    stack.push_back({mid + d, j.hi, count_real_roots(st, mid + d, j.hi)});
  }
  std::sort(out.begin(), out.end(), [](const RootRegion& a, const RootRegion& b) { return a.re_lo < b.re_lo; });
  return out;
}

void refine_real(const QPoly& sqf, RootRegion& r, const Rational& width) {
  if (r.exact()) return;
  int slo = sgn(sqf(r.re_lo));
  while (r.re_hi - r.re_lo > width) {
    Rational mid = (r.re_lo + r.re_hi) / 2;
    int s = sgn(sqf(mid));
    if (s == 0) {
      r.re_lo = r.re_hi = mid;
      return;
    }
    if (s == slo)
      r.re_lo = mid;
    else
      r.re_hi = mid;
  }
}

int cauchy_index_01(const QPoly& num, const QPoly& den) {
  if (num.is_zero()) return 0;
  std::vector<QPoly> s{den, num};
  while (!s.back().is_zero()) s.push_back(-(s[s.size() - 2] % s.back()));
  s.pop_back();
  return sign_variations(s, Rational(0)) - sign_variations(s, Rational(1));
}

std::optional<int> count_roots_in_box(const SPoly& p, const Rational& x0, const Rational& x1,
                                      const Rational& y0, const Rational& y1) {
  std::array<Scalar, 4> corner{Scalar(x0, y0), Scalar(x1, y0), Scalar(x1, y1), Scalar(x0, y1)};
  std::array<Scalar, 4> val;
  for (int k = 0; k < 4; ++k) {
    val[k] = p(corner[k]);
    if (val[k].is_zero()) return std::nullopt;
  }
  static const std::array<Scalar, 5> units{Scalar(1), Scalar(0, 1), Scalar(1, 1), Scalar(1, -1), Scalar(1, 2)};
  Scalar c;
  for (const auto& u : units) {
    bool ok = true;
    for (const auto& v : val) ok = ok && !(u * v).is_real();
    if (ok) {
      c = u;
      break;
    }
  }
  int total = 0;
  for (int k = 0; k < 4; ++k) {
    const Scalar& a = corner[k];
    const Scalar& b = corner[(k + 1) % 4];
    SPoly q = compose(p, SPoly(std::vector<Scalar>{a, b - a})) * c;
    QPoly u = re_part(q), v = im_part(q);
    QPoly g = poly_gcd(u, v);
    if (g.degree() >= 1) {
      auto st = sturm_sequence(g);
      if (count_real_roots(st, 0, 1) > 0) return std::nullopt;
    }
    total += cauchy_index_01(u, v);
  }
  if (total % 2 != 0) throw std::logic_error("odd winding sum in box count");
  return total / 2;
}

namespace {

struct Box {
  Rational x0, x1, y0, y1;
  int n;
};

// Split into four children, nudging the cut lines off any boundary root.
std::array<Box, 4> split_box(const SPoly& p, const Box& b) {
  static const std::array<std::pair<int, int>, 8> ratios{{{1, 2}, {3, 7}, {4, 7}, {5, 11}, {6, 11}, {7, 17}, {10, 17}, {13, 29}}};
  for (const auto& [rn, rd] : ratios) {
    for (const auto& [sn, sd] : ratios) {
      Rational xm = b.x0 + (b.x1 - b.x0) * Rational(rn, rd);
      Rational ym = b.y0 + (b.y1 - b.y0) * Rational(sn, sd);
      std::array<Box, 4> ch{Box{b.x0, xm, b.y0, ym, 0}, Box{xm, b.x1, b.y0, ym, 0}, Box{b.x0, xm, ym, b.y1, 0},
                            Box{xm, b.x1, ym, b.y1, 0}};
      bool ok = true;
      int sum = 0;
      for (auto& c : ch) {
        auto n = count_roots_in_box(p, c.x0, c.x1, c.y0, c.y1);
        if (!n) {
          ok = false;
          break;
        }
        c.n = *n;
        sum += *n;
      }
      if (!ok) continue;
      if (sum != b.n) throw std::logic_error("box subdivision lost roots");
      return ch;
    }
  }
  throw std::logic_error("could not place cut lines off the roots");
}

}  // namespace

std::vector<RootRegion> isolate_complex_roots(const SPoly& p) {
  std::vector<RootRegion> out;
  if (p.degree() <= 0) return out;
  SPoly f = squarefree_part(p);
  Rational b = cauchy_bound(f);
  auto n0 = count_roots_in_box(f, -b, b, -b, b);
  if (!n0 || *n0 != f.degree()) throw std::logic_error("root bound box does not hold all roots");
  std::vector<Box> stack{{-b, b, -b, b, *n0}};
  while (!stack.empty()) {
    Box bx = stack.back();
    stack.pop_back();
    if (bx.n == 0) continue;
    if (bx.n == 1) {
      out.push_back({true, bx.x0, bx.x1, bx.y0, bx.y1});
      continue;
    }
    for (auto& c : split_box(f, bx)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const RootRegion& a, const RootRegion& b) {
    return a.re_lo != b.re_lo ? a.re_lo < b.re_lo : a.im_lo < b.im_lo;
  });
  return out;
}

void refine_complex(const SPoly& sqf, RootRegion& r, const Rational& width) {
  if (r.exact()) return;
  while (r.width() > width) {
    Box b{r.re_lo, r.re_hi, r.im_lo, r.im_hi, 1};
    bool found = false;
    for (const auto& c : split_box(sqf, b)) {
      if (c.n == 1) {
        r = {true, c.x0, c.x1, c.y0, c.y1};
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("refinement lost the root");
  }
}

std::complex<double> approximate_root(const SPoly& p, RootRegion r) {
  if (r.exact()) return {r.re_lo.get_d(), r.im_lo.get_d()};
  if (!r.box) {
    QPoly q = squarefree_part(re_part(p));
    refine_real(q, r, Rational(Integer(1), Integer(1) << 60));
    return {Rational((r.re_lo + r.re_hi) / 2).get_d(), 0.0};
  }
  SPoly f = squarefree_part(p);
  refine_complex(f, r, Rational(Integer(1), Integer(1) << 24));
  std::complex<long double> z(Rational((r.re_lo + r.re_hi) / 2).get_d(), Rational((r.im_lo + r.im_hi) / 2).get_d());
  std::vector<std::complex<long double>> c;
  for (const auto& a : f.coeffs()) c.emplace_back(a.re().get_d(), a.im().get_d());
  for (int it = 0; it < 8; ++it) {
    std::complex<long double> v = 0, d = 0;
    for (auto k = c.rbegin(); k != c.rend(); ++k) {
      d = d * z + v;
      v = v * z + *k;
    }
    if (std::abs(d) == 0) break;
    z -= v / d;
  }
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace ideals3
