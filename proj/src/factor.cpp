#include "ideals3/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ideals3/errors.hpp"

namespace ideals3 {

namespace {

using u64 = std::uint64_t;
using ZPoly = std::vector<Integer>;
using MPoly = std::vector<u64>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly zprimitive(ZPoly a) {
  Integer g = zcontent(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; false if b does not divide a.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (zdeg(a) < zdeg(b)) return a.empty();
  ZPoly r = a;
  q.assign(a.size() - b.size() + 1, 0);
  int db = zdeg(b);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f = top / b.back();
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b[j];
    q[k] = f;
  }
  for (const auto& c : r)
    if (c != 0) return false;
  ztrim(q);
  return true;
}

ZPoly to_zpoly(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
  return zprimitive(z);
}

QPoly to_monic_qpoly(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& a : z) c.emplace_back(a);
  return QPoly(std::move(c)).monic();
}

// ---- arithmetic in F_p[x]

struct ModRing {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Integer& z) const {
    Integer r = z % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }

  void trim(MPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  MPoly from(const ZPoly& z) const {
    MPoly m;
    for (const auto& c : z) m.push_back(reduce(c));
    trim(m);
    return m;
  }
  MPoly mulp(const MPoly& a, const MPoly& b) const {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    trim(r);
    return r;
  }
  MPoly subp(MPoly a, const MPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  MPoly scale(MPoly a, u64 s) const {
    for (auto& c : a) c = mul(c, s);
    trim(a);
    return a;
  }
  void divmod(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r) const {
    r = a;
    if (a.size() < b.size()) {
      q.clear();
      return;
    }
    q.assign(a.size() - b.size() + 1, 0);
    u64 inv_lc = inv(b.back());
    std::size_t db = b.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      u64 f = mul(r[k + db], inv_lc);
      if (!f) continue;
      for (std::size_t j = 0; j <= db; ++j) r[k + j] = sub(r[k + j], mul(f, b[j]));
      q[k] = f;
    }
    r.resize(db);
    trim(r);
    trim(q);
  }
  MPoly rem(const MPoly& a, const MPoly& b) const {
    MPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  MPoly quo(const MPoly& a, const MPoly& b) const {
    MPoly q, r;
    divmod(a, b, q, r);
    return q;
  }
  MPoly monic(const MPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  MPoly gcd(MPoly a, MPoly b) const {
    while (!b.empty()) {
      MPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b
  void xgcd(const MPoly& a, const MPoly& b, MPoly& s, MPoly& t) const {
    MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      MPoly q, r;
      divmod(r0, r1, q, r);
      r0 = std::move(r1);
      r1 = std::move(r);
      MPoly s2 = subp(s0, mulp(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      MPoly t2 = subp(t0, mulp(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 c = inv(r0.back());
    s = scale(s0, c);
    t = scale(t0, c);
  }
  MPoly derivative(const MPoly& a) const {
    MPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
    trim(d);
    return d;
  }
  MPoly powmod(MPoly b, const Integer& e, const MPoly& f) const {
    MPoly r{1};
    b = rem(b, f);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mulp(r, r), f);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mulp(r, b), f);
    }
    return r;
  }
};

// Cantor-Zassenhaus over F_p, p odd; f monic squarefree.
std::vector<MPoly> factor_mod_p(const ModRing& R, MPoly f, std::mt19937_64& rng) {
  std::vector<std::pair<MPoly, int>> ddf;
  MPoly x{0, 1};
  MPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = R.powmod(h, Integer(static_cast<unsigned long>(R.p)), f);
    MPoly g = R.gcd(f, R.subp(h, x));
    if (g.size() > 1) {
      ddf.emplace_back(g, d);
      f = R.quo(f, g);
      h = R.rem(h, f);
    }
  }
  if (f.size() > 1) ddf.emplace_back(f, static_cast<int>(f.size()) - 1);

  std::vector<MPoly> out;
  for (auto& [g, d] : ddf) {
    std::vector<MPoly> work{g};
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), R.p, d);
    e = (e - 1) / 2;
    while (!work.empty()) {
      MPoly u = work.back();
      work.pop_back();
      int n = static_cast<int>(u.size()) - 1;
      if (n == d) {
        out.push_back(u);
        continue;
      }
      for (;;) {
        MPoly a(n);
        for (auto& c : a) c = rng() % R.p;
        R.trim(a);
        if (a.size() < 2) continue;
        MPoly b = R.subp(R.powmod(a, e, u), MPoly{1});
        MPoly w = R.gcd(u, b);
        if (w.size() > 1 && w.size() < u.size()) {
          work.push_back(w);
          work.push_back(R.monic(R.quo(u, w)));
          break;
        }
      }
    }
  }
  return out;
}

ZPoly lift_to_z(const MPoly& m) {
  ZPoly z;
  for (auto c : m) z.emplace_back(static_cast<unsigned long>(c));
  return z;
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
  return a;
}

// F = g*h mod p with g monic; lift to F = G*H mod p^k >= modulus.
void hensel_lift(const ModRing& R, const ZPoly& F, const MPoly& g, const MPoly& h, const Integer& modulus,
                 ZPoly& G, ZPoly& H) {
  MPoly s, t;
  R.xgcd(g, h, s, t);
  G = lift_to_z(g);
  H = lift_to_z(h);
  Integer q = static_cast<unsigned long>(R.p);
  while (q < modulus) {
    ZPoly E = F;
    ZPoly gh = zmul(G, H);
    if (gh.size() > E.size()) E.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) E[i] -= gh[i];
    for (auto& c : E) c /= q;
    ztrim(E);
    MPoly e = R.from(E);
    MPoly a = R.rem(R.mulp(e, t), g);
    MPoly b = R.quo(R.subp(e, R.mulp(a, h)), g);
    ZPoly A = lift_to_z(a), B = lift_to_z(b);
    if (A.size() > G.size()) G.resize(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i) G[i] += q * A[i];
    if (B.size() > H.size()) H.resize(B.size(), 0);
    for (std::size_t i = 0; i < B.size(); ++i) H[i] += q * B[i];
    q *= static_cast<unsigned long>(R.p);
    G = zmod(G, q);
    H = zmod(H, q);
  }
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

std::vector<u64> small_primes() {
  std::vector<u64> ps;
  for (u64 n = 3; ps.size() < 400; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(n);
  }
  return ps;
}

// f primitive, squarefree, deg >= 2, f(0) != 0.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  static const std::vector<u64> primes = small_primes();
  std::mt19937_64 rng(0x1d3a15);
  int n = zdeg(f);
  u64 best_p = 0;
  std::vector<MPoly> best;
  int good = 0;
  for (u64 p : primes) {
    ModRing R{p};
    if (R.reduce(f.back()) == 0) continue;
    MPoly fp = R.from(f);
    if (R.gcd(fp, R.derivative(fp)).size() != 1) continue;
    auto fac = factor_mod_p(R, R.monic(fp), rng);
    if (best.empty() || fac.size() < best.size()) {
      best = fac;
      best_p = p;
    }
    if (fac.size() == 1 || ++good >= 5) break;
  }
  if (best.empty()) throw std::logic_error("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  ModRing R{best_p};
  Integer norm1 = 0;
  for (const auto& c : f) norm1 += abs(c);
  Integer bound = 2 * abs(f.back()) * (Integer(1) << n) * norm1 + 1;
  Integer m = static_cast<unsigned long>(best_p);
  while (m <= bound) m *= static_cast<unsigned long>(best_p);

  // lift one factor at a time against the product of the rest
  std::vector<ZPoly> lifted;
  ZPoly cur = f;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    MPoly rest{R.reduce(cur.back())};
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = R.mulp(rest, best[j]);
    ZPoly G, H;
    hensel_lift(R, cur, best[i], rest, m, G, H);
    lifted.push_back(G);
    cur = H;
  }
  {
    Integer lc_inv;
    Integer lc = cur.back();
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
    for (auto& c : cur) c *= lc_inv;
    lifted.push_back(zmod(cur, m));
  }

  std::vector<ZPoly> out;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t s = 1; 2 * s <= pool.size();) {
    bool found = false;
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    int N = static_cast<int>(pool.size());
    for (;;) {
      ZPoly cand{f.back()};
      for (int i : idx) cand = zmod(zmul(cand, pool[i]), m);
      cand = zprimitive(symmetric(cand, m));
      ZPoly q;
      if (zdeg(cand) >= 1 && zdivide(f, cand, q)) {
        out.push_back(cand);
        f = zprimitive(q);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + *it);
        found = true;
        break;
      }
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && idx[k] == N - static_cast<int>(s) + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(f) >= 1) out.push_back(f);
  return out;
}

std::string sort_key(const SPoly& p) { return p.to_string(); }

void sort_factors(std::vector<PolyFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return sort_key(a.poly) < sort_key(b.poly);
  });
}

SPoly conj_poly(const SPoly& p) {
  return p.map<Scalar>([](const Scalar& s) { return s.conj(); });
}

// Norm method over Q(i); f monic squarefree.
std::vector<SPoly> factor_squarefree_gaussian(const SPoly& f) {
  if (f.degree() <= 1) return {f};
  for (int k = 0;; ++k) {
    int s = (k + 1) / 2 * (k % 2 ? 1 : -1);
    SPoly shift(std::vector<Scalar>{Scalar(0, -s), Scalar(1)});
    SPoly g = compose(f, shift);
    QPoly N = re_part(g * conj_poly(g));
    if (poly_gcd(N, N.derivative()).degree() > 0) continue;
    std::vector<SPoly> out;
    SPoly back(std::vector<Scalar>{Scalar(0, s), Scalar(1)});
    for (const auto& nj : factor_squarefree_rational(N)) {
      SPoly h = poly_gcd(g, to_spoly(nj));
      if (h.degree() >= 1) out.push_back(compose(h, back).monic());
    }
    return out;
  }
}

}  // namespace

std::vector<QPoly> factor_squarefree_rational(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) return {p.monic()};
  ZPoly z = to_zpoly(p);
  if (z[0] == 0) {
    out.push_back(QPoly::x());
    z.erase(z.begin());
  }
  if (zdeg(z) == 1) {
    out.push_back(to_monic_qpoly(z));
  } else if (zdeg(z) >= 2) {
    for (const auto& f : zassenhaus(z)) out.push_back(to_monic_qpoly(f));
  }
  return out;
}

SPoly Factorization::expand() const {
  SPoly r(unit);
  for (const auto& f : factors) r *= poly_pow(f.poly, f.multiplicity);
  return r;
}

Factorization factor_over_base(const SPoly& p, FieldMode mode) {
  if (p.is_zero()) throw DegenerateInput("cannot factor the zero polynomial");
  Factorization out;
  out.unit = p.lead();
  if (p.degree() == 0) return out;
  bool real = is_real_poly(p);
  if (mode == FieldMode::RealRational && !real)
    throw std::invalid_argument("non-real polynomial in real mode");
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const SPoly& part = parts[i];
    if (part.degree() <= 0) continue;
    int mult = static_cast<int>(i) + 1;
    if (is_real_poly(part)) {
      for (const auto& q : factor_squarefree_rational(re_part(part))) {
        if (mode == FieldMode::RealRational) {
          out.factors.push_back({to_spoly(q), mult, {}});
        } else {
          for (auto& g : factor_squarefree_gaussian(to_spoly(q))) out.factors.push_back({g, mult, {}});
        }
      }
    } else {
      for (auto& g : factor_squarefree_gaussian(part)) out.factors.push_back({g, mult, {}});
    }
  }
  sort_factors(out.factors);
  return out;
}

Factorization factor_univariate(const SPoly& p, FieldMode mode) {
  if (p.degree() > 8) throw DegreeTooLarge("factor_univariate supports degree <= 8, got " + std::to_string(p.degree()));
  Factorization f = factor_over_base(p, mode);
  for (auto& pf : f.factors) {
    if (pf.poly.degree() < 2) continue;
    pf.roots = mode == FieldMode::RealRational ? isolate_real_roots(re_part(pf.poly)) : isolate_complex_roots(pf.poly);
  }
  return f;
}

}  // namespace ideals3
