#include "ideals3/algebraic.hpp"

#include <stdexcept>

#include "ideals3/bipoly.hpp"
#include "ideals3/errors.hpp"
#include "ideals3/factor.hpp"

namespace ideals3 {

NumberField::NumberField(FieldMode mode, SPoly minpoly, std::optional<RootRegion> region)
    : mode_(mode), minpoly_(minpoly.monic()), region_(std::move(region)) {
  if (minpoly_.degree() < 2) throw std::invalid_argument("number field needs a minimal polynomial of degree >= 2");
}

bool NumberField::same_as(const NumberField& o) const {
  return this == &o || (mode_ == o.mode_ && minpoly_ == o.minpoly_ && region_ == o.region_);
}

std::complex<double> NumberField::generator_approx() const {
  if (!region_) throw std::logic_error("abstract field has no embedding");
  return approximate_root(minpoly_, *region_);
}

Algebraic::Algebraic(FieldPtr field, const SPoly& residue) : field_(std::move(field)), r_(residue) {
  if (field_ && r_.degree() >= field_->degree()) r_ = r_ % field_->minpoly();
}

Algebraic Algebraic::generator(FieldPtr field) { return Algebraic(field, SPoly::x()); }

Scalar Algebraic::base_value() const {
  if (!in_base()) throw std::logic_error("element is not in the base field");
  return r_.coeff(0);
}

void Algebraic::unify(const Algebraic& o) {
  if (!o.field_ || field_ == o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (field_->same_as(*o.field_)) return;
  if (o.in_base()) return;
  if (in_base()) {
    field_ = o.field_;
    return;
  }
  throw std::logic_error("arithmetic across different number fields");
}

Algebraic& Algebraic::operator+=(const Algebraic& o) {
  unify(o);
  r_ += o.r_;
  return *this;
}

Algebraic& Algebraic::operator-=(const Algebraic& o) {
  unify(o);
  r_ -= o.r_;
  return *this;
}

Algebraic& Algebraic::operator*=(const Algebraic& o) {
  unify(o);
  if (in_base() && o.in_base()) {
    r_ = SPoly(r_.coeff(0) * o.r_.coeff(0));
    return *this;
  }
  r_ = r_ * o.r_;
  if (field_ && r_.degree() >= field_->degree()) r_ = r_ % field_->minpoly();
  return *this;
}

Algebraic Algebraic::operator-() const {
  Algebraic a = *this;
  a.r_ = -a.r_;
  return a;
}

Algebraic Algebraic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (in_base()) {
    Algebraic a(r_.coeff(0).inverse());
    a.field_ = field_;
    return a;
  }
  SPoly s, t;
  SPoly g = poly_xgcd(r_, field_->minpoly(), s, t);
  if (g.degree() != 0) throw std::logic_error("minimal polynomial is reducible");
  return Algebraic(field_, s);
}

namespace {

using Box = ComplexInterval;

void mul_range(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1, Rational& lo, Rational& hi) {
  Rational p[4] = {a0 * b0, a0 * b1, a1 * b0, a1 * b1};
  lo = hi = p[0];
  for (const auto& v : p) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
}

Box point(const Scalar& s) { return {s.re(), s.re(), s.im(), s.im()}; }

// Encloses r(theta) for every theta in the region.
Box enclose_region(const SPoly& r, const RootRegion& g) {
  Box t{g.re_lo, g.re_hi, g.box ? g.im_lo : Rational(0), g.box ? g.im_hi : Rational(0)};
  Box acc{};
  const auto& c = r.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + point(*it);
  return acc;
}

bool meets(const Box& b, const RootRegion& g) {
  Rational ilo = g.box ? g.im_lo : Rational(0), ihi = g.box ? g.im_hi : Rational(0);
  return b.re_lo <= g.re_hi && g.re_lo <= b.re_hi && b.im_lo <= ihi && ilo <= b.im_hi;
}

void refine(const NumberField& f, RootRegion& g) {
  Rational w = g.width() / 2;
  if (g.box)
    refine_complex(f.minpoly(), g, w);
  else
    refine_real(re_part(f.minpoly()), g, w);
}

// Characteristic polynomial of a over the base field (up to sign).
SPoly char_poly(const Algebraic& a) {
  BiPoly m, r;
  const auto& mc = a.field()->minpoly().coeffs();
  for (std::size_t k = 0; k < mc.size(); ++k) m.add(0, static_cast<int>(k), mc[k]);
  const auto& rc = a.residue().coeffs();
  for (std::size_t k = 0; k < rc.size(); ++k) r.add(0, static_cast<int>(k), rc[k]);
  return resultant_y(m, BiPoly::x() - r);
}

Algebraic eval_at(const SPoly& p, const Algebraic& a) {
  Algebraic acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + Algebraic(*it);
  return acc;
}

// Index of the region of `roots` holding a, found by refining a's generator.
int locate(const Algebraic& a, const std::vector<RootRegion>& roots) {
  const NumberField& f = *a.field();
  if (!f.region()) throw std::logic_error("cannot locate an element of an abstract field");
  RootRegion g = *f.region();
  for (int round = 0; round < 400; ++round) {
    Box b = enclose_region(a.residue(), g);
    int hit = -1, hits = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (meets(b, roots[i])) {
        hit = static_cast<int>(i);
        ++hits;
      }
    if (hits == 1) return hit;
    if (hits == 0) throw std::logic_error("element enclosure misses every root");
    refine(f, g);
  }
  throw std::logic_error("root location did not converge");
}

}  // namespace

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_lo + b.re_lo, a.re_hi + b.re_hi, a.im_lo + b.im_lo, a.im_hi + b.im_hi};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_lo - b.re_hi, a.re_hi - b.re_lo, a.im_lo - b.im_hi, a.im_hi - b.im_lo};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  Rational rr0, rr1, ii0, ii1, ri0, ri1, ir0, ir1;
  mul_range(a.re_lo, a.re_hi, b.re_lo, b.re_hi, rr0, rr1);
  mul_range(a.im_lo, a.im_hi, b.im_lo, b.im_hi, ii0, ii1);
  mul_range(a.re_lo, a.re_hi, b.im_lo, b.im_hi, ri0, ri1);
  mul_range(a.im_lo, a.im_hi, b.re_lo, b.re_hi, ir0, ir1);
  return {rr0 - ii1, rr1 - ii0, ri0 + ir0, ri1 + ir1};
}

ComplexInterval enclose(const Algebraic& a, const Rational& width) {
  if (a.in_base()) return point(a.residue().coeff(0));
  const NumberField& f = *a.field();
  if (!f.region()) throw std::logic_error("cannot enclose an element of an abstract field");
  RootRegion g = *f.region();
  for (int round = 0; round < 400; ++round) {
    Box b = enclose_region(a.residue(), g);
    if (b.re_hi - b.re_lo <= width && b.im_hi - b.im_lo <= width) return b;
    refine(f, g);
  }
  throw std::logic_error("enclosure did not converge");
}

bool operator==(const Algebraic& a, const Algebraic& b) {
  if (a.in_base() && b.in_base()) return a.r_ == b.r_;
  // a reduced residue of positive degree is never a base element
  if (a.in_base() || b.in_base()) return false;
  if (a.field_ == b.field_ || a.field_->same_as(*b.field_)) return a.r_ == b.r_;
  // Different fields: a and b must be common roots of their characteristic
  // polynomials, and then the same isolated root.
  SPoly h = poly_gcd(char_poly(a), char_poly(b));
  if (h.degree() < 1) return false;
  h = squarefree_part(h);
  if (!eval_at(h, a).is_zero() || !eval_at(h, b).is_zero()) return false;
  if (h.degree() == 1) return true;
  auto roots = a.field_->mode() == FieldMode::RealRational && b.field_->mode() == FieldMode::RealRational
                   ? isolate_real_roots(re_part(h))
                   : isolate_complex_roots(h);
  return locate(a, roots) == locate(b, roots);
}

std::complex<double> Algebraic::approx() const {
  if (in_base()) {
    Scalar s = r_.coeff(0);
    return {s.re().get_d(), s.im().get_d()};
  }
  std::complex<double> t = field_->generator_approx(), acc = 0;
  const auto& c = r_.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + std::complex<double>(it->re().get_d(), it->im().get_d());
  return acc;
}

std::string Algebraic::to_string() const {
  if (in_base()) return r_.coeff(0).to_string();
  return r_.to_string("t");
}

std::vector<FieldPtr> embeddings(const FieldPtr& abstract) {
  std::vector<FieldPtr> out;
  const SPoly& m = abstract->minpoly();
  auto regions = abstract->mode() == FieldMode::RealRational ? isolate_real_roots(re_part(m)) : isolate_complex_roots(m);
  for (auto& r : regions) out.push_back(std::make_shared<NumberField>(abstract->mode(), m, r));
  return out;
}

std::vector<Algebraic> roots_of(const SPoly& p, FieldMode mode) {
  std::vector<Algebraic> out;
  if (p.degree() <= 0) return out;
  for (const auto& f : factor_over_base(p, mode).factors) {
    if (f.poly.degree() == 1) {
      out.emplace_back(-f.poly.coeff(0));
      continue;
    }
    auto abstract = std::make_shared<NumberField>(mode, f.poly);
    for (auto& e : embeddings(abstract)) out.push_back(Algebraic::generator(e));
  }
  return out;
}

QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c, FieldMode mode) {
  QuadraticRoots q;
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    q.kind = QuadraticRoots::Kind::AllScalars;
    return q;
  }
  q.kind = QuadraticRoots::Kind::Finite;
  q.roots = roots_of(SPoly(std::vector<Scalar>{c, b, a}), mode);
  if (q.roots.empty()) q.kind = QuadraticRoots::Kind::Empty;
  return q;
}

}  // namespace ideals3
