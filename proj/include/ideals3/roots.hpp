#pragma once
#include <complex>
#include <optional>
#include <vector>

#include "ideals3/unipoly.hpp"

namespace ideals3 {

// Isolating region for one root. Real roots use an open interval (re_lo, re_hi)
// whose endpoints are not roots, or a degenerate interval for an exact rational
// root. Complex roots use a closed box with no root on its boundary.
struct RootRegion {
  bool box = false;
  Rational re_lo, re_hi, im_lo, im_hi;

  bool exact() const { return re_lo == re_hi && im_lo == im_hi; }
  Rational width() const;
  friend bool operator==(const RootRegion&, const RootRegion&) = default;
};

Rational cauchy_bound(const SPoly& p);

std::vector<QPoly> sturm_sequence(const QPoly& p);
int sign_variations(const std::vector<QPoly>& seq, const Rational& at);
// Distinct roots in (lo, hi]; p must be squarefree.
int count_real_roots(const std::vector<QPoly>& sturm, const Rational& lo, const Rational& hi);

// Roots of the squarefree part, ascending.
std::vector<RootRegion> isolate_real_roots(const QPoly& p);
void refine_real(const QPoly& sqf, RootRegion& r, const Rational& width);

// Number of roots of p inside the box, or nullopt when a root sits on its boundary.
std::optional<int> count_roots_in_box(const SPoly& p, const Rational& x0, const Rational& x1,
                                      const Rational& y0, const Rational& y1);
std::vector<RootRegion> isolate_complex_roots(const SPoly& p);
void refine_complex(const SPoly& sqf, RootRegion& r, const Rational& width);

// Floating-point rendering only; never used in decisions.
std::complex<double> approximate_root(const SPoly& p, RootRegion r);

// Cauchy index of num/den over [0, 1]; den must not vanish at 0 or 1.
int cauchy_index_01(const QPoly& num, const QPoly& den);

}  // namespace ideals3
