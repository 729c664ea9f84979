#include "ideals3/unipoly.hpp"

namespace ideals3 {

SPoly to_spoly(const QPoly& p) {
  return p.map<Scalar>([](const Rational& r) { return Scalar(r); });
}

QPoly re_part(const SPoly& p) {
  return p.map<Rational>([](const Scalar& s) { return s.re(); });
}

QPoly im_part(const SPoly& p) {
  return p.map<Rational>([](const Scalar& s) { return s.im(); });
}

bool is_real_poly(const SPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_real()) return false;
  return true;
}

}  // namespace ideals3
