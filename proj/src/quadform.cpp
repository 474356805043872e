#include "weberyz/quadform.hpp"

#include <cmath>
#include <numeric>

namespace weberyz {

FormClass::FormClass(long a_, long b_, long c_) : a(a_), b(b_), c(c_) {
  WYZ_CHECK(a > 0, "FormClass: a must be positive");
  Int disc = Int(b) * b - 4 * Int(a) * c;
  WYZ_CHECK(disc < 0, "FormClass: discriminant must be negative");
  WYZ_CHECK(disc.fits_slong_p(), "FormClass: discriminant overflow");
  d = disc.get_si();
}

bool FormClass::is_reduced() const {
  if (!(std::abs(b) <= a && a <= c)) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::vector<FormClass> reduced_forms(long d) {
  long r = ((d % 4) + 4) % 4;
  WYZ_CHECK(d < 0 && (r == 0 || r == 1), "reduced_forms: invalid discriminant");
  std::vector<FormClass> out;
  long amax = (long)std::sqrt((double)(-d) / 3.0) + 1;
  for (long a = 1; a <= amax; ++a) {
    if (3 * Int(a) * a > Int(-d)) break;  // |b| <= a <= c forces 3a^2 <= |d|
    for (long b = -a; b <= a; ++b) {
      Int num = Int(b) * b - d;
      if (num % (4 * a) != 0) continue;
      Int cc = num / (4 * a);
      if (!cc.fits_slong_p()) continue;
      long c = cc.get_si();
      if (c < a) continue;
      if ((b == -a || b == a || a == c) && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;  // primitive forms only
      out.emplace_back(a, b, c);
    }
  }
  // already lexicographic in (a, b) by construction
  for (auto& f : out) WYZ_CHECK(f.is_reduced() && f.d == d, "reduced_forms: internal");
  return out;
}

int epsilon_d(long d) {
  WYZ_CHECK(((d % 8) + 8) % 8 == 1, "epsilon_d: d must be 1 mod 8");
  long k = (d - 1) / 8;
  return (k % 2 == 0) ? 1 : -1;
}

CmPoint cm_point(const FormClass& f, long prec) {
  BigComplex tau(prec);
  BigComplex root = BigComplex::sqrt_of_int(Int(-(long)f.d), prec);
  mpfr_set_si(tau.re, -f.b, MPFR_RNDN);
  mpfr_div_si(tau.re, tau.re, 2 * f.a, MPFR_RNDN);
  mpfr_div_si(tau.im, root.re, 2 * f.a, MPFR_RNDN);
  tau.err = root.err * Mag(1.0 / (2.0 * (double)f.a)) + Mag::pow2(-prec + 3);
  WYZ_CHECK(tau.im_positive(), "cm_point: internal");
  return CmPoint{std::move(tau), f};
}

}  // namespace weberyz
