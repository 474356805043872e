#ifndef WEBERYZ_BIGCOMPLEX_HPP
#define WEBERYZ_BIGCOMPLEX_HPP

#include <mpfr.h>

#include <string>

#include "weberyz/intmath.hpp"

namespace weberyz {

// Magnitude bound m * 2^e with 1 <= m < 2 (or zero).  Used for error bounds;
// immune to double underflow at high working precisions.
struct Mag {
  double m = 0.0;
  long e = 0;

  Mag() = default;
  Mag(double v);
  static Mag pow2(long e) { return Mag(1.0, e); }
  Mag(double m_, long e_);

  bool is_zero() const { return m == 0.0; }
  double to_double() const;
  double log2() const;

  friend Mag operator+(const Mag& a, const Mag& b);
  friend Mag operator*(const Mag& a, const Mag& b);
  friend Mag max(const Mag& a, const Mag& b);
  friend bool operator<(const Mag& a, const Mag& b);
  Mag half() const { return Mag(m, e - 1); }
};

// Arbitrary-precision complex number with a tracked absolute error bound:
// |stored - true| <= err (complex modulus).
class BigComplex {
 public:
  mpfr_t re, im;
  Mag err;

  explicit BigComplex(long prec);
  BigComplex(const BigComplex& o);
  BigComplex(BigComplex&& o) noexcept;
  BigComplex& operator=(const BigComplex& o);
  BigComplex& operator=(BigComplex&& o) noexcept;
  ~BigComplex();

  long prec() const { return mpfr_get_prec(re); }

  static BigComplex from_long(long v, long prec);
  static BigComplex from_rat(const Rat& re, const Rat& im, long prec);
  // exact value, err only from rounding
  static BigComplex sqrt_of_int(const Int& n, long prec);  // n >= 0

  BigComplex operator+(const BigComplex& o) const;
  BigComplex operator-(const BigComplex& o) const;
  BigComplex operator*(const BigComplex& o) const;
  BigComplex operator/(const BigComplex& o) const;
  BigComplex operator-() const;
  BigComplex conj() const;
  BigComplex pow_ui(unsigned long k) const;
  BigComplex inv() const;

  BigComplex mul_2exp(long k) const;  // exact scaling by 2^k

  // upper bound on |value| (including err), and lower bound (0 if unknown)
  Mag abs_ub() const;
  Mag abs_lb_value() const;  // lower bound on |stored value| only

  bool im_positive() const;  // certified Im > 0
  std::string str(size_t digits = 20) const;
};

// e(k/48) = exp(2*pi*i*k/48), err only from rounding
BigComplex root48(long k, long prec);

// sqrt(2) as BigComplex
BigComplex sqrt2(long prec);

// exp(2*pi*i*tau)
BigComplex exp2pii(const BigComplex& tau);

// upper bound on |a - b|
Mag dist_ub(const BigComplex& a, const BigComplex& b);

// Round the real part to the nearest integer; fails (returns false) unless
// |im| + |re - nearest| + err < slack.
bool certified_round(const BigComplex& z, const Rat& slack, Int& out);

}  // namespace weberyz

#endif
