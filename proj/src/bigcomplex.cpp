#include "weberyz/bigcomplex.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>

namespace weberyz {

namespace {
// inflate by 2^-40 relative to stay conservative under double rounding
constexpr double kSlack = 1.0 + 0x1p-40;
}  // namespace

Mag::Mag(double v) {
  v = std::fabs(v);
  if (v == 0.0) {
    m = 0.0;
    e = 0;
    return;
  }
  int ex;
  m = std::frexp(v, &ex) * 2.0;  // m in [1,2)
  e = ex - 1;
}

Mag::Mag(double m_, long e_) {
  if (m_ == 0.0) {
    m = 0.0;
    e = 0;
    return;
  }
  int ex;
  m = std::frexp(m_, &ex) * 2.0;
  e = e_ + ex - 1;
}

double Mag::to_double() const { return std::ldexp(m, (int)std::max(std::min(e, 2000L), -2000L)); }

double Mag::log2() const { return is_zero() ? -1e300 : std::log2(m) + (double)e; }

Mag operator+(const Mag& a, const Mag& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Mag &hi = (a < b) ? b : a, &lo = (a < b) ? a : b;
  long shift = hi.e - lo.e;
  double add = shift > 80 ? 0x1p-79 : std::ldexp(lo.m, -(int)shift);
  return Mag((hi.m + add) * kSlack, hi.e);
}

Mag operator*(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) return Mag();
  return Mag(a.m * b.m * kSlack, a.e + b.e);
}

Mag max(const Mag& a, const Mag& b) { return (a < b) ? b : a; }

bool operator<(const Mag& a, const Mag& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  if (a.e != b.e) return a.e < b.e;
  return a.m < b.m;
}

namespace {

// upper bound on |x| as a Mag, for a single mpfr number
Mag mpfr_mag(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Mag();
  long e = mpfr_get_exp(x);  // 0.5 <= |m| < 1 scaled by 2^e
  return Mag(1.0, e);        // |x| < 2^e
}

// rounding error of one mpfr operation whose result is x
Mag ulp(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Mag::pow2(-mpfr_get_prec(x));
  return Mag::pow2(mpfr_get_exp(x) - mpfr_get_prec(x) + 1);
}

Mag round_err(const BigComplex& z, int ops = 1) {
  Mag u = max(ulp(z.re), ulp(z.im));
  return Mag((double)(4 * ops), 0) * u;
}

}  // namespace

BigComplex::BigComplex(long prec) {
  mpfr_init2(re, prec);
  mpfr_init2(im, prec);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
}

BigComplex::BigComplex(const BigComplex& o) : err(o.err) {
  mpfr_init2(re, mpfr_get_prec(o.re));
  mpfr_init2(im, mpfr_get_prec(o.im));
  mpfr_set(re, o.re, MPFR_RNDN);
  mpfr_set(im, o.im, MPFR_RNDN);
}

BigComplex::BigComplex(BigComplex&& o) noexcept : err(o.err) {
  mpfr_init2(re, 2);
  mpfr_init2(im, 2);
  mpfr_swap(re, o.re);
  mpfr_swap(im, o.im);
}

BigComplex& BigComplex::operator=(const BigComplex& o) {
  if (this != &o) {
    mpfr_set_prec(re, mpfr_get_prec(o.re));
    mpfr_set_prec(im, mpfr_get_prec(o.im));
    mpfr_set(re, o.re, MPFR_RNDN);
    mpfr_set(im, o.im, MPFR_RNDN);
    err = o.err;
  }
  return *this;
}

BigComplex& BigComplex::operator=(BigComplex&& o) noexcept {
  mpfr_swap(re, o.re);
  mpfr_swap(im, o.im);
  err = o.err;
  return *this;
}

BigComplex::~BigComplex() {
  mpfr_clear(re);
  mpfr_clear(im);
}

BigComplex BigComplex::from_long(long v, long prec) {
  BigComplex z(prec);
  mpfr_set_si(z.re, v, MPFR_RNDN);
  return z;
}

BigComplex BigComplex::from_rat(const Rat& re_, const Rat& im_, long prec) {
  BigComplex z(prec);
  mpfr_set_q(z.re, re_.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(z.im, im_.get_mpq_t(), MPFR_RNDN);
  z.err = round_err(z, 2);
  return z;
}

BigComplex BigComplex::sqrt_of_int(const Int& n, long prec) {
  assert(n >= 0);
  BigComplex z(prec);
  mpfr_set_z(z.re, n.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(z.re, z.re, MPFR_RNDN);
  z.err = round_err(z, 2);
  return z;
}

BigComplex BigComplex::operator+(const BigComplex& o) const {
  BigComplex z(prec());
  mpfr_add(z.re, re, o.re, MPFR_RNDN);
  mpfr_add(z.im, im, o.im, MPFR_RNDN);
  z.err = err + o.err + round_err(z);
  return z;
}

BigComplex BigComplex::operator-(const BigComplex& o) const {
  BigComplex z(prec());
  mpfr_sub(z.re, re, o.re, MPFR_RNDN);
  mpfr_sub(z.im, im, o.im, MPFR_RNDN);
  z.err = err + o.err + round_err(z);
  return z;
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
  BigComplex z(prec());
  mpfr_t t1, t2;
  mpfr_init2(t1, prec());
  mpfr_init2(t2, prec());
  mpfr_mul(t1, re, o.re, MPFR_RNDN);
  mpfr_mul(t2, im, o.im, MPFR_RNDN);
  mpfr_sub(z.re, t1, t2, MPFR_RNDN);
  mpfr_mul(t1, re, o.im, MPFR_RNDN);
  mpfr_mul(t2, im, o.re, MPFR_RNDN);
  mpfr_add(z.im, t1, t2, MPFR_RNDN);
  mpfr_clear(t1);
  mpfr_clear(t2);
  Mag a = abs_ub(), b = o.abs_ub();
  z.err = a * o.err + b * err + err * o.err + round_err(z, 6);
  return z;
}

BigComplex BigComplex::inv() const {
  Mag lb = abs_lb_value();
  // require err < |value|/2 so the true value stays away from 0
  assert(!lb.is_zero() && err + err < lb);
  BigComplex z(prec());
  mpfr_t n, t1, t2;
  mpfr_init2(n, prec());
  mpfr_init2(t1, prec());
  mpfr_init2(t2, prec());
  mpfr_mul(t1, re, re, MPFR_RNDN);
  mpfr_mul(t2, im, im, MPFR_RNDN);
  mpfr_add(n, t1, t2, MPFR_RNDN);
  mpfr_div(z.re, re, n, MPFR_RNDN);
  mpfr_div(z.im, im, n, MPFR_RNDN);
  mpfr_neg(z.im, z.im, MPFR_RNDN);
  mpfr_clear(n);
  mpfr_clear(t1);
  mpfr_clear(t2);
  // |1/(v+d) - 1/v| <= |d| / (|v| (|v|-|d|)) <= 2 err / lb^2
  Mag lb2 = lb * lb;
  z.err = Mag(2.0 / lb2.m, -lb2.e) * err + round_err(z, 6);
  return z;
}

BigComplex BigComplex::operator/(const BigComplex& o) const { return *this * o.inv(); }

BigComplex BigComplex::operator-() const {
  BigComplex z(*this);
  mpfr_neg(z.re, z.re, MPFR_RNDN);
  mpfr_neg(z.im, z.im, MPFR_RNDN);
  return z;
}

BigComplex BigComplex::conj() const {
  BigComplex z(*this);
  mpfr_neg(z.im, z.im, MPFR_RNDN);
  return z;
}

BigComplex BigComplex::pow_ui(unsigned long k) const {
  BigComplex acc = from_long(1, prec());
  BigComplex base(*this);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

BigComplex BigComplex::mul_2exp(long k) const {
  BigComplex z(*this);
  mpfr_mul_2si(z.re, z.re, k, MPFR_RNDN);
  mpfr_mul_2si(z.im, z.im, k, MPFR_RNDN);
  z.err = err * Mag::pow2(k);
  return z;
}

Mag BigComplex::abs_ub() const { return mpfr_mag(re) + mpfr_mag(im) + err; }

Mag BigComplex::abs_lb_value() const {
  // |z| >= max(|re|,|im|) / 2 is wrong in general; use sqrt bound via doubles
  // on exponents: |z| >= 2^(E-1) where E = max exponent, provided nonzero.
  if (mpfr_zero_p(re) && mpfr_zero_p(im)) return Mag();
  long e1 = mpfr_zero_p(re) ? -9000000000L : mpfr_get_exp(re);
  long e2 = mpfr_zero_p(im) ? -9000000000L : mpfr_get_exp(im);
  return Mag::pow2(std::max(e1, e2) - 2);  // |x| >= 2^(exp-1) for the bigger leg, /2 margin
}

bool BigComplex::im_positive() const {
  if (mpfr_sgn(im) <= 0) return false;
  return err < Mag::pow2(mpfr_get_exp(im) - 1);
}

std::string BigComplex::str(size_t digits) const {
  char *r, *i;
  mpfr_asprintf(&r, "%.*Rg", (int)digits, re);
  mpfr_asprintf(&i, "%.*Rg", (int)digits, im);
  std::string s = std::string(r) + " + " + i + "*I (err 2^" + std::to_string((long)err.log2()) + ")";
  mpfr_free_str(r);
  mpfr_free_str(i);
  return s;
}

BigComplex root48(long k, long prec) {
  k = ((k % 48) + 48) % 48;
  BigComplex z(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul_si(t, t, 2 * k, MPFR_RNDN);
  mpfr_div_ui(t, t, 48, MPFR_RNDN);
  mpfr_sin_cos(z.im, z.re, t, MPFR_RNDN);
  mpfr_clear(t);
  z.err = round_err(z, 4);
  return z;
}

BigComplex sqrt2(long prec) {
  BigComplex z(prec);
  mpfr_sqrt_ui(z.re, 2, MPFR_RNDN);
  z.err = round_err(z);
  return z;
}

BigComplex exp2pii(const BigComplex& tau) {
  long prec = tau.prec();
  BigComplex z(prec);
  mpfr_t twopi, a, r;
  mpfr_init2(twopi, prec);
  mpfr_init2(a, prec);
  mpfr_init2(r, prec);
  mpfr_const_pi(twopi, MPFR_RNDN);
  mpfr_mul_2ui(twopi, twopi, 1, MPFR_RNDN);
  // |e^{2 pi i tau}| = e^{-2 pi Im tau}
  mpfr_mul(r, twopi, tau.im, MPFR_RNDN);
  mpfr_neg(r, r, MPFR_RNDN);
  mpfr_exp(r, r, MPFR_RNDN);
  mpfr_mul(a, twopi, tau.re, MPFR_RNDN);
  mpfr_sin_cos(z.im, z.re, a, MPFR_RNDN);
  mpfr_mul(z.re, z.re, r, MPFR_RNDN);
  mpfr_mul(z.im, z.im, r, MPFR_RNDN);
  // |exp(2 pi i (tau+d)) - exp(2 pi i tau)| <= |result| * (e^{2 pi |d|} - 1)
  Mag scale = mpfr_mag(r);
  Mag input = Mag(8.0) * tau.err;  // 2*pi*|d| * safety < 8|d|, then e^x-1 < 1.2x for x<=0.3
  assert(input.log2() < -2);
  mpfr_clear(twopi);
  mpfr_clear(a);
  mpfr_clear(r);
  z.err = scale * input + round_err(z, 8);
  return z;
}

Mag dist_ub(const BigComplex& a, const BigComplex& b) {
  BigComplex d = a - b;
  return d.abs_ub();
}

bool certified_round(const BigComplex& z, const Rat& slack, Int& out) {
  mpfr_t r;
  mpfr_init2(r, mpfr_get_prec(z.re));
  mpfr_round(r, z.re);
  Int n;
  mpfr_get_z(n.get_mpz_t(), r, MPFR_RNDN);
  mpfr_sub_z(r, z.re, n.get_mpz_t(), MPFR_RNDN);
  Mag residual = mpfr_mag(r) + mpfr_mag(z.im) + z.err + Mag::pow2(-mpfr_get_prec(z.re) + 4);
  mpfr_clear(r);
  double bound = std::log2(slack.get_d());
  if (residual.log2() >= bound) return false;
  out = n;
  return true;
}

}  // namespace weberyz
