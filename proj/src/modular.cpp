#include "weberyz/modular.hpp"

#include <cmath>

namespace weberyz {

namespace {

// eta(tau) for |Re tau| <= 1/2 (after T-reduction), by the pentagonal series
//   eta = q^{1/24} sum_{k in Z} (-1)^k q^{k(3k-1)/2}.
// w = q^{1/24} is computed first and q = w^24, so the fractional power is
// coherent with the series argument.
BigComplex eta_reduced(const BigComplex& tau, long wp) {
  BigComplex w = exp2pii(BigComplex::from_rat(Rat(1, 24), Rat(0), wp) * tau);
  BigComplex q = w.pow_ui(24);
  double logq = -2.0 * M_PI * mpfr_get_d(tau.im, MPFR_RNDN);  // log |q|
  WYZ_CHECK(logq < -1e-9, "eta: Im tau must be positive");
  // stop when the geometric tail 2 |q|^E / (1 - |q|) < 2^-(wp+8)
  double denom = -std::log1p(-std::exp(logq));
  BigComplex sum = BigComplex::from_long(1, wp);
  Mag tail;
  for (long k = 1;; ++k) {
    Int e1 = Int(k) * (3 * k - 1) / 2, e2 = Int(k) * (3 * k + 1) / 2;
    BigComplex term = q.pow_ui(e1.get_ui()) + q.pow_ui(e2.get_ui());
    if (k % 2 == 1)
      sum = sum - term;
    else
      sum = sum + term;
    double next = (double)((3 * (k + 1) - 1) * (k + 1) / 2);
    double log2tail = (next * logq + M_LN2 + denom) / M_LN2;
    if (log2tail < -(double)(wp + 8)) {
      tail = Mag::pow2((long)log2tail + 1);
      break;
    }
    WYZ_CHECK(k < 4000000, "eta: series does not converge fast enough");
  }
  sum.err = sum.err + tail;
  return w * sum;
}

// tau shifted by an integer so |Re| <= 1/2, with the eta multiplier
// eta(tau) = zeta24^n eta(tau - n).
BigComplex eta_t_reduced(const BigComplex& tau, long wp) {
  mpfr_t r;
  mpfr_init2(r, 64);
  mpfr_round(r, tau.re);
  long n = mpfr_get_si(r, MPFR_RNDN);
  mpfr_clear(r);
  BigComplex shifted(tau);
  mpfr_sub_si(shifted.re, shifted.re, n, MPFR_RNDN);
  shifted.err = tau.err + Mag::pow2(-wp + 2);
  BigComplex val = eta_reduced(shifted, wp);
  if (n % 24 == 0) return val;
  return root48(2 * (n % 24), wp) * val;
}

}  // namespace

namespace {
// The certification target an eta evaluation can honestly reach, given the
// accuracy of its input point.
long eta_reachable(const BigComplex& x, long want) {
  if (x.err.is_zero()) return want;
  long avail = (long)(-x.err.log2()) - 12;
  return std::min(want, avail);
}
}  // namespace

BigComplex eta(const BigComplex& tau, long prec) {
  WYZ_CHECK(mpfr_sgn(tau.im) > 0, "eta: not in upper half plane");
  WYZ_CHECK(tau.err.is_zero() || tau.err.log2() < -(double)prec - 8,
            "eta: input tau too inexact for the requested precision");
  for (long wp = prec + 64;; wp *= 2) {
    BigComplex t(wp);
    mpfr_set(t.re, tau.re, MPFR_RNDN);
    mpfr_set(t.im, tau.im, MPFR_RNDN);
    t.err = tau.err + Mag::pow2(-wp + 2);
    BigComplex v = eta_t_reduced(t, wp);
    if (v.err.log2() < -(double)prec) return v;
    WYZ_CHECK(wp < 64 * prec + 16384, "eta: cannot reach requested precision");
  }
}

WeberValues weber(const BigComplex& tau, long prec) {
  long wp = prec + 64;
  BigComplex t(wp);
  mpfr_set(t.re, tau.re, MPFR_RNDN);
  mpfr_set(t.im, tau.im, MPFR_RNDN);
  t.err = tau.err + Mag::pow2(-wp + 2);
  long et = eta_reachable(t, prec + 32);
  BigComplex half = BigComplex::from_rat(Rat(1, 2), Rat(0), wp);
  BigComplex one = BigComplex::from_long(1, wp);
  BigComplex eta_tau = eta(t, et);
  BigComplex inv = eta_tau.inv();
  WeberValues w{
      root48(-1, wp) * eta((t + one) * half, et) * inv,
      eta(t * half, et) * inv,
      sqrt2(wp) * eta(t + t, et) * inv,
  };
  return w;
}

BigComplex j_invariant(const BigComplex& tau, long prec) {
  long wp = prec + 96;
  WeberValues w = weber(tau, prec + 64);
  BigComplex x = w.f2.pow_ui(24);
  BigComplex sixteen = BigComplex::from_long(16, wp);
  return (x + sixteen).pow_ui(3) / x;
}

std::vector<Int> j_qexp_coeffs(int order) {
  // E4 = 1 + 240 sum sigma_3(n) q^n,  Delta = q prod (1-q^n)^24.
  int N = order + 2;
  std::vector<Int> e4(N, 0), delta(N, 0);
  e4[0] = 1;
  for (int n = 1; n < N; ++n) {
    Int s3 = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s3 += Int(d) * d * d;
    e4[n] = 240 * s3;
  }
  // prod (1-q^n)^24 via repeated sparse multiplication
  std::vector<Int> prod(N, 0);
  prod[0] = 1;
  for (int n = 1; n < N; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = N - 1 - n; i >= 0; --i) prod[i + n] -= prod[i];
  // j = E4^3 / (q * prod)  as a Laurent series starting at q^-1
  std::vector<Int> e43(N, 0);
  {
    std::vector<Int> sq(N, 0);
    for (int i = 0; i < N; ++i)
      for (int k = 0; i + k < N; ++k) sq[i + k] += e4[i] * e4[k];
    for (int i = 0; i < N; ++i)
      for (int k = 0; i + k < N; ++k) e43[i + k] += sq[i] * e4[k];
  }
  // divide e43 by prod (both power series, prod[0] = 1)
  std::vector<Int> qser(N, 0);
  for (int n = 0; n < N; ++n) {
    Int acc = e43[n];
    for (int k = 1; k <= n; ++k) acc -= prod[k] * qser[n - k];
    qser[n] = acc;
  }
  // shift by q^-1: coefficient of q^{k} in j is qser[k+1]
  std::vector<Int> out(order + 2);
  for (int k = -1; k <= order; ++k) out[k + 1] = qser[k + 1];
  return out;
}

BigComplex j_by_qexp(const BigComplex& tau, long prec) {
  long wp = prec + 64;
  BigComplex t(wp);
  mpfr_set(t.re, tau.re, MPFR_RNDN);
  mpfr_set(t.im, tau.im, MPFR_RNDN);
  t.err = tau.err;
  double logq = -2.0 * M_PI * mpfr_get_d(t.im, MPFR_RNDN);
  double log2q = logq / M_LN2;
  WYZ_CHECK(log2q < -4.0, "j_by_qexp: q too large for the truncated expansion");
  // choose K with |c_K| |q|^K small: |c_K| <= e^{4 pi sqrt(K)}
  int K = 16;
  while (4.0 * M_PI * std::sqrt((double)K + 1) / M_LN2 + (K + 1) * log2q > -(double)(prec + 8)) ++K;
  auto coeffs = j_qexp_coeffs(K);
  BigComplex q = exp2pii(t);
  BigComplex acc = BigComplex::from_rat(Rat(coeffs[0]), Rat(0), wp);  // c_{-1} = 1
  // Horner from the top: j = q^-1 (c_{-1}... ) evaluate sum_{k>=-1} c_k q^k
  BigComplex sum(wp);
  for (int k = (int)coeffs.size() - 1; k >= 1; --k) {
    sum = sum * q;
    sum = sum + BigComplex::from_rat(Rat(coeffs[k]), Rat(0), wp);
  }
  sum = sum + acc * q.inv();
  sum.err = sum.err + Mag::pow2((long)(4.0 * M_PI * std::sqrt((double)K + 1) / M_LN2 + (K + 1) * log2q) + 2);
  return sum;
}

BigComplex class_invariant(const FormClass& f, long prec) {
  WYZ_CHECK(((f.d % 8) + 8) % 8 == 1 && f.d % 3 != 0, "class_invariant: inadmissible discriminant");
  long a = f.a, b = f.b, c = f.c;
  WYZ_CHECK(a % 2 == 0 || c % 2 == 0, "class_invariant: a, c cannot both be odd");
  long wp = prec + 64;
  CmPoint pt = cm_point(f, wp);
  WeberValues w = weber(pt.tau, wp);
  int eps = epsilon_d(f.d);
  Int e48;
  BigComplex val(wp);
  if (a % 2 == 0 && c % 2 == 0) {
    e48 = Int(b) * (Int(a) - c - Int(a) * c * c);
    val = w.f;
    eps = 1;
  } else if (a % 2 == 0) {
    e48 = Int(b) * (Int(a) - c - Int(a) * c * c);
    val = w.f1;
  } else {
    e48 = Int(b) * (Int(a) - c + Int(a) * c * c);
    val = w.f2;
  }
  long e = mpz_class(e48 % 48).get_si();
  BigComplex out = root48(e, wp) * val;
  if (eps < 0) out = -out;
  return out;
}

// --- Gamma_0(2) ---

Gamma02Element::Gamma02Element(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  WYZ_CHECK(a * d - b * c == 1, "Gamma02Element: determinant must be 1");
  WYZ_CHECK(c % 2 == 0, "Gamma02Element: lower left entry must be even");
}

Gamma02Element Gamma02Element::operator*(const Gamma02Element& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Gamma02Element Gamma02Element::inverse() const { return {d, -b, -c, a}; }

Gamma02Element Gamma02Element::T(long k) { return {1, k, 0, 1}; }
Gamma02Element Gamma02Element::B(long k) { return {1, 0, -2 * k, 1}; }
Gamma02Element Gamma02Element::minus_identity() { return {-1, 0, 0, -1}; }

BigComplex Gamma02Element::act(const BigComplex& tau) const {
  long wp = tau.prec();
  auto lift = [&](const Int& v) { return BigComplex::from_rat(Rat(v), Rat(0), wp); };
  return (lift(a) * tau + lift(b)) / (lift(c) * tau + lift(d));
}

namespace {
// nearest-integer division, |x - round_div(x,y)*y| <= |y|/2
Int round_div(const Int& x, const Int& y) {
  Int q = x / y;  // truncated
  Int r = x - q * y;
  if (2 * abs(r) > abs(y)) q += (sgn(r) == sgn(y)) ? 1 : -1;
  return q;
}
}  // namespace

std::vector<WordToken> gamma02_decompose(const Gamma02Element& g) {
  std::vector<WordToken> word;
  Int a = g.a, b = g.b, c = g.c, d = g.d;
  auto apply_left_Tinv = [&](long k) {  // h <- T^-k h, emit T^k
    a -= k * c;
    b -= k * d;
    word.push_back({WordToken::kT, k});
  };
  auto apply_left_Binv = [&](long k) {  // h <- B^-k h, emit B^k
    c += 2 * k * a;
    d += 2 * k * b;
    word.push_back({WordToken::kB, k});
  };
  while (c != 0) {
    // a is odd and c is even, so |a| != |c| and one branch always advances
    if (abs(c) > abs(a)) {
      Int q = round_div(-c, 2 * a);
      WYZ_CHECK(q.fits_slong_p(), "gamma02_decompose: exponent overflow");
      Int old = abs(c);
      apply_left_Binv(q.get_si());
      WYZ_CHECK(abs(c) < old, "gamma02_decompose: no progress (B step)");
    } else {
      Int q = round_div(a, c);
      WYZ_CHECK(q.fits_slong_p() && q != 0, "gamma02_decompose: exponent overflow");
      Int old = abs(a);
      apply_left_Tinv(q.get_si());
      WYZ_CHECK(abs(a) < old, "gamma02_decompose: no progress (T step)");
    }
  }
  WYZ_CHECK(a == d && (a == 1 || a == -1) && c == 0, "gamma02_decompose: not unimodular");
  if (a == -1) {
    word.push_back({WordToken::kMinus, 0});
    b = -b;
  }
  if (b != 0) {
    WYZ_CHECK(b.fits_slong_p(), "gamma02_decompose: exponent overflow");
    word.push_back({WordToken::kT, b.get_si()});
  }
  return word;
}

long chi_exponent(const Gamma02Element& g) {
  long e = 0;
  for (auto& t : gamma02_decompose(g)) {
    if (t.kind == WordToken::kT) e += t.exp;
    if (t.kind == WordToken::kB) e -= t.exp;
  }
  return ((e % 24) + 24) % 24;
}

bool in_gamma_chi(const Gamma02Element& g, long dd) {
  WYZ_CHECK(24 % dd == 0, "in_gamma_chi: dd must divide 24");
  return (24 / dd) * chi_exponent(g) % 24 == 0;
}

}  // namespace weberyz
