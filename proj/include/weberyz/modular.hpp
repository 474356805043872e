#ifndef WEBERYZ_MODULAR_HPP
#define WEBERYZ_MODULAR_HPP

#include <array>
#include <vector>

#include "weberyz/bigcomplex.hpp"
#include "weberyz/quadform.hpp"

namespace weberyz {

// Dedekind eta, certified error < 2^-prec.  Im tau must be positive.
BigComplex eta(const BigComplex& tau, long prec);

struct WeberValues {
  BigComplex f, f1, f2;
};

// The three level-48 eta quotients:
//   f  = zeta48^-1 eta((tau+1)/2) / eta(tau)
//   f1 = eta(tau/2) / eta(tau)
//   f2 = sqrt(2) eta(2 tau) / eta(tau)
WeberValues weber(const BigComplex& tau, long prec);

// j = (f2^24 + 16)^3 / f2^24
BigComplex j_invariant(const BigComplex& tau, long prec);

// Exact integer q-expansion of j to the given order (j = 1/q + 744 + ...),
// computed from E4^3 / Delta.  Coefficient k is of q^k, starting at q^-1.
std::vector<Int> j_qexp_coeffs(int order);

// Independent evaluation of j by the truncated classical q-expansion.
BigComplex j_by_qexp(const BigComplex& tau, long prec);

// Weber class invariant f(a) of Proposition-1.1 type for admissible d.
BigComplex class_invariant(const FormClass& f, long prec);

// --- Gamma_0(2) ---

struct Gamma02Element {
  Int a, b, c, d;

  Gamma02Element(Int a_, Int b_, Int c_, Int d_);
  Gamma02Element operator*(const Gamma02Element& o) const;
  Gamma02Element inverse() const;
  bool operator==(const Gamma02Element& o) const = default;

  static Gamma02Element T(long k = 1);  // (1 k; 0 1)
  static Gamma02Element B(long k = 1);  // (1 0; -2k 1)
  static Gamma02Element minus_identity();

  BigComplex act(const BigComplex& tau) const;
};

struct WordToken {
  enum Kind { kT, kB, kMinus } kind;
  long exp;  // unused for kMinus
};

// g as a word over {T^k, B^k, -I}; the product of the word equals g exactly.
std::vector<WordToken> gamma02_decompose(const Gamma02Element& g);

// chi(g) = zeta24^e, e = (sum of T exponents) - (sum of B exponents) mod 24.
long chi_exponent(const Gamma02Element& g);

// g in Gamma_{chi,dd}  iff  (24/dd) * chi_exponent(g) = 0 mod 24
bool in_gamma_chi(const Gamma02Element& g, long dd);

}  // namespace weberyz

#endif
