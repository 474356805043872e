#include "weberyz/intmath.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace weberyz {

namespace {

Int pow_mod(Int base, Int exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

Int pollard_rho(const Int& n) {
  // Brent's variant; n odd composite, no small factors.
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int diff;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 82)
    throw MathError("is_prime: out of certified Miller-Rabin range");
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long a : small)
    if (miller_rabin_witness(n, Int(a), d, s)) return false;
  return true;
}

unsigned Factorization::ord(const Int& p) const {
  for (auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

std::vector<Int> Factorization::divisors() const {
  std::vector<Int> out{1};
  for (auto& [p, e] : factors) {
    size_t len = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < len; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factorize(const Int& n) {
  if (n < 1) throw MathError("factorize: argument must be positive");
  std::map<Int, unsigned> acc;
  std::vector<Int> stack;
  Int m = n;
  for (unsigned long p = 2; p < 100000 && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      acc[Int(p)]++;
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) stack.push_back(m);
  while (!stack.empty()) {
    Int v = stack.back();
    stack.pop_back();
    if (v == 1) continue;
    if (is_prime(v)) {
      acc[v]++;
      continue;
    }
    if (mpz_perfect_square_p(v.get_mpz_t())) {
      Int r;
      mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
      stack.push_back(r);
      stack.push_back(r);
      continue;
    }
    Int d = pollard_rho(v);
    stack.push_back(d);
    stack.push_back(v / d);
  }
  Factorization f;
  f.value = n;
  for (auto& [p, e] : acc) f.factors.emplace_back(p, e);
  Int check = 1;
  for (auto& [p, e] : f.factors) {
    assert(is_prime(p));
    for (unsigned k = 0; k < e; ++k) check *= p;
  }
  assert(check == n);
  return f;
}

int moebius(const Int& n) {
  if (n == 1) return 1;
  auto f = factorize(n);
  for (auto& [p, e] : f.factors)
    if (e > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

Int euler_phi(const Int& n) {
  auto f = factorize(n);
  Int r = 1;
  for (auto& [p, e] : f.factors) {
    r *= p - 1;
    for (unsigned k = 1; k < e; ++k) r *= p;
  }
  return r;
}

int kronecker(const Int& d, const Int& n) {
  return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t());
}

long a_coeff(long d, long j) {
  if (d < 1) throw MathError("a_coeff: d must be positive");
  long g = std::gcd(d, ((j % d) + d) % d);  // gcd(d, 0) = d
  long q = d / g;
  long mu = moebius(Int(q));
  if (mu == 0) return 0;
  Int val = mu * euler_phi(Int(d)) / euler_phi(Int(q));
  return val.get_si();
}

bool is_fundamental_discriminant(long d) {
  if (d == 1 || d == 0) return false;
  auto squarefree = [](long n) {
    n = std::abs(n);
    auto f = factorize(Int(n));
    for (auto& [p, e] : f.factors)
      if (e > 1) return false;
    return true;
  };
  long r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r == 0) {
    long m = d / 4;
    long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

DiscriminantPair::DiscriminantPair(long d1_, long d2_) : d1(d1_), d2(d2_) {
  if (d1 >= 0 || d2 >= 0) throw MathError("DiscriminantPair: discriminants must be negative");
  if (!is_fundamental_discriminant(d1) || !is_fundamental_discriminant(d2))
    throw MathError("DiscriminantPair: discriminants must be fundamental");
  if (std::gcd(d1, d2) != 1) throw MathError("DiscriminantPair: discriminants must be coprime");
  D = Int(d1) * Int(d2);
  auto ok = [](long d) { return ((d % 8) + 8) % 8 == 1 && d % 3 != 0; };
  admissible = ok(d1) && ok(d2);
}

int epsilon_p(const DiscriminantPair& pair, const Int& p) {
  if (!is_prime(p)) throw MathError("epsilon_p: p must be prime");
  if (kronecker(pair.D, p) == -1) throw MathError("epsilon_p: undefined, (d1*d2/p) = -1");
  if (mpz_divisible_p(Int(pair.d1).get_mpz_t(), p.get_mpz_t()) == 0)
    return kronecker(Int(pair.d1), p);
  return kronecker(Int(pair.d2), p);
}

std::optional<int> epsilon_n(const DiscriminantPair& pair, const Int& n) {
  if (n < 1) throw MathError("epsilon_n: n must be positive");
  int sign = 1;
  for (auto& [p, e] : factorize(n).factors) {
    if (kronecker(pair.D, p) == -1) return std::nullopt;
    if (e % 2 == 1 && epsilon_p(pair, p) == -1) sign = -sign;
  }
  return sign;
}

std::optional<std::pair<Int, Int>> gamma_exponent(const DiscriminantPair& pair, const Int& m) {
  auto em = epsilon_n(pair, m);
  if (!em || *em != -1) return std::nullopt;
  auto f = factorize(m);
  std::vector<Int> odd_minus;  // primes with epsilon = -1 and odd exponent
  for (auto& [p, e] : f.factors)
    if (e % 2 == 1 && epsilon_p(pair, p) == -1) odd_minus.push_back(p);
  // epsilon(m) = -1 forces an odd count; with more than one such prime the
  // divisor product telescopes to 1 and no single ell exists.
  if (odd_minus.size() != 1) return std::nullopt;
  Int ell = odd_minus[0];
  Int gamma = 1;
  for (auto& [p, e] : f.factors) {
    int ep = epsilon_p(pair, p);
    if (ep == 1)
      gamma *= Int(e + 1);
    else if (p == ell)
      gamma *= Int((e + 1) / 2);
    // epsilon(p) = -1 with even exponent contributes factor 1
  }
  return std::make_pair(ell, gamma);
}

Int frak_F(const DiscriminantPair& pair, const Int& m) {
  if (m < 1) throw MathError("frak_F: m must be positive");
  auto em = epsilon_n(pair, m);
  Int result = 1;
  if (em && *em == -1) {
    Rat prod = 1;
    auto f = factorize(m);
    for (const Int& n : f.divisors()) {
      auto e = epsilon_n(pair, m / n);
      assert(e.has_value());
      if (*e == 1)
        prod *= n;
      else
        prod /= n;
    }
    prod.canonicalize();
    if (prod.get_den() != 1) throw MathError("frak_F: divisor product not an integer");
    result = prod.get_num();
    if (result != 1 && !factorize(result).is_prime_power())
      throw MathError("frak_F: result not a prime power");
  }
  // cross-check against the gamma formula
  auto g = gamma_exponent(pair, m);
  Int via_gamma = 1;
  if (g) {
    via_gamma = 1;
    for (Int i = 0; i < g->second; ++i) via_gamma *= g->first;
  }
  if (via_gamma != result) throw MathError("frak_F: divisor product and gamma formula disagree");
  return result;
}

Rat kappa3(const DiscriminantPair& pair, long s) {
  if (24 % s != 0) throw MathError("kappa3: s must divide 24");
  if (s % 3 == 0 && kronecker(Int(pair.d1), 3) == -1 && kronecker(Int(pair.d2), 3) == -1)
    return Rat(1, 2);
  return 1;
}

Int exact_isqrt(const Int& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t()))
    throw MathError("exact_isqrt: not a perfect square");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace weberyz
