#ifndef WEBERYZ_INTMATH_HPP
#define WEBERYZ_INTMATH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weberyz {

using Int = mpz_class;
using Rat = mpq_class;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define WYZ_CHECK(cond, msg) \
  do {                       \
    if (!(cond)) throw ::weberyz::MathError(msg); \
  } while (0)

// Deterministic Miller-Rabin, valid for n < 3.317e24 with the fixed
// witness set {2,...,37}.  Everything we certify is far below that.
bool is_prime(const Int& n);

struct Factorization {
  Int value;
  std::vector<std::pair<Int, unsigned>> factors;  // primes strictly increasing

  unsigned ord(const Int& p) const;
  bool is_prime_power() const { return factors.size() == 1; }
  std::vector<Int> divisors() const;
};

// Trial division + Pollard rho; every prime factor is certified by is_prime.
Factorization factorize(const Int& n);

int moebius(const Int& n);
Int euler_phi(const Int& n);

// Kronecker symbol (d/n), standard conventions including n = 2, n <= 0.
int kronecker(const Int& d, const Int& n);

// a_d(j) = mu(d/(d,j)) * phi(d) / phi(d/(d,j)), the Ramanujan sum c_d(j).
long a_coeff(long d, long j);

bool is_fundamental_discriminant(long d);

struct DiscriminantPair {
  long d1, d2;
  Int D;            // d1*d2 > 0
  bool admissible;  // both d_j = 1 mod 8 and 3 does not divide d_j

  DiscriminantPair(long d1_, long d2_);
};

// epsilon(p) for prime p with (D/p) != -1; throws MathError otherwise.
int epsilon_p(const DiscriminantPair& pair, const Int& p);

// epsilon(n) = prod epsilon(p)^ord_p(n); nullopt when undefined.
std::optional<int> epsilon_n(const DiscriminantPair& pair, const Int& n);

// F(m) = prod_{nn'=m} n^{epsilon(n')} when epsilon(m) = -1, else 1.
// Computed by the divisor product and independently by the gamma formula;
// disagreement aborts.  Result is certified to be 1 or a prime power.
Int frak_F(const DiscriminantPair& pair, const Int& m);

// F(m) = ell^gamma when epsilon(m) = -1 and a unique prime ell has
// epsilon(ell) = -1 and odd ord_ell(m).  nullopt means F(m) = 1 by this
// route (epsilon(m) != -1, undefined, or several such ell).
std::optional<std::pair<Int, Int>> gamma_exponent(const DiscriminantPair& pair, const Int& m);

// 1/2 iff (d1/3) = (d2/3) = -1 and 3 | s, else 1.
Rat kappa3(const DiscriminantPair& pair, long s);

// Exact integer square root; throws MathError if n is not a perfect square.
Int exact_isqrt(const Int& n);

inline std::vector<long> divisors_of_24() { return {1, 2, 3, 4, 6, 8, 12, 24}; }

}  // namespace weberyz

#endif
