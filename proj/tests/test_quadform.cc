#include "weberyz/quadform.hpp"

#include <numeric>

#include "doctest.h"

using namespace weberyz;

namespace {

// independent class-number oracle: count all reduced triples directly
long class_number_brute(long d) {
  long count = 0;
  for (long a = 1; 3 * a * a <= -d; ++a)
    for (long b = -a; b <= a; ++b) {
      if ((b * b - d) % (4 * a) != 0) continue;
      long c = (b * b - d) / (4 * a);
      if (c < a) continue;
      if ((b == -a || b == a || a == c) && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("reduced form counts match the paper") {
  CHECK(reduced_forms(-31).size() == 3);   // class numbers 3 and 5
  CHECK(reduced_forms(-127).size() == 5);
  CHECK(reduced_forms(-55).size() == 4);
}

TEST_CASE("reduced form count equals brute-force class number") {
  for (long d = -3; d >= -400; --d) {
    long r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    CHECK(reduced_forms(d).size() == (size_t)class_number_brute(d));
  }
}

TEST_CASE("enumeration is deterministic and lexicographic") {
  auto forms = reduced_forms(-127);
  for (size_t i = 1; i < forms.size(); ++i) {
    bool less = forms[i - 1].a < forms[i].a ||
                (forms[i - 1].a == forms[i].a && forms[i - 1].b < forms[i].b);
    CHECK(less);
  }
}

TEST_CASE("admissible discriminants: parity case split covers all forms") {
  for (long d : {-31L, -55L, -103L, -127L, -151L, -199L, -223L, -271L})
    for (auto& f : reduced_forms(d)) {
      bool both_even = f.a % 2 == 0 && f.c % 2 == 0;
      bool a_even = f.a % 2 == 0 && f.c % 2 != 0;
      bool c_even = f.a % 2 != 0 && f.c % 2 == 0;
      CHECK((both_even || a_even || c_even));
    }
}

TEST_CASE("epsilon_d") {
  CHECK(epsilon_d(-31) == 1);
  CHECK(epsilon_d(-127) == 1);
  CHECK(epsilon_d(-7) == -1);
  CHECK_THROWS_AS(epsilon_d(-20), MathError);
}

TEST_CASE("cm_point") {
  auto forms = reduced_forms(-55);
  REQUIRE(forms[0].a == 1);
  REQUIRE(forms[0].b == 1);
  auto pt = cm_point(forms[0], 128);
  // tau = (-1 + i sqrt(55)) / 2
  mpfr_t e;
  mpfr_init2(e, 128);
  mpfr_set_d(e, -0.5, MPFR_RNDN);
  CHECK(mpfr_cmp(pt.tau.re, e) == 0);
  mpfr_sqrt_ui(e, 55, MPFR_RNDN);
  mpfr_div_2ui(e, e, 1, MPFR_RNDN);
  mpfr_sub(e, e, pt.tau.im, MPFR_RNDN);
  CHECK(mpfr_get_d(e, MPFR_RNDN) < 1e-30);
  mpfr_clear(e);
  CHECK(pt.tau.im_positive());

  // Im tau = sqrt(|d|)/(2a) > 0 for every reduced form
  for (auto& f : reduced_forms(-127)) CHECK(cm_point(f, 64).tau.im_positive());

  // the (2,1,7) form of -55
  FormClass g(2, 1, 7);
  CHECK(g.d == -55);
  auto pt2 = cm_point(g, 128);
  mpfr_init2(e, 128);
  mpfr_set_d(e, -0.25, MPFR_RNDN);
  CHECK(mpfr_cmp(pt2.tau.re, e) == 0);
  mpfr_clear(e);
}
