#ifndef WEBERYZ_QUADFORM_HPP
#define WEBERYZ_QUADFORM_HPP

#include <vector>

#include "weberyz/bigcomplex.hpp"
#include "weberyz/intmath.hpp"

namespace weberyz {

// Primitive positive definite binary quadratic form a x^2 + b xy + c y^2,
// the ideal [a, (-b+sqrt(d))/2] of the order of discriminant d = b^2 - 4ac.
struct FormClass {
  long a, b, c;
  long d;

  FormClass(long a_, long b_, long c_);
  bool is_reduced() const;
};

// One reduced form per class of Cl(d), ordered lexicographically by (a, b).
std::vector<FormClass> reduced_forms(long d);

// (-1)^((d-1)/8) for d = 1 mod 8.
int epsilon_d(long d);

struct CmPoint {
  BigComplex tau;
  FormClass source;
};

// tau = (-b + i sqrt(|d|)) / (2a)
CmPoint cm_point(const FormClass& f, long prec);

}  // namespace weberyz

#endif
