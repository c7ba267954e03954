#pragma once

#include <gmpxx.h>

namespace firstfall {

struct ComplexityParams {
  int n = 0;
  int d = 0;
  double omega = 2.81;
};

struct ComplexityEstimate {
  mpz_class value;        ///< C(n+d, d)^omega rounded to the nearest integer
  double log2 = 0;        ///< rounded to 2 decimals
  bool outside_range = false;  ///< omega = 2 comparison row
};

/// C(n+d, d)^omega with an exact binomial and the power taken in MPFR.
/// Requires 2 < omega <= 3; omega == 2 only with allow_omega_two.
ComplexityEstimate complexity_estimate(const ComplexityParams& p, bool allow_omega_two = false);

}  // namespace firstfall
