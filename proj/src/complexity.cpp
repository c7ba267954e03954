#include "firstfall/complexity.hpp"

#include <mpfr.h>

#include <cmath>

#include "firstfall/error.hpp"

namespace firstfall {

ComplexityEstimate complexity_estimate(const ComplexityParams& p, bool allow_omega_two) {
  if (p.n < 1 || p.d < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and d >= 1");
  const bool two = p.omega == 2.0;
  if (!(p.omega > 2.0 && p.omega <= 3.0) && !(two && allow_omega_two))
    throw Error(ErrorKind::OmegaOutOfRange, "omega must satisfy 2 < omega <= 3");

  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p.n + p.d), static_cast<unsigned long>(p.d));

  // Enough bits to hold the integer part exactly plus guard bits.
  const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(binom.get_mpz_t(), 2) * 3 + 128);
  mpfr_t base, power, lg;
  mpfr_inits2(bits, base, power, lg, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(base, binom.get_mpz_t(), MPFR_RNDN);
  mpfr_set_d(power, p.omega, MPFR_RNDN);
  mpfr_pow(power, base, power, MPFR_RNDN);
  mpfr_log2(lg, power, MPFR_RNDN);

  ComplexityEstimate out;
  mpfr_get_z(out.value.get_mpz_t(), power, MPFR_RNDN);
  out.log2 = std::round(mpfr_get_d(lg, MPFR_RNDN) * 100.0) / 100.0;
  out.outside_range = two;
  mpfr_clears(base, power, lg, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace firstfall
