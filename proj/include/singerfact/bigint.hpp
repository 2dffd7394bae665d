#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace singerfact {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt big_factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// binomial(n, k) with the usual convention binom(n, k) = 0 for k < 0 or k > n.
inline BigInt big_binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline BigRat rat_pow(const BigRat& base, long e) {
  if (e >= 0) {
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(),
               static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(),
               static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  }
  BigRat inv = 1 / base;
  return rat_pow(inv, -e);
}

}  // namespace singerfact
