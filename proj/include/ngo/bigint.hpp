#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ngo {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt factorial(unsigned long k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace ngo
