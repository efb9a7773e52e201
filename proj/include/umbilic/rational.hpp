#pragma once

#include <gmpxx.h>

#include <string>

namespace umbilic {

/// Exact rational number. GMP keeps it canonical: gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;
using Integer = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

/// 2^e as a rational; negative exponents allowed.
inline Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

inline Rational rpow(const Rational& base, unsigned e) {
  Rational result(1);
  Rational b = base;
  while (e != 0) {
    if ((e & 1U) != 0) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

}  // namespace umbilic
