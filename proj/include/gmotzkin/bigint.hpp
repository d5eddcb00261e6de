#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gm {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Quotient of an exact division; throws when the remainder is nonzero.
inline BigInt exact_div(const BigInt& num, const BigInt& den)
{
  if (den == 0)
    throw std::logic_error("division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0)
    throw std::logic_error("inexact division: " + num.get_str() + " / " + den.get_str());
  return q;
}

inline BigInt ipow(long base, unsigned long e)
{
  BigInt r;
  BigInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt sign_pow(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

}
