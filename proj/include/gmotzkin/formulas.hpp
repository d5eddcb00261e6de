#pragma once

#include "gmotzkin/bigint.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gm {

// Pascal triangle cache; rows beyond the cache fall back to GMP.
class Binomial {
public:
  explicit Binomial(unsigned rows);
  // Zero for k < 0 or k > n >= 0; binom(-m, j) = (-1)^j binom(m+j-1, j).
  BigInt operator()(long n, long k) const;
  unsigned rows() const { return rows_; }

private:
  unsigned rows_;
  std::vector<std::vector<BigInt>> t_;
};

// Shared cache built once on first use.
const Binomial& binomial_table();
inline BigInt binom(long n, long k) { return binomial_table()(n, k); }

BigInt catalan(long n);

enum class Family { Catalan, Motzkin, Schroder, LittleSchroder, Ballot, PointTriangle, Gnk, Narayana, FussCatalan3 };

// Motzkin M_{n,k}, Schroder R_{n,k}, ballot B_{n,i}, C_{n,i}, G_{n,k} and
// Narayana take (n, k); Catalan, little Schroder and Fuss-Catalan ignore k.
BigInt family(Family f, long n, long k = 0);

BigInt little_schroder(long n);
BigInt large_schroder(long n);

enum class GVariant { A, B1, B2, B3 };
BigInt g_count(long n, long a, long b, long c, GVariant v = GVariant::A);
BigInt g_simple(long n);
// Alternative double sum for G_n (no weights).
BigInt g_double_sum(long n);

enum class Variant { Main, Alt };
BigInt v_count(long n, long i, Variant v = Variant::Main);
BigInt h_count(long n, long i, Variant v = Variant::Main);
BigInt d_count(long n, long i, Variant v = Variant::Main);
BigInt u_count(long n, long i, Variant v = Variant::Main);

// Level statistics; the Riordan variant reads the matching array.
enum class LevelVariant { Sum, Riordan };
BigInt alpha(long n, long i, LevelVariant v = LevelVariant::Sum);
BigInt beta(long n, long i, LevelVariant v = LevelVariant::Sum);
BigInt mu(long n, long i, LevelVariant v = LevelVariant::Sum);
BigInt r_return(long n, long i, LevelVariant v = LevelVariant::Sum);

enum class Pair { ud, uh, uu, hh, hd, vu, vv, du, dd, dv };
std::string pair_name(Pair p);

class UnsupportedPair : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Number of variants printed for a pair (all agree).
int l_variants(Pair p);
// Variant 0 is the primary closed form. For du, variant 1 is the i = 0 form.
BigInt l_count(Pair p, long n, long i, int variant = 0);

BigInt narayana(long n, long k);
Rational narayana_poly(long n, const Rational& y);

}
