#include "gmotzkin/formulas.hpp"

#include "gmotzkin/riordan.hpp"

#include <mutex>

namespace gm {

Binomial::Binomial(unsigned rows) : rows_(rows), t_(rows)
{
  for (unsigned n = 0; n < rows; ++n) {
    t_[n].resize(n + 1);
    t_[n][0] = t_[n][n] = 1;
    for (unsigned k = 1; k < n; ++k)
      t_[n][k] = t_[n - 1][k - 1] + t_[n - 1][k];
  }
}

BigInt Binomial::operator()(long n, long k) const
{
  if (k < 0)
    return 0;
  if (n < 0) {
    BigInt r = (*this)(-n + k - 1, k);
    return (k % 2 == 0) ? r : BigInt(-r);
  }
  if (k > n)
    return 0;
  if (static_cast<unsigned long>(n) < rows_)
    return t_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

const Binomial& binomial_table()
{
  static const Binomial table(320);
  return table;
}

namespace {

long floor_div(long a, long b)
{
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// base^e for e >= 0; zero otherwise (only reached when a binomial factor vanishes).
BigInt pw(long base, long e)
{
  if (e < 0)
    return 0;
  return ipow(base, static_cast<unsigned long>(e));
}

}

BigInt catalan(long n)
{
  if (n < 0)
    return 0;
  return exact_div(binom(2 * n, n), n + 1);
}

BigInt large_schroder(long n)
{
  BigInt s = 0;
  for (long k = 0; k <= n; ++k)
    s += family(Family::Schroder, n, k);
  return s;
}

BigInt little_schroder(long n)
{
  if (n == 0)
    return 1;
  return exact_div(large_schroder(n), 2);
}

BigInt narayana(long n, long k)
{
  if (n == 0)
    return k == 0 ? 1 : 0;
  if (k < 1 || k > n)
    return 0;
  return exact_div(binom(n, k - 1) * binom(n, k), n);
}

Rational narayana_poly(long n, const Rational& y)
{
  if (n == 0)
    return 1;
  Rational s = 0, p = y;
  for (long k = 1; k <= n; ++k) {
    s += Rational(narayana(n, k)) * p;
    p *= y;
  }
  return s;
}

BigInt family(Family f, long n, long k)
{
  switch (f) {
  case Family::Catalan: return catalan(n);
  case Family::Motzkin: return binom(n, 2 * k) * catalan(k);
  case Family::Schroder: return binom(n + k, 2 * k) * catalan(k);
  case Family::LittleSchroder: return little_schroder(n);
  case Family::Ballot:
    if (k < 0 || k > n)
      return 0;
    return exact_div((2 * k + 3) * binom(2 * n + 3, n - k), 2 * n + 3);
  case Family::PointTriangle:
    // Column i of (C^2, xC^2); binom(2n+1, n-i) would not be integral.
    if (k < 0 || k > n)
      return 0;
    return exact_div((k + 1) * binom(2 * n + 2, n - k), n + 1);
  case Family::Gnk:
    return exact_div(binom(n + 1, k) * binom(3 * n - 3 * k + 1, n - 3 * k), n + 1);
  case Family::Narayana: return narayana(n, k);
  case Family::FussCatalan3: return exact_div(binom(3 * n + 1, n), 3 * n + 1);
  }
  throw std::logic_error("unknown family");
}

BigInt g_count(long n, long a, long b, long c, GVariant v)
{
  BigInt s = 0;
  switch (v) {
  case GVariant::A:
    for (long k = 0; k <= n; ++k)
      for (long j = 0; j <= n - k; ++j) {
        BigInt t = binom(k, j) * binom(n + k - j, 2 * k);
        if (t != 0)
          s += t * catalan(k) * pw(a, n - k - j) * pw(b, k - j) * pw(c, j);
      }
    return s;
  case GVariant::B1:
    for (long k = 0; k <= n / 2; ++k)
      for (long j = 0; j <= n - 2 * k; ++j)
        s += binom(n + 1, k) * binom(n + 1 - k, j) * binom(2 * n - 2 * k - j, n - 2 * k - j) * pw(a, j) *
             pw(b, n - 2 * k - j) * pw(c, k);
    return exact_div(s, n + 1);
  case GVariant::B2:
    for (long k = 0; k <= n; ++k)
      for (long j = 0; j <= (n - k) / 2; ++j)
        s += binom(n + 1, k) * binom(n + 1 - k, j) * binom(2 * n - k - 2 * j, n - k - 2 * j) * pw(a, k) *
             pw(b, n - k - 2 * j) * pw(c, j);
    return exact_div(s, n + 1);
  case GVariant::B3:
    for (long k = 0; k <= n; ++k)
      for (long j = 0; j <= n - k; ++j) {
        BigInt t = binom(n + 1, k) * binom(k, j) * binom(2 * n - k - j, n - k - j);
        if (t != 0)
          s += t * pw(a, k - j) * pw(b, n - k - j) * pw(c, j);
      }
    return exact_div(s, n + 1);
  }
  throw std::logic_error("unknown variant");
}

BigInt g_simple(long n)
{
  BigInt s = 0;
  for (long k = 0; k <= n / 3; ++k)
    s += sign_pow(k) * binom(n + 1, k) * binom(3 * n - 3 * k + 1, n - 3 * k);
  return exact_div(s, n + 1);
}

BigInt g_double_sum(long n)
{
  BigInt s = 0;
  for (long k = 0; k <= n; ++k)
    for (long j = 0; j <= k; ++j)
      s += binom(n + 1, j) * binom(j, k - j) * binom(2 * n - k, n);
  return exact_div(s, n + 1);
}

BigInt v_count(long n, long i, Variant v)
{
  BigInt s = 0;
  if (v == Variant::Main) {
    for (long k = i; k <= n; ++k)
      s += binom(k, i) * binom(n + i, 2 * k) * catalan(k);
    return s;
  }
  for (long k = 0; k <= n - i; ++k)
    s += binom(n + 1, k) * binom(k, n - k - i);
  return exact_div(binom(n + i, i) * s, n + 1);
}

BigInt h_count(long n, long i, Variant v)
{
  BigInt s = 0;
  if (v == Variant::Main) {
    for (long k = floor_div(n - i, 2); k <= n - i; ++k)
      s += binom(2 * k + i, 2 * k) * binom(k, n - i - k) * catalan(k);
    return s;
  }
  for (long j = 0; j <= floor_div(n - i, 2); ++j)
    s += binom(n + 1 - i, j) * binom(2 * n - i - 2 * j, n - i - 2 * j);
  return exact_div(binom(n + 1, i) * s, n + 1);
}

BigInt d_count(long n, long i, Variant v)
{
  BigInt s = 0;
  if (v == Variant::Main) {
    for (long k = i; k <= n - i; ++k)
      s += binom(k, i) * binom(n - i + k, 2 * k) * catalan(k);
    return s;
  }
  for (long k = i; k <= n - i; ++k)
    s += binom(n + 1 - i, k - i) * binom(2 * n - i - k, n - i - k);
  return exact_div(binom(n + 1, i) * s, n + 1);
}

BigInt u_count(long n, long i, Variant v)
{
  BigInt s = 0;
  if (v == Variant::Main) {
    for (long k = 0; k <= i; ++k)
      s += binom(i, k) * binom(n + k, 2 * i) * catalan(i);
    return s;
  }
  for (long j = 0; j <= i; ++j)
    s += binom(n - i, j) * binom(n + i - j, i - j);
  return exact_div(binom(n + 1, i + 1) * s, n + 1);
}

namespace {

// Riordan arrays are built once at a size covering every table and identity grid.
constexpr std::size_t kArrayOrder = 64;

const RiordanArray& level_array(LevelArray which)
{
  static std::once_flag once;
  static std::vector<RiordanArray> arrays;
  std::call_once(once, [] {
    for (auto w : {LevelArray::Alpha, LevelArray::Beta, LevelArray::Mu, LevelArray::Returns})
      arrays.push_back(named_array(w, kArrayOrder));
  });
  return arrays[static_cast<std::size_t>(which)];
}

BigInt riordan_entry(LevelArray which, long n, long i)
{
  if (n < 0 || i < 0)
    return 0;
  if (static_cast<std::size_t>(n) < kArrayOrder)
    return level_array(which).entry(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
  return named_array(which, static_cast<std::size_t>(n) + 1).entry(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
}

}

BigInt alpha(long n, long i, LevelVariant v)
{
  if (v == LevelVariant::Riordan)
    return riordan_entry(LevelArray::Alpha, n, i);
  BigInt s = 0;
  for (long j = i; j <= n; ++j) {
    BigInt inner = 0;
    for (long k = 0; k <= n - j; ++k)
      inner += binom(j + 1, k) * binom(n + j - k + 2, n - j - k);
    s += family(Family::Ballot, j, i) * inner;
  }
  return s;
}

BigInt beta(long n, long i, LevelVariant v)
{
  if (v == LevelVariant::Riordan)
    return riordan_entry(LevelArray::Beta, n, i);
  BigInt s = 0;
  for (long j = i; j <= n; ++j) {
    BigInt inner = 0;
    for (long k = 0; k <= j; ++k)
      inner += binom(j, k) * binom(n + j + 2 - k, n - j - k);
    s += family(Family::Ballot, j, i) * inner;
  }
  return s;
}

BigInt mu(long n, long i, LevelVariant v)
{
  if (v == LevelVariant::Riordan)
    return riordan_entry(LevelArray::Mu, n, i);
  BigInt s = 0;
  for (long j = i; j <= n; ++j) {
    BigInt inner = 0;
    for (long k = 0; k <= n - j; ++k)
      inner += binom(j, k) * binom(n + j - k + 1, n - j - k);
    s += family(Family::PointTriangle, j, i) * inner;
  }
  return s;
}

BigInt r_return(long n, long i, LevelVariant v)
{
  if (v == LevelVariant::Riordan)
    return riordan_entry(LevelArray::Returns, n, i);
  BigInt s = 0;
  for (long j = i; j <= n; ++j) {
    // [x^j] (x C(x))^i; the i = 0 column is the unit at j = 0.
    BigInt lead = (i == 0) ? BigInt(j == 0 ? 1 : 0) : exact_div(i * binom(2 * j - i, j), 2 * j - i);
    if (lead == 0)
      continue;
    BigInt inner = 0;
    for (long k = 0; k <= n - j; ++k)
      inner += binom(j, k) * binom(n + j - k, n - j - k);
    s += lead * inner;
  }
  return s;
}

std::string pair_name(Pair p)
{
  static const char* names[] = {"ud", "uh", "uu", "hh", "hd", "vu", "vv", "du", "dd", "dv"};
  return names[static_cast<int>(p)];
}

int l_variants(Pair p)
{
  switch (p) {
  case Pair::uu: return 2;
  case Pair::vu: return 3;
  case Pair::du: return 2;
  case Pair::dv: return 2;
  case Pair::dd: return 0;
  default: return 1;
  }
}

namespace {

BigInt l_ud(long n, long i)
{
  BigInt s = 0;
  for (long k = 0; k <= n - 2 * i; ++k)
    for (long j = 0; j <= floor_div(n - k - 2 * i, 3); ++j)
      s += sign_pow(j) * binom(2 * k + i, i) * binom(2 * k + i + j, j) * binom(3 * k + i + 1, n - k - 2 * i - 3 * j) *
           catalan(k);
  return s;
}

BigInt l_uh(long n, long i)
{
  BigInt s = 0;
  for (long k = i; k <= n - i; ++k)
    for (long j = 0; j <= n - k - i; ++j)
      s += binom(k, i) * binom(k, j) * binom(n - j, n - k - i - j) * catalan(k);
  return s;
}

BigInt l_uu(long n, long i, int variant)
{
  BigInt s = 0;
  for (long k = 0; k <= n; ++k)
    for (long j = 0; j <= k; ++j)
      for (long r = 0; r <= n - k - j; ++r) {
        BigInt head = binom(k, j) * binom(2 * k + r, r) *
                      (variant == 0 ? binom(j + r, i + j - k) : binom(r, i + j - k));
        if (head == 0)
          continue;
        BigInt inner = 0;
        for (long l = 0; l <= k + r; ++l)
          inner += binom(k + r, l) *
                   (variant == 0 ? binom(n + k - j - l, n - k - j - r - l) : binom(n - l, n - k - j - r - l));
        s += sign_pow(i + j - k) * head * inner * catalan(k);
      }
  return s;
}

BigInt l_hh(long n, long i)
{
  BigInt s = 0;
  for (long k = 0; k <= n - i; ++k)
    for (long j = 0; j <= n - k - i; ++j)
      s += binom(2 * k + 1, j) * binom(i + j - 1, i) * binom(k, n - k - i - j) * catalan(k);
  return s;
}

BigInt l_hd(long n, long i)
{
  BigInt s = 0;
  for (long k = i; k <= n - 2 * i; ++k)
    for (long j = 0; j <= k - i; ++j)
      s += binom(k, i) * binom(k - i, j) * binom(n + k - 2 * i - 2 * j, n - k - 2 * i - j) * catalan(k);
  return s;
}

BigInt l_vu(long n, long i, int variant)
{
  BigInt s = 0;
  for (long k = 0; k <= n - i; ++k)
    for (long j = 0; j <= k; ++j) {
      BigInt head = binom(n + 1, k) * binom(k + i - 1, i) * binom(k, j);
      if (head == 0)
        continue;
      switch (variant) {
      case 0: s += head * binom(n + 1 - k, n - k - i - j) * pw(2, j); break;
      case 1: s += head * binom(n + 1 - j, n - k - i - j); break;
      default: s += sign_pow(j) * head * binom(n + 1 - j, n - k - i) * pw(2, k - j); break;
      }
    }
  return exact_div(s, n + 1);
}

BigInt l_vv(long n, long i)
{
  BigInt s = 0;
  for (long k = 0; k <= n - i; ++k)
    for (long j = 0; j <= floor_div(n - k - i, 2); ++j)
      s += binom(n + 1, k) * binom(n + 1, j) * binom(k + i - 1, i) * binom(n - j + 1, n - k - i - 2 * j);
  return exact_div(s, n + 1);
}

BigInt l_du(long n, long i)
{
  BigInt s = 0;
  for (long k = 0; k <= n; ++k)
    for (long r = 0; r <= i; ++r)
      for (long j = 0; j <= k - r; ++j)
        for (long l = 0; l <= floor_div(n + r - k, 2) - i - j; ++l)
          s += sign_pow(i - r) * binom(2 * k + i - r, i - r) * binom(k, r) * binom(k - r, j) *
               binom(2 * k + i + l - r, l) * binom(n + k - r - i - 2 * j - l, n + r - k - 2 * i - 2 * j - 2 * l) *
               catalan(k);
  return s;
}

BigInt l_du_zero(long n)
{
  BigInt s = 0;
  for (long k = 0; k <= n; ++k)
    for (long j = 0; j <= k; ++j)
      for (long l = 0; l <= floor_div(n - k, 2) - j; ++l)
        s += binom(2 * k + l, l) * binom(k, j) * binom(n + k - 2 * j - l, n - k - 2 * j - 2 * l) * catalan(k);
  return s;
}

BigInt l_dv(long n, long i, int variant)
{
  BigInt s = 0;
  if (variant == 0) {
    for (long k = 0; k <= floor_div(n - 3 * i, 2); ++k)
      for (long j = 0; j <= n - 3 * i - 2 * k; ++j)
        s += binom(n + 1 - i, k) * binom(n + 1 - i - k, j) * binom(2 * n - 3 * i - 3 * k - j, n - 3 * i - 2 * k - j);
  } else {
    for (long k = 0; k <= n / 3 - i; ++k)
      for (long j = 0; j <= n / 3 - i - k; ++j)
        s += sign_pow(k + j) * binom(n + 1 - i, k) * binom(n + 1 - i - k, j) *
             binom(3 * n - 4 * i - 4 * k - 3 * j + 1, n - 3 * i - 3 * k - 3 * j);
  }
  return exact_div(binom(n + 1, i) * s, n + 1);
}

}

BigInt l_count(Pair p, long n, long i, int variant)
{
  if (p == Pair::dd)
    throw UnsupportedPair("no closed form for dd; use the series route");
  if (variant < 0 || variant >= l_variants(p))
    throw std::invalid_argument("variant " + std::to_string(variant) + " not available for " + pair_name(p));
  if (n < 0 || i < 0)
    return 0;
  switch (p) {
  case Pair::ud: return l_ud(n, i);
  case Pair::uh: return l_uh(n, i);
  case Pair::uu: return l_uu(n, i, variant);
  case Pair::hh: return l_hh(n, i);
  case Pair::hd: return l_hd(n, i);
  case Pair::vu: return l_vu(n, i, variant);
  case Pair::vv: return l_vv(n, i);
  case Pair::du:
    if (variant == 1) {
      if (i != 0)
        throw std::invalid_argument("the second du form covers i = 0 only");
      return l_du_zero(n);
    }
    return l_du(n, i);
  case Pair::dv: return l_dv(n, i, variant);
  case Pair::dd: break;
  }
  throw std::logic_error("unknown pair");
}

}
