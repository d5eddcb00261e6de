#include "gmotzkin/series.hpp"

#include <algorithm>

namespace gm {

Series::Series(std::size_t order, std::vector<BigInt> coeffs) : c_(std::move(coeffs))
{
  c_.resize(order);
}

Series Series::constant(const BigInt& v, std::size_t order)
{
  Series s(order);
  if (order > 0)
    s.c_[0] = v;
  return s;
}

Series Series::x(std::size_t order)
{
  Series s(order);
  if (order > 1)
    s.c_[1] = 1;
  return s;
}

Series Series::from_ints(std::vector<long> coeffs, std::size_t order)
{
  Series s(order);
  for (std::size_t i = 0; i < coeffs.size() && i < order; ++i)
    s.c_[i] = coeffs[i];
  return s;
}

const BigInt& Series::coeff(std::size_t n) const
{
  if (n >= c_.size())
    throw SeriesError(SeriesError::Kind::OrderExceeded,
                      "coefficient x^" + std::to_string(n) + " beyond order " + std::to_string(c_.size()));
  return c_[n];
}

Series Series::truncated(std::size_t order) const
{
  Series s(*this);
  s.c_.resize(order);
  return s;
}

Series operator+(const Series& a, const Series& b)
{
  const std::size_t o = std::min(a.order(), b.order());
  Series r(o);
  for (std::size_t i = 0; i < o; ++i)
    r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Series operator-(const Series& a, const Series& b)
{
  const std::size_t o = std::min(a.order(), b.order());
  Series r(o);
  for (std::size_t i = 0; i < o; ++i)
    r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Series operator*(const Series& a, const Series& b)
{
  const std::size_t o = std::min(a.order(), b.order());
  Series r(o);
  for (std::size_t i = 0; i < o; ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < o; ++j)
      if (b.c_[j] != 0)
        r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

Series operator*(const BigInt& k, const Series& a)
{
  Series r(a);
  for (auto& v : r.c_)
    v *= k;
  return r;
}

Series power(const Series& s, unsigned k)
{
  Series r = Series::constant(1, s.order());
  for (unsigned i = 0; i < k; ++i)
    r = r * s;
  return r;
}

Series compose(const Series& outer, const Series& inner)
{
  if (inner.order() > 0 && inner[0] != 0)
    throw SeriesError(SeriesError::Kind::NonzeroConstantTerm, "compose: inner series has nonzero constant term");
  const std::size_t o = std::min(outer.order(), inner.order());
  // Horner: outer_0 + inner*(outer_1 + inner*(...)).
  Series r = Series::constant(0, o);
  for (std::size_t k = o; k-- > 0;)
    r = Series::constant(outer[k], o) + inner.truncated(o) * r;
  return r;
}

Series geometric_inverse(const Series& s)
{
  if (s.order() > 0 && s[0] != 0)
    throw SeriesError(SeriesError::Kind::NonzeroConstantTerm, "geometric_inverse: nonzero constant term");
  const std::size_t o = s.order();
  Series r(o);
  // r = 1 + s*r, solved coefficient by coefficient.
  for (std::size_t n = 0; n < o; ++n) {
    BigInt acc = n == 0 ? 1 : 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (s[k] != 0)
        acc += s[k] * r[n - k];
    r[n] = acc;
  }
  return r;
}

BiSeries::BiSeries(std::size_t xo, std::size_t yo) : xo_(xo), yo_(yo), c_(xo * yo) {}

BiSeries BiSeries::constant(const BigInt& v, std::size_t xo, std::size_t yo)
{
  BiSeries s(xo, yo);
  if (xo > 0 && yo > 0)
    s.at(0, 0) = v;
  return s;
}

BiSeries BiSeries::x(std::size_t xo, std::size_t yo)
{
  BiSeries s(xo, yo);
  if (xo > 1 && yo > 0)
    s.at(1, 0) = 1;
  return s;
}

BiSeries BiSeries::y(std::size_t xo, std::size_t yo)
{
  BiSeries s(xo, yo);
  if (xo > 0 && yo > 1)
    s.at(0, 1) = 1;
  return s;
}

BiSeries BiSeries::from_series(const Series& s, std::size_t yo)
{
  BiSeries r(s.order(), yo);
  if (yo > 0)
    for (std::size_t n = 0; n < s.order(); ++n)
      r.at(n, 0) = s[n];
  return r;
}

const BigInt& BiSeries::coeff(std::size_t n, std::size_t i) const
{
  if (n >= xo_ || i >= yo_)
    throw SeriesError(SeriesError::Kind::OrderExceeded,
                      "coefficient x^" + std::to_string(n) + " y^" + std::to_string(i) + " beyond order (" +
                        std::to_string(xo_) + ", " + std::to_string(yo_) + ")");
  return at(n, i);
}

bool BiSeries::row_zero(std::size_t n) const
{
  for (std::size_t i = 0; i < yo_; ++i)
    if (at(n, i) != 0)
      return false;
  return true;
}

Series BiSeries::at_y(long y) const
{
  Series r(xo_);
  for (std::size_t n = 0; n < xo_; ++n) {
    BigInt acc = 0, p = 1;
    for (std::size_t i = 0; i < yo_; ++i) {
      acc += at(n, i) * p;
      p *= y;
    }
    r[n] = acc;
  }
  return r;
}

Series BiSeries::column(std::size_t i) const
{
  Series r(xo_);
  for (std::size_t n = 0; n < xo_; ++n)
    r[n] = at(n, i);
  return r;
}

void BiSeries::check_degree_bound() const
{
  for (std::size_t n = 0; n < xo_; ++n)
    for (std::size_t i = n + 1; i < yo_; ++i)
      if (at(n, i) != 0)
        throw SeriesError(SeriesError::Kind::DegreeBound,
                          "nonzero coefficient x^" + std::to_string(n) + " y^" + std::to_string(i));
}

namespace {

void require_same_shape(const BiSeries& a, const BiSeries& b)
{
  if (a.y_order() != b.y_order())
    throw std::logic_error("BiSeries y-orders differ");
}

}

BiSeries operator+(const BiSeries& a, const BiSeries& b)
{
  require_same_shape(a, b);
  BiSeries r(std::min(a.xo_, b.xo_), a.yo_);
  for (std::size_t k = 0; k < r.c_.size(); ++k)
    r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b)
{
  require_same_shape(a, b);
  BiSeries r(std::min(a.xo_, b.xo_), a.yo_);
  for (std::size_t k = 0; k < r.c_.size(); ++k)
    r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
  require_same_shape(a, b);
  const std::size_t xo = std::min(a.xo_, b.xo_), yo = a.yo_;
  BiSeries r(xo, yo);
  for (std::size_t n1 = 0; n1 < xo; ++n1) {
    for (std::size_t i1 = 0; i1 < yo; ++i1) {
      const BigInt& av = a.at(n1, i1);
      if (av == 0)
        continue;
      for (std::size_t n2 = 0; n1 + n2 < xo; ++n2)
        for (std::size_t i2 = 0; i1 + i2 < yo; ++i2) {
          const BigInt& bv = b.at(n2, i2);
          if (bv != 0)
            mpz_addmul(r.at(n1 + n2, i1 + i2).get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
        }
    }
  }
  return r;
}

BiSeries operator*(const BigInt& k, const BiSeries& a)
{
  BiSeries r(a);
  for (auto& v : r.c_)
    v *= k;
  return r;
}

BiSeries geometric_inverse(const BiSeries& s)
{
  if (s.x_order() > 0 && !s.row_zero(0))
    throw SeriesError(SeriesError::Kind::NonzeroConstantTerm, "geometric_inverse: x^0 row is nonzero");
  const std::size_t xo = s.x_order(), yo = s.y_order();
  BiSeries r(xo, yo);
  if (xo == 0 || yo == 0)
    return r;
  r.at(0, 0) = 1;
  for (std::size_t n = 1; n < xo; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i1 = 0; i1 < yo; ++i1) {
        const BigInt& sv = s.at(k, i1);
        if (sv == 0)
          continue;
        for (std::size_t i2 = 0; i1 + i2 < yo; ++i2)
          mpz_addmul(r.at(n, i1 + i2).get_mpz_t(), sv.get_mpz_t(), r.at(n - k, i2).get_mpz_t());
      }
  return r;
}

std::size_t agreement(const Series& a, const Series& b)
{
  const std::size_t o = std::min(a.order(), b.order());
  for (std::size_t n = 0; n < o; ++n)
    if (a[n] != b[n])
      return n;
  return o;
}

std::size_t agreement(const BiSeries& a, const BiSeries& b)
{
  const std::size_t o = std::min(a.x_order(), b.x_order());
  const std::size_t yo = std::min(a.y_order(), b.y_order());
  for (std::size_t n = 0; n < o; ++n)
    for (std::size_t i = 0; i < yo; ++i)
      if (a.at(n, i) != b.at(n, i))
        return n;
  return o;
}

std::string to_json(const Series& s)
{
  std::string out = "[";
  for (std::size_t n = 0; n < s.order(); ++n) {
    if (n)
      out += ',';
    out += '"' + s[n].get_str() + '"';
  }
  return out + "]";
}

std::string to_json(const BiSeries& s)
{
  std::string out = "[";
  for (std::size_t n = 0; n < s.x_order(); ++n) {
    if (n)
      out += ',';
    out += '[';
    for (std::size_t i = 0; i < s.y_order(); ++i) {
      if (i)
        out += ',';
      out += '"' + s.at(n, i).get_str() + '"';
    }
    out += ']';
  }
  return out + "]";
}

}
