#include "gmotzkin/riordan.hpp"

#include "gmotzkin/equations.hpp"

namespace gm {

RiordanArray::RiordanArray(Series d, Series h) : d_(std::move(d)), h_(std::move(h))
{
  if (d_.order() == 0 || d_[0] != 1)
    throw BadNormalization("Riordan array needs d(0) = 1");
  if (h_.order() > 0 && h_[0] != 0)
    throw BadNormalization("Riordan array needs h(0) = 0");
  if (h_.order() < d_.order())
    d_ = d_.truncated(h_.order());
  h_ = h_.truncated(d_.order());
  // Column i starts at x^i, so order columns cover the whole triangle.
  Series col = d_;
  for (std::size_t i = 0; i < d_.order(); ++i) {
    columns_.push_back(col);
    col = col * h_;
  }
}

BigInt RiordanArray::entry(std::size_t n, std::size_t i) const
{
  if (n >= order())
    throw SeriesError(SeriesError::Kind::OrderExceeded,
                      "Riordan entry row " + std::to_string(n) + " beyond order " + std::to_string(order()));
  if (i > n)
    return 0;
  return columns_[i][n];
}

Series RiordanArray::apply(const Series& a) const { return d_ * compose(a, h_); }

BigInt RiordanArray::row_dot(std::size_t n, const Series& a) const
{
  BigInt s = 0;
  for (std::size_t i = 0; i <= n && i < a.order(); ++i)
    s += entry(n, i) * a[i];
  return s;
}

RiordanArray make_riordan(Series d, Series h) { return RiordanArray(std::move(d), std::move(h)); }

RiordanArray named_array(LevelArray which, std::size_t order)
{
  const Series one = Series::constant(1, order);
  const Series x = Series::x(order);
  const Series onepx = one + x;
  switch (which) {
  case LevelArray::Alpha:
  case LevelArray::Beta:
  case LevelArray::Mu:
  case LevelArray::Returns: {
    const Series g = g_series(order);
    const Series g2 = g * g;
    const Series step = x * onepx * g2;
    if (which == LevelArray::Alpha)
      return RiordanArray(onepx * g2 * g, step);
    if (which == LevelArray::Beta)
      return RiordanArray(g2 * g, step);
    if (which == LevelArray::Mu)
      return RiordanArray(g2, step);
    const Series inv = geometric_inverse(x);
    return RiordanArray(inv, x * onepx * g * inv);
  }
  case LevelArray::Ballot:
  case LevelArray::PointTriangle: {
    const Series c = catalan_series(order);
    const Series c2 = c * c;
    return RiordanArray(which == LevelArray::Ballot ? c2 * c : c2, x * c2);
  }
  }
  throw std::logic_error("unknown array");
}

std::string array_name(LevelArray which)
{
  switch (which) {
  case LevelArray::Alpha: return "alpha";
  case LevelArray::Beta: return "beta";
  case LevelArray::Mu: return "mu";
  case LevelArray::Returns: return "r";
  case LevelArray::Ballot: return "B";
  case LevelArray::PointTriangle: return "Cpt";
  }
  return "?";
}

}
