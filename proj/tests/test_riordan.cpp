#include "gmotzkin/riordan.hpp"

#include <doctest.h>

using namespace gm;

TEST_CASE("identity array")
{
  const RiordanArray id = make_riordan(Series::constant(1, 8), Series::x(8));
  for (std::size_t n = 0; n < 8; ++n)
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(id.entry(n, i) == (n == i ? 1 : 0));
  CHECK_THROWS_AS(make_riordan(Series::constant(2, 4), Series::x(4)), BadNormalization);
  CHECK_THROWS_AS(make_riordan(Series::constant(1, 4), Series::constant(1, 4)), BadNormalization);
}

TEST_CASE("named array entries")
{
  CHECK(named_array(LevelArray::Ballot).entry(3, 1) == 20);
  CHECK(named_array(LevelArray::PointTriangle).entry(4, 2) == 27);
  const RiordanArray a = named_array(LevelArray::Alpha);
  CHECK(a.entry(4, 2) == 178);
  const RiordanArray b = named_array(LevelArray::Beta);
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(b.entry(n, n) == 1);
}

TEST_CASE("apply")
{
  const std::size_t order = 16;
  const RiordanArray a = named_array(LevelArray::Alpha, order);
  CHECK(a.apply(Series::constant(1, order)) == a.d());

  // 1/(1+x)^3 and 1/(1+x)^2 as series.
  Series cube(order), square(order);
  for (std::size_t i = 0; i < order; ++i) {
    const long s = i % 2 ? -1 : 1;
    cube[i] = s * static_cast<long>((i + 1) * (i + 2) / 2);
    square[i] = s * static_cast<long>(i + 1);
  }
  const Series ra = a.apply(cube);
  const Series rm = named_array(LevelArray::Mu, order).apply(square);
  for (std::size_t n = 0; n < order; ++n) {
    CHECK(ra[n] == static_cast<long>((n + 1) * (n + 1)));
    CHECK(rm[n] == static_cast<long>(n + 1));
  }
}
