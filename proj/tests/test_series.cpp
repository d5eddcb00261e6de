#include "gmotzkin/equations.hpp"
#include "gmotzkin/series.hpp"

#include <doctest.h>

using namespace gm;

TEST_CASE("series arithmetic")
{
  const Series one = Series::constant(1, 3), x = Series::x(3);
  CHECK((one + x) * (one - x) == Series::from_ints({1, 0, -1}, 3));
  CHECK(geometric_inverse(Series::x(4)) == Series::from_ints({1, 1, 1, 1}, 4));
  CHECK_THROWS_AS(geometric_inverse(Series::constant(1, 4)), SeriesError);
  // compose(1/(1-x), 2x) = 1/(1-2x)
  CHECK(compose(geometric_inverse(Series::x(5)), BigInt(2) * Series::x(5)) == Series::from_ints({1, 2, 4, 8, 16}, 5));
}

TEST_CASE("fixed-point solutions")
{
  const Series g = g_series(11);
  const std::vector<long> expect = {1, 2, 7, 29, 133, 650, 3319, 17498, 94525, 520508, 2910895};
  CHECK(g == Series::from_ints(expect, 11));

  CHECK(solved(Equation::Ldd, 10, 6).coeff(5, 1) == 9);
  CHECK(solved(Equation::Lud, 9, 5).coeff(8, 4) == 1);
  CHECK(solved(Equation::Lvu, 7, 7).coeff(5, 2) == 100);
  CHECK(g_series(4, 1, 1, 0)[3] == 22);
}

TEST_CASE("named sequences")
{
  CHECK(catalan_series(6) == Series::from_ints({1, 1, 2, 5, 14, 42}, 6));
  CHECK(catalan_series(6)[5] == 42);
  CHECK(large_schroder_series(7) == Series::from_ints({1, 2, 6, 22, 90, 394, 1806}, 7));
  CHECK(motzkin_series(7) == Series::from_ints({1, 1, 2, 4, 9, 21, 51}, 7));
  CHECK(little_schroder_series(6) == Series::from_ints({1, 1, 3, 11, 45, 197}, 6));
}

TEST_CASE("bivariate specialisation")
{
  // Setting y = 1 forgets the marked statistic.
  const Series g = g_series(12);
  for (Equation e : {Equation::GV, Equation::GD, Equation::Lvu, Equation::Ldd})
    CHECK(solved(e, 12, 12).at_y(1) == g);
  CHECK_NOTHROW(solved(Equation::Luu, 12, 12).check_degree_bound());
}
