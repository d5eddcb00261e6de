#include "gmotzkin/formulas.hpp"

#include <doctest.h>

using namespace gm;

TEST_CASE("G counts")
{
  for (auto v : {GVariant::A, GVariant::B1, GVariant::B2, GVariant::B3}) {
    CHECK(g_count(2, 1, 1, 1, v) == 7);
    CHECK(g_count(5, -2, 1, 1, v) == -1);
    CHECK(g_count(4, 1, 1, 0, v) == 90);
  }
  CHECK(g_simple(0) == 1);
  CHECK(g_simple(3) == 29);
  CHECK(g_simple(9) == 520508);
  CHECK(g_double_sum(9) == 520508);
}

TEST_CASE("single-step statistics")
{
  for (auto v : {Variant::Main, Variant::Alt}) {
    CHECK(v_count(3, 1, v) == 10);
    CHECK(v_count(6, 6, v) == 132);
    CHECK(h_count(4, 2, v) == 36);
    CHECK(h_count(6, 6, v) == 1);
    CHECK(d_count(5, 1, v) == 231);
    CHECK(d_count(8, 4, v) == 14);
    CHECK(u_count(4, 2, v) == 52);
    CHECK(u_count(5, 5, v) == 42);
  }
}

TEST_CASE("level statistics, both routes")
{
  for (auto v : {LevelVariant::Sum, LevelVariant::Riordan}) {
    CHECK(alpha(2, 1, v) == 12);
    CHECK(beta(3, 1, v) == 85);
    CHECK(beta(6, 5, v) == 31);
    CHECK(mu(2, 1, v) == 9);
    CHECK(mu(6, 2, v) == 6803);
    CHECK(r_return(4, 2, v) == 51);
    CHECK(r_return(6, 0, v) == 1);
  }
  CHECK(r_return(0, 0) == 1);
}

TEST_CASE("pair statistics")
{
  CHECK(l_count(Pair::ud, 4, 1) == 26);
  CHECK(l_count(Pair::uh, 4, 2) == 2);
  CHECK(l_count(Pair::uh, 8, 4) == 14);
  CHECK(l_count(Pair::hd, 9, 3) == 5);
  CHECK(l_count(Pair::vu, 5, 2) == 100);
  CHECK(l_count(Pair::dv, 9, 3) == 12);
  CHECK_THROWS_AS(l_count(Pair::dd, 4, 1), UnsupportedPair);
}

TEST_CASE("Narayana")
{
  CHECK(narayana_poly(2, 2) == 6);
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana_poly(4, 1) == 14);
}

TEST_CASE("number families")
{
  CHECK(family(Family::Motzkin, 6, 2) == 30);
  CHECK(family(Family::Ballot, 3, 1) == 20);
  CHECK(family(Family::PointTriangle, 4, 2) == 27);
  CHECK(family(Family::Gnk, 4, 1) == 10);
  CHECK(family(Family::Catalan, 5) == 42);
  CHECK(family(Family::FussCatalan3, 3) == 12);
}

TEST_CASE("diagonal and column specialisations")
{
  for (long n = 0; n <= 8; ++n) {
    BigInt motzkin = 0;
    for (long k = 0; 2 * k <= n; ++k)
      motzkin += family(Family::Motzkin, n, k);
    CHECK(v_count(n, 0) == motzkin);
    CHECK(d_count(n, 0) == large_schroder(n));
    CHECK(d_count(2 * n, n) == catalan(n));
    CHECK(u_count(n, n) == catalan(n));
    CHECK(l_count(Pair::uh, 2 * n, n) == catalan(n));
    CHECK(l_count(Pair::hd, 3 * n, n) == catalan(n));
    CHECK(l_count(Pair::dv, 3 * n, n) == family(Family::FussCatalan3, n));
  }
}
