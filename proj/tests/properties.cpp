// Standalone property suites: run one with --test-suite=<residuals|recurrence|riordan>.
#include "gmotzkin/equations.hpp"
#include "gmotzkin/formulas.hpp"
#include "gmotzkin/riordan.hpp"

#include <doctest.h>

#include <random>

using namespace gm;

TEST_SUITE("residuals")
{
  TEST_CASE("every catalog equation is solved exactly")
  {
    for (const auto& [name, eq] : equation_names()) {
      const std::size_t order = eq == Equation::G || eq >= Equation::Catalan ? 40 : 24;
      const BiSeries& s = solved(eq, order, order);
      INFO(name);
      CHECK(evaluate(equation_rhs(eq), s, order, order) == s);
      CHECK_NOTHROW(s.check_degree_bound());
    }
  }

  TEST_CASE("weighted G equations")
  {
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c) {
          const EquationParams p{a, b, c};
          const BiSeries s = solve_fixed_point(Equation::G, 20, 1, p);
          CHECK(evaluate(equation_rhs(Equation::G, p), s, 20, 1) == s);
          for (long n = 0; n < 20; ++n)
            CHECK(s.coeff(static_cast<std::size_t>(n), 0) == g_count(n, a, b, c));
        }
  }
}

TEST_SUITE("recurrence")
{
  TEST_CASE("G_n three-term recurrence")
  {
    const Series g = g_series(80);
    for (long n = 3; n < 80; ++n) {
      const auto k = static_cast<std::size_t>(n);
      INFO("n=" << n);
      CHECK((n + 1) * g[k] == (5 * n - 4) * g[k - 1] + 9 * (n - 1) * g[k - 2] + 3 * (n - 2) * g[k - 3]);
    }
  }

  TEST_CASE("closed form follows the recurrence")
  {
    for (long n = 0; n < 40; ++n)
      CHECK(g_simple(n) == g_series(40)[static_cast<std::size_t>(n)]);
  }
}

TEST_SUITE("riordan")
{
  TEST_CASE("lower triangularity and the row-product law")
  {
    const std::size_t order = 24;
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (auto which : {LevelArray::Alpha, LevelArray::Beta, LevelArray::Mu, LevelArray::Returns, LevelArray::Ballot,
                       LevelArray::PointTriangle}) {
      const RiordanArray r = named_array(which, order);
      INFO(array_name(which));
      for (std::size_t n = 0; n < order; ++n) {
        for (std::size_t i = n + 1; i < order; ++i)
          CHECK(r.entry(n, i) == 0);
        CHECK(r.entry(n, n) != 0);
      }
      for (int trial = 0; trial < 5; ++trial) {
        Series a(order);
        for (std::size_t i = 0; i < order; ++i)
          a[i] = dist(rng);
        const Series lhs = r.apply(a);
        for (std::size_t n = 0; n < order; ++n)
          CHECK(r.row_dot(n, a) == lhs[n]);
      }
    }
  }
}
