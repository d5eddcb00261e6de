#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/path.hpp"

#include <doctest.h>

#include <set>

using namespace gm;

TEST_CASE("validate accepts and rejects")
{
  CHECK(parse_path("uuvv").length() == 2);

  try {
    parse_path("v");
    FAIL("expected NegativeHeight");
  } catch (const InvalidPath& e) {
    CHECK(e.kind() == InvalidPath::Kind::NegativeHeight);
    CHECK(e.where() == 0);
  }
  try {
    parse_path("uh");
    FAIL("expected NonzeroFinalHeight");
  } catch (const InvalidPath& e) {
    CHECK(e.kind() == InvalidPath::Kind::NonzeroFinalHeight);
    CHECK(e.where() == 1);
  }
  CHECK_THROWS_AS(parse_steps("ux"), InvalidPath);
}

TEST_CASE("enumeration of small lengths")
{
  std::set<std::string> two;
  for_each_path(2, [&](const std::vector<Step>& s) { two.insert(steps_str(s)); });
  CHECK(two == std::set<std::string>{"hh", "huv", "uvh", "uvuv", "uuvv", "ud", "uhv"});

  std::size_t zero = 0;
  for_each_path(0, [&](const std::vector<Step>& s) {
    CHECK(s.empty());
    ++zero;
  });
  CHECK(zero == 1);
  CHECK(count_paths(6) == 3319);
  CHECK(count_paths(6, 3) == 3319);
}

TEST_CASE("enumeration order follows the step tag order")
{
  std::vector<std::string> seen;
  for_each_path(2, [&](const std::vector<Step>& s) { seen.push_back(steps_str(s)); });
  CHECK(std::is_sorted(seen.begin(), seen.end(), [](const std::string& a, const std::string& b) {
    return parse_steps(a) < parse_steps(b);
  }));
}

TEST_CASE("statistics")
{
  CHECK(statistic(parse_path("uuvv"), ZCount{Step::V}) == 2);
  CHECK(statistic(parse_path("uvuv"), PairCount{Step::V, Step::U}) == 1);
  CHECK(statistic(parse_path("uhv"), ReturnSteps{}) == 1);
  // Six path points of h and uv: h contributes 2, uv contributes 2 at level 0.
  unsigned lambda10 = 0;
  for_each_path(1, [&](const std::vector<Step>& s) { lambda10 += statistic(validate(s), PointsAtLevel{0}); });
  CHECK(lambda10 == 4);
}

TEST_CASE("first-return decomposition")
{
  auto d = first_return_decompose(parse_path("hh"));
  CHECK(d.kind == Decomposition::Kind::HeadH);
  CHECK(d.rest.str() == "h");

  d = first_return_decompose(parse_path("uuvv"));
  CHECK(d.kind == Decomposition::Kind::Arch);
  CHECK(d.close == Step::V);
  CHECK(d.inner.str() == "uv");
  CHECK(d.rest.empty());

  d = first_return_decompose(parse_path("uduv"));
  CHECK(d.kind == Decomposition::Kind::Arch);
  CHECK(d.close == Step::D);
  CHECK(d.inner.empty());
  CHECK(d.rest.str() == "uv");

  for (const char* s : {"", "hh", "uuvv", "uduv", "uhuduuvvdhh"})
    CHECK(reassemble(first_return_decompose(parse_path(s))) == parse_path(s));
}

TEST_CASE("primitive components")
{
  auto c = primitive_components(parse_path("uvuv"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].str() == "uv");
  CHECK(c[1].str() == "uv");
  c = primitive_components(parse_path("huuvv"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].str() == "h");
  CHECK(c[1].str() == "uuvv");
  CHECK(primitive_components(Path{}).empty());
}

TEST_CASE("weights")
{
  const Path p = parse_path("uhuduuvvdhh");
  CHECK(weight(p, 1, 1, 1) == 1);
  CHECK(weight(p, 2, 3, 5) == 1800);
  BigInt total = 0;
  for_each_path(2, [&](const std::vector<Step>& s) { total += weight(validate(s), 1, 1, 1); });
  CHECK(total == 7);
}

TEST_CASE("tally agrees with per-path statistics")
{
  const Tally t = build_tally(6, 2);
  for (unsigned n = 0; n <= 6; ++n) {
    std::vector<std::uint64_t> h(n + 1), vu(n + 1);
    for_each_path(n, [&](const std::vector<Step>& s) {
      const Path p = validate(s);
      ++h[statistic(p, ZCount{Step::H})];
      ++vu[statistic(p, PairCount{Step::V, Step::U})];
    });
    for (unsigned i = 0; i <= n; ++i) {
      CHECK(t.z(Step::H, n, i) == h[i]);
      CHECK(t.pairs(Step::V, Step::U, n, i) == vu[i]);
    }
  }
}
