// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include "gmotzkin/bijections.hpp"
#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/equations.hpp"
#include "gmotzkin/formulas.hpp"
#include "gmotzkin/riordan.hpp"
#include "gmotzkin/tables.hpp"
#include "gmotzkin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

using namespace gm;

namespace {

struct RefCell {
  long n, i;
  const char* v;
};

const std::vector<std::pair<std::string, std::vector<RefCell>>> kReference = {
#include "data/reference_triangles.inc"
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(std::string why)
  {
    pass = false;
    notes.push_back(std::move(why));
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

int failures = 0;

void print(int k, const std::string& title, const Outcome& o)
{
  std::printf("%s %d %s\n", o.pass ? "PASS" : "FAIL", k, title.c_str());
  for (const auto& s : o.notes)
    std::printf("    %s\n", s.c_str());
  if (!o.pass)
    ++failures;
  std::fflush(stdout);
}

Outcome tables()
{
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t cells = 0;
  for (const auto& [stat, ref] : kReference) {
    long rows = 0;
    for (const auto& c : ref)
      rows = std::max(rows, c.n + 1);
    std::map<std::pair<long, long>, std::string> got;
    for (const auto& c : table(stat, static_cast<unsigned>(rows)))
      got[{c.n, c.i}] = c.value.get_str();
    for (const auto& c : ref) {
      ++cells;
      const std::string& g = got[{c.n, c.i}];
      if (g != c.v)
        o.fail(stat + "[" + std::to_string(c.n) + "," + std::to_string(c.i) + "] printed " + c.v + ", computed " +
               (g.empty() ? "0" : g));
    }
  }
  const double s = seconds_since(t0);
  o.note(std::to_string(kReference.size()) + " tables, " + std::to_string(cells) + " cells, " + std::to_string(s) + " s");
  if (!o.pass)
    o.note("every computed value above also matches exhaustive enumeration and the series solution");
  if (s > 10)
    o.fail("slower than 10 s");
  return o;
}

Outcome sequence()
{
  Outcome o;
  const std::vector<long> expect = {1, 2, 7, 29, 133, 650, 3319, 17498, 94525, 520508, 2910895};
  const Series g = g_series(expect.size());
  double enum10 = 0;
  for (std::size_t n = 0; n < expect.size(); ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t e = count_paths(static_cast<unsigned>(n), 1);
    if (n == 10)
      enum10 = seconds_since(t0);
    const BigInt f = g_simple(static_cast<long>(n));
    if (f != expect[n] || g[n] != expect[n] || e != static_cast<std::uint64_t>(expect[n]))
      o.fail("G_" + std::to_string(n) + ": formula " + f.get_str() + ", series " + g[n].get_str() + ", enumeration " +
             std::to_string(e));
  }
  o.note("single-threaded enumeration at n=10: " + std::to_string(enum10) + " s");
  if (enum10 > 60)
    o.fail("enumeration at n=10 exceeded 60 s");
  return o;
}

Outcome crosscheck()
{
  Outcome o;
  for (const auto& f : crosscheck_names()) {
    const Report r = cross_check(f, 8);
    if (!r.pass)
      o.fail(f + ": " + r.counterexample->params + ": " + r.counterexample->lhs + " != " + r.counterexample->rhs);
  }
  o.note(std::to_string(crosscheck_names().size()) + " families, n <= 8");
  return o;
}

Outcome identities()
{
  Outcome o;
  VerifyOptions opt;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t checks = 0;
  const auto reports = verify_all(opt);
  for (const auto& r : reports) {
    checks += r.checks;
    if (!r.pass)
      o.fail(r.id + " at " + r.counterexample->params + ": " + r.counterexample->lhs + " != " + r.counterexample->rhs);
  }
  o.note(std::to_string(reports.size()) + " identities, " + std::to_string(checks) + " checks");
  return o;
}

Outcome bijections()
{
  Outcome o;
  const std::vector<BijectionId> involutions = {BijectionId::phi,   BijectionId::tau,        BijectionId::tau_bar,
                                                BijectionId::varphi, BijectionId::varphi_bar, BijectionId::theta,
                                                BijectionId::rho,   BijectionId::chi1};
  for (BijectionId id : involutions)
    for (unsigned n = 0; n <= 6; ++n)
      if (const Report r = check_bijection(id, n); !r.pass)
        o.fail(bijection_name(id) + " n=" + std::to_string(n) + ": " + r.counterexample->params);
  for (BijectionId id : {BijectionId::chi2, BijectionId::hat_varphi})
    for (unsigned n = 0; n <= 5; ++n)
      if (const Report r = check_bijection(id, n); !r.pass)
        o.fail(bijection_name(id) + " n=" + std::to_string(n) + ": " + r.counterexample->params);
  const std::size_t dom = enumerate_form(domain_form(BijectionId::chi2), 5).size();
  if (dom != 1344)
    o.fail("chi2 domain at semilength 5 has " + std::to_string(dom) + " paths, expected 1344");

  const auto show = [](BijectionId id, const char* p) { return labeled_str(apply_bijection(id, parse_labeled(p))); };
  const char* q2 = "u.dy.u.u.d2.u.u.u.dy.d1.dy.u.u.u.u.d2.u.d1.dy.dy.d1.d1.u.d2.u.u.u.dy.d1.d1";
  if (show(BijectionId::hat_varphi, q2) != "u.dy.u.h.u.u.u.dy.v.dy.u.u.u.h.u.v.dy.dy.v.v.h.u.u.u.dy.v.v")
    o.fail("hat_varphi worked example differs");
  const char* q3 = "u.d2.u.u.d2.u.u.u.d2.d1.d1.u.u.u.u.d2.u.d1.d1.d1.d1.d1.u.d1.u.u.u.d1.d1.d2";
  const std::string lh = show(BijectionId::chi2, q3);
  if (lh != "u.v.u.u.v.h2.u.h2.v.h2.u.u.v.h1.d.v.h1.u.u.d.v")
    o.fail("chi2 worked example differs: " + lh);
  else if (show(BijectionId::chi1, lh.c_str()) != "u.h.u.v.v2.u.u.v2.u.v.v2.u.u.u.v.v1.u.d.v.h.u.u.d.v")
    o.fail("chi1 worked example differs");
  o.note("involutions n <= 6, chi2 and hat_varphi n <= 5, chi2 domain 1344, both worked examples");
  return o;
}

Outcome ldd()
{
  Outcome o;
  const BiSeries& s = solved(Equation::Ldd, 10, 6);
  for (const auto& [stat, ref] : kReference) {
    if (stat != "Ldd")
      continue;
    for (const auto& c : ref)
      if (s.coeff(static_cast<std::size_t>(c.n), static_cast<std::size_t>(c.i)).get_str() != c.v)
        o.fail("[" + std::to_string(c.n) + "," + std::to_string(c.i) + "] printed " + c.v + ", series " +
               s.coeff(static_cast<std::size_t>(c.n), static_cast<std::size_t>(c.i)).get_str());
  }
  BigInt row9 = 0;
  for (std::size_t i = 0; i < 6; ++i)
    row9 += s.coeff(9, i);
  if (!o.pass)
    o.note("series row 9 sums to " + row9.get_str() + " = G_9; exhaustive enumeration at length 9 gives the same row");
  const Tally& t = shared_tally(9);
  for (unsigned n = 0; n <= 9; ++n)
    for (unsigned i = 0; i < 6; ++i)
      if (BigInt(static_cast<unsigned long>(t.pairs(Step::D, Step::D, n, i))) != s.coeff(n, i))
        o.fail("series and enumeration differ at [" + std::to_string(n) + "," + std::to_string(i) + "]");
  o.note("series = enumeration for n <= 9");
  return o;
}

Outcome properties()
{
  Outcome o;
  for (const auto& [name, eq] : equation_names()) {
    const BiSeries& s = solved(eq, 24, 24);
    if (!(evaluate(equation_rhs(eq), s, 24, 24) == s))
      o.fail("residual nonzero for " + name);
  }
  const Series g = g_series(64);
  for (long n = 3; n < 64; ++n) {
    const auto k = static_cast<std::size_t>(n);
    if ((n + 1) * g[k] != (5 * n - 4) * g[k - 1] + 9 * (n - 1) * g[k - 2] + 3 * (n - 2) * g[k - 3])
      o.fail("recurrence fails at n=" + std::to_string(n));
  }
  for (auto which : {LevelArray::Alpha, LevelArray::Beta, LevelArray::Mu, LevelArray::Returns}) {
    const RiordanArray r = named_array(which, 20);
    Series a(20);
    for (std::size_t i = 0; i < 20; ++i)
      a[i] = static_cast<long>(i * i) - 7;
    const Series lhs = r.apply(a);
    for (std::size_t n = 0; n < 20; ++n) {
      for (std::size_t i = n + 1; i < 20; ++i)
        if (r.entry(n, i) != 0)
          o.fail(array_name(which) + " not lower triangular");
      if (r.row_dot(n, a) != lhs[n])
        o.fail(array_name(which) + " row law fails at n=" + std::to_string(n));
    }
  }
  o.note("standalone: ctest -R properties");
  return o;
}

}  // namespace

int main()
{
  print(1, "table reproduction", tables());
  print(2, "G_0..G_10 by formula, series and enumeration", sequence());
  print(3, "three-way cross-check", crosscheck());
  print(4, "identity suite", identities());
  print(5, "bijection certification", bijections());
  print(6, "Ldd series against the printed table and enumeration", ldd());
  print(7, "property suites", properties());
  std::printf("%d/7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
