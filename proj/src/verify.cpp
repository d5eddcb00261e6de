#include "gmotzkin/verify.hpp"

#include "gmotzkin/bijections.hpp"
#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/equations.hpp"
#include "gmotzkin/formulas.hpp"
#include "gmotzkin/riordan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace gm {

namespace {

// ---- statistics and their evaluation routes ----

enum class Stat { V, H, D, U, Alpha, Beta, Gamma, Mu, Lambda, R, Lud, Luh, Luu, Lhh, Lhd, Lvu, Lvv, Ldu, Ldd, Ldv };

struct StatInfo {
  Stat stat;
  const char* name;
  unsigned offset;  // path length is n + offset
};

const std::vector<StatInfo>& stat_infos()
{
  static const std::vector<StatInfo> v = {
    {Stat::V, "V", 0},         {Stat::H, "H", 0},          {Stat::D, "D", 0},     {Stat::U, "U", 0},
    {Stat::Alpha, "alpha", 1}, {Stat::Beta, "beta", 1},    {Stat::Gamma, "gamma", 2},
    {Stat::Mu, "mu", 1},       {Stat::Lambda, "lambda", 0}, {Stat::R, "r", 0},
    {Stat::Lud, "Lud", 0},     {Stat::Luh, "Luh", 0},      {Stat::Luu, "Luu", 0}, {Stat::Lhh, "Lhh", 0},
    {Stat::Lhd, "Lhd", 0},     {Stat::Lvu, "Lvu", 0},      {Stat::Lvv, "Lvv", 0}, {Stat::Ldu, "Ldu", 0},
    {Stat::Ldd, "Ldd", 0},     {Stat::Ldv, "Ldv", 0},
  };
  return v;
}

const StatInfo& info(Stat s) { return stat_infos()[static_cast<std::size_t>(s)]; }

std::optional<Pair> pair_of(Stat s)
{
  switch (s) {
  case Stat::Lud: return Pair::ud;
  case Stat::Luh: return Pair::uh;
  case Stat::Luu: return Pair::uu;
  case Stat::Lhh: return Pair::hh;
  case Stat::Lhd: return Pair::hd;
  case Stat::Lvu: return Pair::vu;
  case Stat::Lvv: return Pair::vv;
  case Stat::Ldu: return Pair::du;
  case Stat::Ldd: return Pair::dd;
  case Stat::Ldv: return Pair::dv;
  default: return std::nullopt;
  }
}

// Every printed closed form for the statistic, labelled for reports.
std::vector<std::pair<std::string, std::function<BigInt(long, long)>>> formula_variants(Stat s)
{
  using F = std::function<BigInt(long, long)>;
  std::vector<std::pair<std::string, F>> out;
  auto main_alt = [&](BigInt (*f)(long, long, Variant)) {
    out.push_back({"main", [f](long n, long i) -> BigInt { return f(n, i, Variant::Main); }});
    out.push_back({"alt", [f](long n, long i) -> BigInt { return f(n, i, Variant::Alt); }});
  };
  switch (s) {
  case Stat::V: main_alt(v_count); break;
  case Stat::H: main_alt(h_count); break;
  case Stat::D: main_alt(d_count); break;
  case Stat::U: main_alt(u_count); break;
  case Stat::Alpha: out.push_back({"sum", [](long n, long i) -> BigInt { return alpha(n, i); }}); break;
  case Stat::Beta:
  case Stat::Gamma: out.push_back({"sum", [](long n, long i) -> BigInt { return beta(n, i); }}); break;
  case Stat::Mu:
  case Stat::Lambda: out.push_back({"sum", [](long n, long i) -> BigInt { return mu(n, i); }}); break;
  case Stat::R: out.push_back({"sum", [](long n, long i) -> BigInt { return r_return(n, i); }}); break;
  default: {
    const Pair p = *pair_of(s);
    for (int k = 0; k < l_variants(p); ++k) {
      if (p == Pair::du && k == 1)
        out.push_back({"i=0 form", [p](long n, long i) -> BigInt { return i == 0 ? l_count(p, n, 0, 1) : l_count(p, n, i, 0); }});
      else
        out.push_back({"form " + std::to_string(k + 1), [p, k](long n, long i) -> BigInt { return l_count(p, n, i, k); }});
    }
  }
  }
  return out;
}

std::optional<Equation> equation_of(Stat s)
{
  switch (s) {
  case Stat::V: return Equation::GV;
  case Stat::H: return Equation::GH;
  case Stat::D: return Equation::GD;
  case Stat::U: return Equation::GU;
  case Stat::Lud: return Equation::Lud;
  case Stat::Luh: return Equation::Luh;
  case Stat::Luu: return Equation::Luu;
  case Stat::Lhh: return Equation::Lhh;
  case Stat::Lhd: return Equation::Lhd;
  case Stat::Lvu: return Equation::Lvu;
  case Stat::Lvv: return Equation::Lvv;
  case Stat::Ldu: return Equation::Ldu;
  case Stat::Ldd: return Equation::Ldd;
  case Stat::Ldv: return Equation::Ldv;
  default: return std::nullopt;
  }
}

// Series are solved at orders rounded up to a multiple of 16 so that identities
// share solutions.
constexpr long kSeriesCap = 80;

std::optional<BigInt> series_value(Stat s, long n, long i)
{
  if (n < 0 || i < 0 || i > n)
    return BigInt(0);
  if (n >= kSeriesCap)
    return std::nullopt;
  if (auto eq = equation_of(s)) {
    const std::size_t tier = static_cast<std::size_t>(std::max<long>(16, (n / 16 + 1) * 16));
    return solved(*eq, tier, tier).coeff(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
  }
  // Level statistics come from the Riordan arrays built on the solved G and C.
  switch (s) {
  case Stat::Alpha: return alpha(n, i, LevelVariant::Riordan);
  case Stat::Beta:
  case Stat::Gamma: return beta(n, i, LevelVariant::Riordan);
  case Stat::Mu:
  case Stat::Lambda: return mu(n, i, LevelVariant::Riordan);
  case Stat::R: return r_return(n, i, LevelVariant::Riordan);
  default: return std::nullopt;
  }
}

std::optional<BigInt> formula_value(Stat s, long n, long i)
{
  if (n < 0 || i < 0 || i > n)
    return BigInt(0);
  if (s == Stat::Ldd)
    return std::nullopt;
  return formula_variants(s).front().second(n, i);
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::uint64_t tally_value(const Tally& t, Stat s, unsigned len, unsigned i)
{
  switch (s) {
  case Stat::V: return t.z(Step::V, len, i);
  case Stat::H: return t.z(Step::H, len, i);
  case Stat::D: return t.z(Step::D, len, i);
  case Stat::U: return t.z(Step::U, len, i);
  case Stat::Alpha: return t.at_level(Step::U, len, i + 1);
  case Stat::Beta: return t.at_level(Step::V, len, i);
  case Stat::Gamma: return t.at_level(Step::D, len, i);
  case Stat::Mu: return t.at_level(Step::H, len, i);
  case Stat::Lambda: return t.pts(len, i);
  case Stat::R: return t.ret(len, i);
  case Stat::Lud: return t.pairs(Step::U, Step::D, len, i);
  case Stat::Luh: return t.pairs(Step::U, Step::H, len, i);
  case Stat::Luu: return t.pairs(Step::U, Step::U, len, i);
  case Stat::Lhh: return t.pairs(Step::H, Step::H, len, i);
  case Stat::Lhd: return t.pairs(Step::H, Step::D, len, i);
  case Stat::Lvu: return t.pairs(Step::V, Step::U, len, i);
  case Stat::Lvv: return t.pairs(Step::V, Step::V, len, i);
  case Stat::Ldu: return t.pairs(Step::D, Step::U, len, i);
  case Stat::Ldd: return t.pairs(Step::D, Step::D, len, i);
  case Stat::Ldv: return t.pairs(Step::D, Step::V, len, i);
  }
  return 0;
}

struct Route {
  std::string name;
  std::function<std::optional<BigInt>(Stat, long, long)> get;
};

Route formula_route() { return {"formula", formula_value}; }
Route series_route() { return {"series", series_value}; }

Route enumeration_route(const VerifyOptions& opt)
{
  return {"enumeration", [&opt](Stat s, long n, long i) -> std::optional<BigInt> {
            if (n < 0 || i < 0 || i > n)
              return BigInt(0);
            const unsigned len = static_cast<unsigned>(n) + info(s).offset;
            if (len > opt.oracle_n)
              return std::nullopt;
            return big(tally_value(shared_tally(opt.oracle_n, opt.threads), s, len, static_cast<unsigned>(i)));
          }};
}

std::vector<Route> all_routes(const VerifyOptions& opt) { return {formula_route(), series_route(), enumeration_route(opt)}; }

// Optional-propagating accumulator: one missing term makes the sum unavailable.
struct Acc {
  std::optional<BigInt> v = BigInt(0);
  void add(const BigInt& coef, const std::optional<BigInt>& x)
  {
    if (!v)
      return;
    if (!x)
      v.reset();
    else
      *v += coef * *x;
  }
};

// ---- catalog plumbing ----

struct Grid {
  unsigned n_max;
  unsigned m_max;  // 0 with two_param false
  bool two_param;
};

struct Runner {
  const VerifyOptions& opt;
  Report& rep;
  std::map<std::string, std::pair<std::size_t, std::size_t>> route_points;  // evaluated / total

  void note_route(const std::string& name, bool evaluated)
  {
    auto& c = route_points[name];
    c.second += 1;
    if (evaluated)
      c.first += 1;
  }

  // Compares lhs(route, n, m) with rhs(n, m) over the grid on each route.
  void grid(const Grid& g, const std::vector<Route>& routes,
            const std::function<std::optional<BigInt>(const Route&, long, long)>& lhs,
            const std::function<BigInt(long, long)>& rhs)
  {
    for (long n = 0; n <= static_cast<long>(g.n_max); ++n) {
      for (long m = 0; m <= static_cast<long>(g.two_param ? g.m_max : 0); ++m) {
        const BigInt r = rhs(n, m);
        for (const auto& route : routes) {
          const auto l = lhs(route, n, m);
          note_route(route.name, l.has_value());
          if (!l)
            continue;
          ++rep.checks;
          if (*l != r) {
            std::string at = "n=" + std::to_string(n);
            if (g.two_param)
              at += " m=" + std::to_string(m);
            rep.fail(at + " route=" + route.name, to_string(*l), to_string(r));
          }
        }
      }
    }
  }

  void check(bool ok, const std::string& where, const std::string& lhs, const std::string& rhs)
  {
    ++rep.checks;
    if (!ok)
      rep.fail(where, lhs, rhs);
  }

  void bijection(BijectionId id, unsigned n_max, unsigned cap)
  {
    const unsigned top = std::min(n_max, cap);
    for (unsigned n = 0; n <= top; ++n) {
      const Report b = check_bijection(id, n, opt.threads);
      rep.checks += b.checks;
      note_route("bijection", true);
      if (!b.pass && b.counterexample)
        rep.fail(bijection_name(id) + " " + b.counterexample->params, b.counterexample->lhs, b.counterexample->rhs);
    }
  }

  void finish(const std::string& range)
  {
    rep.range = range;
    std::string d;
    for (const auto& [name, c] : route_points) {
      if (c.first == 0)
        continue;
      rep.routes.push_back(name);
      if (!d.empty())
        d += ", ";
      d += name + " " + std::to_string(c.first) + "/" + std::to_string(c.second);
    }
    if (!d.empty())
      rep.detail = rep.detail.empty() ? "evaluated: " + d : rep.detail + "; evaluated: " + d;
  }
};

std::string range_str(const Grid& g)
{
  std::string r = "0<=n<=" + std::to_string(g.n_max);
  if (g.two_param)
    r += ", 0<=m<=" + std::to_string(g.m_max);
  return r;
}

// Σ_{i=0}^{n} w(i) X_{n+shift*i, i}
std::optional<BigInt> weighted_row(const Route& r, Stat s, long n, long shift, const std::function<BigInt(long)>& w)
{
  Acc a;
  for (long i = 0; i <= n; ++i)
    a.add(w(i), r.get(s, n + shift * i, i));
  return a.v;
}

std::function<BigInt(long)> powers(long base)
{
  return [base](long i) -> BigInt { return ipow(base, static_cast<unsigned long>(i)); };
}

// Σ_{i=0}^{n} (-1)^{n-i} C(n,i) X_{n+m+i, m+i}
std::optional<BigInt> binomial_transform(const Route& r, Stat s, long n, long m)
{
  Acc a;
  for (long i = 0; i <= n; ++i)
    a.add(sign_pow(n - i) * binom(n, i), r.get(s, n + m + i, m + i));
  return a.v;
}

// Σ_{i=0}^{2n} (-1)^i C(2n,i) X_{n+a+b*i, c+i}
std::optional<BigInt> alternating_2n(const Route& r, Stat s, long n, long a, long b, long c)
{
  Acc acc;
  for (long i = 0; i <= 2 * n; ++i)
    acc.add(sign_pow(i) * binom(2 * n, i), r.get(s, n + a + b * i, c + i));
  return acc.v;
}

struct Entry {
  std::string id;
  enum class Kind { Formula, TwoParam, Oracle, Variants } kind;
  std::function<void(Runner&, const Grid&)> run;
};

unsigned default_n(Entry::Kind k, const VerifyOptions& opt)
{
  switch (k) {
  case Entry::Kind::Formula: return 12;
  case Entry::Kind::TwoParam: return 10;
  case Entry::Kind::Oracle: return opt.oracle_n;
  case Entry::Kind::Variants: return 25;
  }
  return 12;
}

const std::vector<Entry>& catalog()
{
  using K = Entry::Kind;
  static const std::vector<Entry> entries = {
    {"g_recurrence", K::Formula,
     [](Runner& R, const Grid& g) {
       const long N = g.n_max;
       const Series s = g_series(static_cast<std::size_t>(N) + 1);
       const auto& opt = R.opt;
       std::vector<std::pair<std::string, std::function<std::optional<BigInt>(long)>>> routes = {
         {"formula", [](long n) -> std::optional<BigInt> { return g_simple(n); }},
         {"series", [&s](long n) -> std::optional<BigInt> { return s[static_cast<std::size_t>(n)]; }},
         {"enumeration", [&opt](long n) -> std::optional<BigInt> {
            if (n > static_cast<long>(opt.oracle_n))
              return std::nullopt;
            return big(shared_tally(opt.oracle_n, opt.threads).total[static_cast<std::size_t>(n)]);
          }},
       };
       for (long n = 0; n <= N; ++n) {
         const BigInt ref = g_simple(n);
         for (const auto& [name, get] : routes) {
           const auto v = get(n);
           R.note_route(name, v.has_value());
           if (!v)
             continue;
           R.check(*v == ref, "G_" + std::to_string(n) + " route=" + name, to_string(*v), to_string(ref));
           if (n < 3)
             continue;
           const auto a = get(n - 1), b = get(n - 2), c = get(n - 3);
           const BigInt lhs = (n + 1) * *v;
           const BigInt rhs = (5 * n - 4) * *a + 9 * (n - 1) * *b + 3 * (n - 2) * *c;
           R.check(lhs == rhs, "n=" + std::to_string(n) + " route=" + name, to_string(lhs), to_string(rhs));
         }
       }
     }},
    {"gnk_2nCn", K::Formula,
     [](Runner& R, const Grid& g) {
       for (long n = 0; n <= static_cast<long>(g.n_max); ++n) {
         BigInt a = 0, b = 0;
         for (long k = 0; k <= n / 2; ++k) {
           a += family(Family::Gnk, n + k, k);
           b += binom(n + k, k) * binom(3 * n + 1, n - 2 * k);
         }
         b = exact_div(b, n + 1);
         const BigInt c = ipow(2, static_cast<unsigned long>(n)) * catalan(n);
         R.note_route("formula", true);
         R.check(a == c, "n=" + std::to_string(n) + " sum G_{n+k,k}", to_string(a), to_string(c));
         R.check(b == c, "n=" + std::to_string(n) + " binomial sum", to_string(b), to_string(c));
       }
     }},
    {"thm_2_2_2", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::H, n, 0, powers(-2)); },
              [](long n, long) -> BigInt { return sign_pow(n); });
       R.bijection(BijectionId::phi, g.n_max, 6);
     }},
    {"thm_2_2_3", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long m) { return alternating_2n(r, Stat::H, n, m, 1, m); },
              [](long n, long) -> BigInt { return catalan(n); });
     }},
    {"thm_2_3_2_a", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::D, n, 0, powers(-2)); },
              [](long n, long) -> BigInt { return ipow(2, static_cast<unsigned long>(n)); });
       R.bijection(BijectionId::tau, g.n_max, 6);
     }},
    {"thm_2_3_2_b", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::D, n, 0, powers(-1)); },
              [](long n, long) -> BigInt {
                BigInt s = 0;
                for (long k = 0; k <= n; ++k)
                  s += binom(n, k) * catalan(k);
                return s;
              });
       R.bijection(BijectionId::tau_bar, g.n_max, 6);
     }},
    {"thm_2_3_4_a", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::D, n, 1, powers(-1)); },
              [](long, long) -> BigInt { return BigInt(1); });
       R.bijection(BijectionId::varphi, g.n_max, 6);
     }},
    {"thm_2_3_4_b", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::D, n, 1, powers(-2)); },
              [](long n, long) -> BigInt { return BigInt(n == 0 ? 1 : 0); });
       R.bijection(BijectionId::varphi_bar, g.n_max, 6);
     }},
    {"thm_2_3_5", K::Formula,
     [](Runner& R, const Grid& g) {
       for (long y = -3; y <= 3; ++y) {
         R.grid(g, all_routes(R.opt),
                [y](const Route& r, long n, long) { return weighted_row(r, Stat::D, n, 1, powers(y)); },
                [y, &R](long n, long) -> BigInt {
                  // Polynomial form Σ_k N_{n,k} (y+2)^k (y+1)^{n-k}; rational form off y = -1.
                  BigInt poly = n == 0 ? BigInt(1) : BigInt(0);
                  for (long k = 1; k <= n; ++k)
                    poly += narayana(n, k) * ipow(y + 2, static_cast<unsigned long>(k)) *
                            ipow(y + 1, static_cast<unsigned long>(n - k));
                  if (y != -1) {
                    Rational t(y + 2, y + 1);
                    t.canonicalize();
                    Rational q = Rational(ipow(y + 1, static_cast<unsigned long>(n))) * narayana_poly(n, t);
                    q.canonicalize();
                    R.check(q.get_den() == 1, "n=" + std::to_string(n) + " y=" + std::to_string(y) + " integrality",
                            q.get_str(), "an integer");
                    R.check(q.get_num() == poly, "n=" + std::to_string(n) + " y=" + std::to_string(y) + " forms",
                            q.get_str(), to_string(poly));
                  }
                  return poly;
                });
       }
       R.bijection(BijectionId::hat_varphi, g.n_max, 5);
     }},
    {"coro_2_3_6", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::D, n, 1, powers(-3)); },
              [](long n, long) -> BigInt { return sign_pow(n) * little_schroder(n); });
     }},
    {"thm_2_4_2", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::U, n, 0, powers(-2)); },
              [](long n, long) -> BigInt { return sign_pow(n); });
       R.bijection(BijectionId::theta, g.n_max, 6);
     }},
    {"thm_3_1_2", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long m) { return binomial_transform(r, Stat::Alpha, n, m); },
              [](long n, long) -> BigInt { return ipow(5, static_cast<unsigned long>(n)); });
     }},
    {"thm_3_1_3", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt),
              [](const Route& r, long n, long) {
                return weighted_row(r, Stat::Alpha, n, 0, [](long i) -> BigInt { return sign_pow(i) * binom(i + 2, 2); });
              },
              [](long n, long) -> BigInt { return BigInt((n + 1) * (n + 1)); });
     }},
    {"thm_3_2_3_a", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long m) { return binomial_transform(r, Stat::Beta, n, m); },
              [](long n, long) -> BigInt { return ipow(5, static_cast<unsigned long>(n)); });
     }},
    {"thm_3_2_3_b", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt),
              [](const Route& r, long n, long) {
                return weighted_row(r, Stat::Beta, n, 0, [](long i) -> BigInt { return sign_pow(i) * binom(i + 2, 2); });
              },
              [](long n, long) -> BigInt { return binom(n + 2, 2); });
     }},
    {"coro_3_2_4", K::Formula,
     [](Runner& R, const Grid& g) {
       for (const auto& route : all_routes(R.opt)) {
         for (long n = 1; n <= static_cast<long>(g.n_max); ++n) {
           for (long i = 0; i <= n; ++i) {
             const auto a = route.get(Stat::Alpha, n, i);
             Acc b;
             b.add(1, route.get(Stat::Beta, n, i));
             b.add(1, route.get(Stat::Beta, n - 1, i));
             R.note_route(route.name, a && b.v);
             if (!a || !b.v)
               continue;
             R.check(*a == *b.v, "n=" + std::to_string(n) + " i=" + std::to_string(i) + " route=" + route.name,
                     to_string(*a), to_string(*b.v));
           }
         }
       }
     }},
    {"thm_3_3_3_a", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long m) { return binomial_transform(r, Stat::Mu, n, m); },
              [](long n, long) -> BigInt { return ipow(5, static_cast<unsigned long>(n)); });
     }},
    {"thm_3_3_3_b", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt),
              [](const Route& r, long n, long) {
                return weighted_row(r, Stat::Mu, n, 0, [](long i) -> BigInt { return sign_pow(i) * (i + 1); });
              },
              [](long n, long) -> BigInt { return BigInt(n + 1); });
     }},
    {"thm_3_4_2", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long m) { return binomial_transform(r, Stat::R, n, m); },
              [](long n, long) -> BigInt { return ipow(4, static_cast<unsigned long>(n)); });
     }},
    {"thm_4_1_2", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt),
              [](const Route& r, long n, long m) { return alternating_2n(r, Stat::Lud, n, 2 * m, 2, m); },
              [](long n, long) -> BigInt { return catalan(n); });
     }},
    {"thm_4_1_3", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::Lud, n, 1, powers(-3)); },
              [](long n, long) -> BigInt {
                BigInt s = 0;
                for (long k = 0; k <= n; ++k)
                  s += sign_pow(n - k) * binom(n + 2 * k + 1, n - k) * catalan(k);
                return s;
              });
     }},
    {"thm_4_6_1", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::Lvu, n, 0, powers(2)); },
              [](long n, long) -> BigInt { return ipow(2, static_cast<unsigned long>(n)) * catalan(n); });
       R.bijection(BijectionId::chi2, g.n_max, 5);
       R.bijection(BijectionId::chi1, g.n_max, 6);
     }},
    {"thm_4_6_2", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::Lvu, n, 0, powers(-1)); },
              [](long n, long) -> BigInt {
                BigInt s = 0;
                for (long i = 0; i <= n; ++i)
                  s += sign_pow(i) * binom(n, i) * ipow(3, static_cast<unsigned long>(n - i)) * catalan(i);
                return s;
              });
     }},
    {"thm_4_6_3", K::Formula,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt), [](const Route& r, long n, long) { return weighted_row(r, Stat::Lvu, n, 0, powers(-2)); },
              [](long n, long) -> BigInt { return ipow(2, static_cast<unsigned long>(n)); });
       R.bijection(BijectionId::rho, g.n_max, 6);
     }},
    {"thm_4_6_4", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt),
              [](const Route& r, long n, long m) { return alternating_2n(r, Stat::Lvu, n, m + 2, 1, m + 1); },
              [](long n, long) -> BigInt { return catalan(n); });
     }},
    {"thm_4_7_3", K::TwoParam,
     [](Runner& R, const Grid& g) {
       R.grid(g, all_routes(R.opt),
              [](const Route& r, long n, long m) { return alternating_2n(r, Stat::Lvv, n, m + 2, 1, m + 1); },
              [](long n, long) -> BigInt { return catalan(n); });
     }},
    {"pair_swap_equalities", K::Oracle,
     [](Runner& R, const Grid& g) {
       const unsigned top = std::min(g.n_max, R.opt.oracle_n);
       const Tally& t = shared_tally(R.opt.oracle_n, R.opt.threads);
       struct Eq {
         const char* name;
         Step a1, a2, b1, b2;
         std::function<BigInt(long, long)> f;
       };
       const std::vector<Eq> eqs = {
         {"uv = H", Step::U, Step::V, Step::U, Step::V, [](long n, long i) -> BigInt { return h_count(n, i); }},
         {"hv = vh = D", Step::H, Step::V, Step::V, Step::H, [](long n, long i) -> BigInt { return d_count(n, i); }},
         {"hu = uh", Step::H, Step::U, Step::U, Step::H, [](long n, long i) -> BigInt { return l_count(Pair::uh, n, i); }},
         {"hd = dh", Step::H, Step::D, Step::D, Step::H, [](long n, long i) -> BigInt { return l_count(Pair::hd, n, i); }},
         {"dv = vd", Step::D, Step::V, Step::V, Step::D, [](long n, long i) -> BigInt { return l_count(Pair::dv, n, i); }},
       };
       for (const auto& e : eqs) {
         for (unsigned n = 0; n <= top; ++n) {
           for (unsigned i = 0; i <= n; ++i) {
             const BigInt a = big(t.pairs(e.a1, e.a2, n, i)), b = big(t.pairs(e.b1, e.b2, n, i)), f = e.f(n, i);
             R.note_route("enumeration", true);
             R.note_route("formula", true);
             const std::string at = std::string(e.name) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
             R.check(a == b, at, to_string(a), to_string(b));
             R.check(a == f, at + " formula", to_string(a), to_string(f));
           }
         }
       }
     }},
    {"lemma_3_2_1", K::Oracle,
     [](Runner& R, const Grid& g) {
       const Tally& t = shared_tally(R.opt.oracle_n, R.opt.threads);
       for (unsigned n = 0; n + 2 <= std::min(g.n_max + 2, R.opt.oracle_n); ++n) {
         for (unsigned i = 0; i <= n; ++i) {
           const BigInt b = big(t.at_level(Step::V, n + 1, i)), c = big(t.at_level(Step::D, n + 2, i)), f = beta(n, i);
           R.note_route("enumeration", true);
           R.note_route("formula", true);
           const std::string at = "n=" + std::to_string(n) + " i=" + std::to_string(i);
           R.check(b == c, at + " beta vs gamma", to_string(b), to_string(c));
           R.check(b == f, at + " formula", to_string(b), to_string(f));
         }
       }
     }},
    {"lemma_3_3_1", K::Oracle,
     [](Runner& R, const Grid& g) {
       const Tally& t = shared_tally(R.opt.oracle_n, R.opt.threads);
       for (unsigned n = 0; n + 1 <= std::min(g.n_max + 1, R.opt.oracle_n); ++n) {
         for (unsigned i = 0; i <= n; ++i) {
           const BigInt l = big(t.pts(n, i)), m = big(t.at_level(Step::H, n + 1, i)), f = mu(n, i);
           R.note_route("enumeration", true);
           R.note_route("formula", true);
           const std::string at = "n=" + std::to_string(n) + " i=" + std::to_string(i);
           R.check(l == m, at + " lambda vs mu", to_string(l), to_string(m));
           R.check(l == f, at + " formula", to_string(l), to_string(f));
         }
       }
     }},
    {"remark_3_3_peaks", K::Oracle,
     [](Runner& R, const Grid& g) {
       const Tally& t = shared_tally(R.opt.oracle_n, R.opt.threads);
       for (unsigned n = 0; n + 2 <= std::min(g.n_max + 2, R.opt.oracle_n); ++n) {
         for (unsigned i = 0; i <= n; ++i) {
           const BigInt uv = big(t.uv_peaks(n + 1, i + 1)), ud = big(t.ud_peaks(n + 2, i + 1)), f = mu(n, i);
           R.note_route("enumeration", true);
           R.note_route("formula", true);
           const std::string at = "n=" + std::to_string(n) + " i=" + std::to_string(i);
           R.check(uv == f, at + " uv-peaks", to_string(uv), to_string(f));
           R.check(ud == f, at + " ud-peaks", to_string(ud), to_string(f));
         }
       }
     }},
    {"gf_special_cases", K::Formula,
     [](Runner& R, const Grid& g) {
       const std::size_t order = g.n_max + 1;
       const Series one = Series::constant(1, order);
       const Series x = Series::x(order);
       const Series onepx = one + x;
       const Series one_m2x = one - BigInt(2) * x;
       const BiSeries& lvu = solved(Equation::Lvu, order, order);
       const std::vector<std::pair<const char*, Series>> cases = {
         {"G(-2,1,1)(1+x)", g_series(order, -2, 1, 1) * onepx},
         {"G(1,1,-2)(1-2x)", g_series(order, 1, 1, -2) * one_m2x},
         {"G(1,-2,-2)(1+x)", g_series(order, 1, -2, -2) * onepx},
         {"Lvu(x,-2)(1-2x)", lvu.at_y(-2) * one_m2x},
       };
       // Each product is 1.
       for (const auto& [name, prod] : cases) {
         R.note_route("series", true);
         const std::size_t a = agreement(prod, one);
         R.check(a == order, std::string(name) + " at x^" + std::to_string(a), a < order ? to_string(prod[a]) : "1",
                 a == 0 ? "1" : "0");
       }
       for (long n = 0; n <= static_cast<long>(g.n_max); ++n) {
         R.note_route("formula", true);
         const std::string at = "n=" + std::to_string(n);
         R.check(g_count(n, -2, 1, 1) == sign_pow(n), at + " G_n(-2,1,1)", to_string(g_count(n, -2, 1, 1)),
                 to_string(sign_pow(n)));
         R.check(g_count(n, 1, 1, -2) == ipow(2, static_cast<unsigned long>(n)), at + " G_n(1,1,-2)",
                 to_string(g_count(n, 1, 1, -2)), to_string(ipow(2, static_cast<unsigned long>(n))));
         R.check(g_count(n, 1, -2, -2) == sign_pow(n), at + " G_n(1,-2,-2)", to_string(g_count(n, 1, -2, -2)),
                 to_string(sign_pow(n)));
       }
       // G(1,1,-1) = C(x/(1-x))/(1-x).
       const Series inv = geometric_inverse(x);
       const Series rhs = inv * compose(catalan_series(order), x * inv);
       const Series lhs = g_series(order, 1, 1, -1);
       R.note_route("series", true);
       const std::size_t a = agreement(lhs, rhs);
       R.check(a == order, "G(1,1,-1) at x^" + std::to_string(a), a < order ? to_string(lhs[a]) : "",
               a < order ? to_string(rhs[a]) : "");
     }},
    {"catalan_composition", K::Formula,
     [](Runner& R, const Grid& g) {
       const std::size_t order = g.n_max + 1;
       const Series x = Series::x(order);
       const Series inv = geometric_inverse(x);
       const Series inner = x * (Series::constant(1, order) + x) * inv * inv;
       const Series rhs = inv * compose(catalan_series(order), inner);
       const Series lhs = g_series(order);
       R.note_route("series", true);
       R.note_route("formula", true);
       for (std::size_t n = 0; n < order; ++n) {
         R.check(lhs[n] == rhs[n], "x^" + std::to_string(n), to_string(lhs[n]), to_string(rhs[n]));
         R.check(rhs[n] == g_simple(static_cast<long>(n)), "x^" + std::to_string(n) + " formula", to_string(rhs[n]),
                 to_string(g_simple(static_cast<long>(n))));
       }
     }},
    {"formula_variants", K::Variants,
     [](Runner& R, const Grid& g) {
       const long N = g.n_max;
       for (long n = 0; n <= N; ++n) {
         const BigInt ref = g_count(n, 1, 1, 1);
         for (auto v : {GVariant::B1, GVariant::B2, GVariant::B3}) {
           const BigInt x = g_count(n, 1, 1, 1, v);
           R.check(x == ref, "G_" + std::to_string(n) + " variant " + std::to_string(static_cast<int>(v)), to_string(x),
                   to_string(ref));
         }
         R.check(g_simple(n) == ref, "G_" + std::to_string(n) + " simple", to_string(g_simple(n)), to_string(ref));
         R.check(g_double_sum(n) == ref, "G_" + std::to_string(n) + " double sum", to_string(g_double_sum(n)),
                 to_string(ref));
       }
       for (const auto& si : stat_infos()) {
         if (si.stat == Stat::Ldd || si.stat == Stat::Gamma || si.stat == Stat::Lambda)
           continue;
         auto vars = formula_variants(si.stat);
         const bool level = si.stat == Stat::Alpha || si.stat == Stat::Beta || si.stat == Stat::Mu || si.stat == Stat::R;
         if (vars.size() < 2 && !level)
           continue;
         for (long n = 0; n <= N; ++n) {
           for (long i = 0; i <= n; ++i) {
             const BigInt ref = vars.front().second(n, i);
             for (std::size_t k = 1; k < vars.size(); ++k) {
               const BigInt x = vars[k].second(n, i);
               R.check(x == ref, std::string(si.name) + " n=" + std::to_string(n) + " i=" + std::to_string(i) + " " +
                                   vars[k].first, to_string(x), to_string(ref));
             }
             if (level) {
               const BigInt x = *series_value(si.stat, n, i);
               R.check(x == ref, std::string(si.name) + " n=" + std::to_string(n) + " i=" + std::to_string(i) + " riordan",
                       to_string(x), to_string(ref));
             }
           }
         }
       }
       R.note_route("formula", true);
     }},
  };
  return entries;
}

Report run_entry(const Entry& e, const VerifyOptions& opt)
{
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.id = e.id;
  Grid g{opt.max_n.value_or(default_n(e.kind, opt)), opt.max_m, e.kind == Entry::Kind::TwoParam};
  Runner R{opt, rep, {}};
  try {
    e.run(R, g);
  } catch (const std::exception& ex) {
    rep.fail(range_str(g), std::string("exception: ") + ex.what(), "no exception");
  }
  R.finish(range_str(g));
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::optional<Stat> stat_by_name(const std::string& name)
{
  for (const auto& s : stat_infos())
    if (name == s.name)
      return s.stat;
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& identity_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : catalog())
      v.push_back(e.id);
    return v;
  }();
  return names;
}

bool is_identity(const std::string& id)
{
  const auto& n = identity_names();
  return std::find(n.begin(), n.end(), id) != n.end();
}

Report verify_identity(const std::string& id, const VerifyOptions& opt)
{
  for (const auto& e : catalog())
    if (e.id == id)
      return run_entry(e, opt);
  throw std::invalid_argument("unknown identity '" + id + "'");
}

std::vector<Report> verify_all(const VerifyOptions& opt)
{
  const auto& entries = catalog();
  std::vector<Report> out(entries.size());
  // Inner parallelism stays off when identities already run side by side.
  VerifyOptions inner = opt;
  const unsigned workers = std::max(1u, opt.threads);
  if (workers > 1) {
    // Build the shared oracle once up front with every thread.
    shared_tally(opt.oracle_n, workers);
    inner.threads = 1;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < entries.size();)
      out[k] = run_entry(entries[k], inner);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t)
    pool.emplace_back(work);
  work();
  for (auto& th : pool)
    th.join();
  return out;
}

const std::vector<std::string>& crosscheck_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"G"};
    for (const auto& s : stat_infos())
      v.push_back(s.name);
    return v;
  }();
  return names;
}

bool is_crosscheck_family(const std::string& family)
{
  const auto& n = crosscheck_names();
  return std::find(n.begin(), n.end(), family) != n.end();
}

Report cross_check(const std::string& family, unsigned n_max, const VerifyOptions& opt)
{
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.id = family;
  rep.range = "0<=n<=" + std::to_string(n_max);
  std::size_t cells = 0, enum_cells = 0, series_cells = 0;
  std::size_t formula_forms = 0;
  try {
    if (family == "G") {
      const Series s = g_series(n_max + 1);
      for (long n = 0; n <= static_cast<long>(n_max); ++n) {
        ++cells;
        std::vector<std::pair<std::string, BigInt>> vals = {
          {"formula A", g_count(n, 1, 1, 1, GVariant::A)},   {"formula B1", g_count(n, 1, 1, 1, GVariant::B1)},
          {"formula B2", g_count(n, 1, 1, 1, GVariant::B2)}, {"formula B3", g_count(n, 1, 1, 1, GVariant::B3)},
          {"formula simple", g_simple(n)},                   {"formula double sum", g_double_sum(n)},
          {"series", s[static_cast<std::size_t>(n)]},
        };
        formula_forms = 6;
        ++series_cells;
        if (n <= static_cast<long>(opt.oracle_n)) {
          vals.push_back({"enumeration", BigInt(static_cast<unsigned long>(count_paths(static_cast<unsigned>(n), opt.threads)))});
          ++enum_cells;
        }
        for (const auto& [name, v] : vals) {
          ++rep.checks;
          if (v != vals.front().second)
            rep.fail("n=" + std::to_string(n) + " " + name, to_string(v), to_string(vals.front().second));
        }
      }
    } else {
      const auto st = stat_by_name(family);
      if (!st)
        throw std::invalid_argument("unknown family '" + family + "'");
      const Stat s = *st;
      const auto vars = s == Stat::Ldd ? decltype(formula_variants(s)){} : formula_variants(s);
      formula_forms = vars.size();
      const Route en = enumeration_route(opt);
      for (long n = 0; n <= static_cast<long>(n_max); ++n) {
        for (long i = 0; i <= n; ++i) {
          ++cells;
          std::vector<std::pair<std::string, BigInt>> vals;
          for (const auto& [name, f] : vars)
            vals.push_back({"formula " + name, f(n, i)});
          if (auto v = series_value(s, n, i)) {
            vals.push_back({"series", *v});
            ++series_cells;
          }
          if (auto v = en.get(s, n, i)) {
            vals.push_back({"enumeration", *v});
            ++enum_cells;
          }
          for (const auto& [name, v] : vals) {
            ++rep.checks;
            if (v != vals.front().second)
              rep.fail("n=" + std::to_string(n) + " i=" + std::to_string(i) + " " + name + " vs " + vals.front().first,
                       to_string(v), to_string(vals.front().second));
          }
        }
      }
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& ex) {
    rep.fail(rep.range, std::string("exception: ") + ex.what(), "no exception");
  }
  if (formula_forms > 0)
    rep.routes.push_back("formula");
  if (series_cells > 0)
    rep.routes.push_back("series");
  if (enum_cells > 0)
    rep.routes.push_back("enumeration");
  rep.detail = std::to_string(cells) + " cells; " + std::to_string(formula_forms) + " closed form(s), series on " +
               std::to_string(series_cells) + ", enumeration on " + std::to_string(enum_cells);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}
