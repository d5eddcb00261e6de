#include "gmotzkin/equations.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace gm {

namespace {

std::shared_ptr<const Expr> leaf(Expr::Op op, long v = 0)
{
  return std::make_shared<const Expr>(Expr{op, v, nullptr, nullptr});
}

}

E::E(long v) : p_(leaf(Expr::Op::Const, v)) {}
E E::x() { return E(leaf(Expr::Op::X)); }
E E::y() { return E(leaf(Expr::Op::Y)); }
E E::self() { return E(leaf(Expr::Op::Self)); }

E E::geo() const { return E(std::make_shared<const Expr>(Expr{Expr::Op::Geo, 0, p_, nullptr})); }

E operator+(const E& a, const E& b) { return E(std::make_shared<const Expr>(Expr{Expr::Op::Add, 0, a.p_, b.p_})); }
E operator-(const E& a, const E& b) { return E(std::make_shared<const Expr>(Expr{Expr::Op::Sub, 0, a.p_, b.p_})); }
E operator*(const E& a, const E& b) { return E(std::make_shared<const Expr>(Expr{Expr::Op::Mul, 0, a.p_, b.p_})); }

namespace {

std::string render(const Expr& e)
{
  switch (e.op) {
  case Expr::Op::Const: return std::to_string(e.value);
  case Expr::Op::X: return "x";
  case Expr::Op::Y: return "y";
  case Expr::Op::Self: return "S";
  case Expr::Op::Add: return "(" + render(*e.a) + " + " + render(*e.b) + ")";
  case Expr::Op::Sub: return "(" + render(*e.a) + " - " + render(*e.b) + ")";
  case Expr::Op::Mul: return render(*e.a) + "*" + render(*e.b);
  case Expr::Op::Geo: return "1/(1 - " + render(*e.a) + ")";
  }
  return "?";
}

BiSeries eval(const Expr& e, const BiSeries& self, std::size_t xo, std::size_t yo)
{
  switch (e.op) {
  case Expr::Op::Const: return BiSeries::constant(e.value, xo, yo);
  case Expr::Op::X: return BiSeries::x(xo, yo);
  case Expr::Op::Y: return BiSeries::y(xo, yo);
  case Expr::Op::Self: return self;
  case Expr::Op::Add: return eval(*e.a, self, xo, yo) + eval(*e.b, self, xo, yo);
  case Expr::Op::Sub: return eval(*e.a, self, xo, yo) - eval(*e.b, self, xo, yo);
  case Expr::Op::Mul: return eval(*e.a, self, xo, yo) * eval(*e.b, self, xo, yo);
  case Expr::Op::Geo: return geometric_inverse(eval(*e.a, self, xo, yo));
  }
  throw std::logic_error("bad expression node");
}

}

std::string E::str() const { return render(*p_); }

BiSeries evaluate(const E& rhs, const BiSeries& self, std::size_t xo, std::size_t yo)
{
  return eval(rhs.node(), self, xo, yo);
}

E equation_rhs(Equation eq, const EquationParams& p)
{
  const E x = E::x(), y = E::y(), S = E::self();
  const E one = 1;
  switch (eq) {
  case Equation::G:
    return one + E(p.a) * x * S + E(p.b) * x * S * S + E(p.c) * x * x * S * S;
  case Equation::GV:
    return one + x * S + y * x * S * S + x * x * S * S;
  case Equation::GH:
    return one + y * x * S + x * S * S + x * x * S * S;
  case Equation::GD:
    return one + x * S + x * S * S + y * x * x * S * S;
  case Equation::GU:
    return one + x * S + y * x * S * S + y * x * x * S * S;
  case Equation::Lud:
    return one + x * (one - x + x * y) * S + x * (one + x) * S * S;
  case Equation::Luh:
    return one + x * S + x * (one + x) * (one - x + x * y) * S * S;
  case Equation::Luu:
    return (one + x * S) * (one + x * (one + x) * S * (x * (one + x) * y * S).geo());
  case Equation::Lhh:
    return (one + x * (x * y).geo()) * (one + x * (one + x) * S * S);
  case Equation::Lhd:
    return one + x * S + x * (one + x - x * x + x * x * y) * S * S;
  case Equation::Lvu:
    return one + x * S + x * x * S * S * (x * y * S).geo() + x * S * (one + x * S) * (x * y * S).geo();
  case Equation::Lvv:
    return (one + x * S + x * x * S * S) * (one + x * S * (x * y * S).geo());
  case Equation::Ldu:
    return one + x * S + x * S * S * (x * x * y * S).geo() + x * x * S * (one + x * S) * (x * x * y * S).geo();
  case Equation::Ldd:
    return one + x * S + x * S * S + x * x * S * (one + x * S + x * S * S) * (x * x * y * S).geo();
  case Equation::Ldv:
    return one + x * S + x * x * S * S + x * S * (one + x * S + y * x * x * S * S) * (x * S).geo();
  case Equation::Catalan:
    return one + x * S * S;
  case Equation::Motzkin:
    return one + x * S + x * x * S * S;
  case Equation::LargeSchroder:
    return one + x * S + x * S * S;
  }
  throw std::logic_error("unknown equation");
}

const std::vector<std::pair<std::string, Equation>>& equation_names()
{
  static const std::vector<std::pair<std::string, Equation>> names{
    {"G", Equation::G},     {"GV", Equation::GV},   {"GH", Equation::GH},   {"GD", Equation::GD},
    {"GU", Equation::GU},   {"Lud", Equation::Lud}, {"Luh", Equation::Luh}, {"Luu", Equation::Luu},
    {"Lhh", Equation::Lhh}, {"Lhd", Equation::Lhd}, {"Lvu", Equation::Lvu}, {"Lvv", Equation::Lvv},
    {"Ldu", Equation::Ldu}, {"Ldd", Equation::Ldd}, {"Ldv", Equation::Ldv}, {"C", Equation::Catalan},
    {"M", Equation::Motzkin}, {"R", Equation::LargeSchroder},
  };
  return names;
}

std::optional<Equation> equation_by_name(const std::string& name)
{
  for (const auto& [n, e] : equation_names())
    if (n == name)
      return e;
  return std::nullopt;
}

BiSeries solve_fixed_point(Equation eq, std::size_t xo, std::size_t yo, const EquationParams& p)
{
  const E rhs = equation_rhs(eq, p);
  BiSeries s = BiSeries::constant(1, xo, yo);
  std::size_t prev = 0;
  for (std::size_t t = 0; t < xo; ++t) {
    BiSeries next = evaluate(rhs, s, xo, yo);
    const std::size_t agree = agreement(next, s);
    s = std::move(next);
    if (agree == xo)
      break;
    if (agree <= prev && t > 0)
      throw SeriesError(SeriesError::Kind::NoContraction,
                        "iteration " + std::to_string(t + 1) + " did not extend agreement past x^" + std::to_string(agree));
    prev = agree;
  }
  if (agreement(evaluate(rhs, s, xo, yo), s) != xo)
    throw SeriesError(SeriesError::Kind::NoContraction, "residual RHS(S) - S is nonzero after iteration");
  if (xo > 0 && s.at(0, 0) != 1)
    throw SeriesError(SeriesError::Kind::NoContraction, "solution constant term is not 1");
  return s;
}

Series solve_series(Equation eq, std::size_t order, const EquationParams& p)
{
  return solve_fixed_point(eq, order, 1, p).column(0);
}

const BiSeries& solved(Equation eq, std::size_t xo, std::size_t yo)
{
  static std::mutex mu;
  static std::map<std::tuple<Equation, std::size_t, std::size_t>, std::unique_ptr<BiSeries>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(eq, xo, yo);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<BiSeries>(solve_fixed_point(eq, xo, yo))).first;
  return *it->second;
}

Series catalan_series(std::size_t order) { return solve_series(Equation::Catalan, order); }
Series motzkin_series(std::size_t order) { return solve_series(Equation::Motzkin, order); }
Series large_schroder_series(std::size_t order) { return solve_series(Equation::LargeSchroder, order); }

Series little_schroder_series(std::size_t order)
{
  Series r = large_schroder_series(order);
  for (std::size_t n = 1; n < order; ++n)
    r[n] = exact_div(r[n], 2);
  return r;
}

Series g_series(std::size_t order, long a, long b, long c)
{
  return solve_series(Equation::G, order, {a, b, c});
}

}
