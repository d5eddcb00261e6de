#include "gmotzkin/tables.hpp"

#include "gmotzkin/equations.hpp"
#include "gmotzkin/formulas.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gm {

namespace {

using CellFn = std::function<BigInt(long, long)>;

CellFn pair_fn(Pair p)
{
  return [p](long n, long i) { return l_count(p, n, i); };
}

const std::vector<std::pair<std::string, CellFn>>& sources()
{
  static const std::vector<std::pair<std::string, CellFn>> s = {
    {"V", [](long n, long i) { return v_count(n, i); }},
    {"H", [](long n, long i) { return h_count(n, i); }},
    {"D", [](long n, long i) { return d_count(n, i); }},
    {"U", [](long n, long i) { return u_count(n, i); }},
    {"alpha", [](long n, long i) { return alpha(n, i); }},
    {"beta", [](long n, long i) { return beta(n, i); }},
    {"mu", [](long n, long i) { return mu(n, i); }},
    {"r", [](long n, long i) { return r_return(n, i); }},
    {"Lud", pair_fn(Pair::ud)},
    {"Luh", pair_fn(Pair::uh)},
    {"Luu", pair_fn(Pair::uu)},
    {"Lhh", pair_fn(Pair::hh)},
    {"Lhd", pair_fn(Pair::hd)},
    {"Lvu", pair_fn(Pair::vu)},
    {"Lvv", pair_fn(Pair::vv)},
    {"Ldu", pair_fn(Pair::du)},
    {"Ldd", nullptr},
    {"Ldv", pair_fn(Pair::dv)},
    {"M", [](long n, long k) { return family(Family::Motzkin, n, k); }},
    {"B", [](long n, long i) { return family(Family::Ballot, n, i); }},
    {"Cpt", [](long n, long i) { return family(Family::PointTriangle, n, i); }},
    {"Gnk", [](long n, long k) { return family(Family::Gnk, n, k); }},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& table_stats()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : sources())
      v.push_back(k);
    return v;
  }();
  return names;
}

bool is_table_stat(const std::string& stat)
{
  const auto& v = table_stats();
  return std::find(v.begin(), v.end(), stat) != v.end();
}

std::vector<Cell> table(const std::string& stat, unsigned rows)
{
  const auto& src = sources();
  const auto it = std::find_if(src.begin(), src.end(), [&](const auto& e) { return e.first == stat; });
  if (it == src.end())
    throw std::invalid_argument("unknown table stat '" + stat + "'");
  CellFn f = it->second;
  if (!f) {
    const std::size_t order = std::max<std::size_t>(rows, 1);
    const BiSeries& s = solved(Equation::Ldd, order, order);
    f = [&s](long n, long i) { return s.coeff(static_cast<std::size_t>(n), static_cast<std::size_t>(i)); };
  }
  std::vector<Cell> out;
  for (long n = 0; n < static_cast<long>(rows); ++n)
    for (long i = 0; i <= n; ++i)
      if (BigInt v = f(n, i); v != 0)
        out.push_back({n, i, std::move(v)});
  return out;
}

std::string table_csv(const std::vector<Cell>& cells)
{
  std::string out = "n,i,value\n";
  for (const auto& c : cells)
    out += std::to_string(c.n) + "," + std::to_string(c.i) + "," + c.value.get_str() + "\n";
  return out;
}

std::string table_json(const std::vector<Cell>& cells)
{
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json o;
    o["n"] = c.n;
    o["i"] = c.i;
    if (c.value.fits_slong_p())
      o["value"] = c.value.get_si();
    else
      o["value"] = c.value.get_str();
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

}
