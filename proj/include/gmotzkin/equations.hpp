#pragma once

#include "gmotzkin/series.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gm {

// Right-hand sides of the functional equations, kept as ring-operation trees.
// Self stands for the unknown series.
struct Expr {
  enum class Op { Const, X, Y, Self, Add, Sub, Mul, Geo };
  Op op;
  long value = 0;
  std::shared_ptr<const Expr> a, b;
};

class E {
public:
  E(long v);
  static E x();
  static E y();
  static E self();
  E geo() const;  // 1/(1 - *this)
  const Expr& node() const { return *p_; }
  std::string str() const;

  friend E operator+(const E& a, const E& b);
  friend E operator-(const E& a, const E& b);
  friend E operator*(const E& a, const E& b);

private:
  explicit E(std::shared_ptr<const Expr> p) : p_(std::move(p)) {}
  std::shared_ptr<const Expr> p_;
};

BiSeries evaluate(const E& rhs, const BiSeries& self, std::size_t x_order, std::size_t y_order);

enum class Equation {
  G,      // weighted by integer a, b, c
  GV, GH, GD, GU,  // G with y marking v-, h-, d- or u-steps
  Lud, Luh, Luu, Lhh, Lhd, Lvu, Lvv, Ldu, Ldd, Ldv,
  Catalan, Motzkin, LargeSchroder,
};

struct EquationParams {
  long a = 1, b = 1, c = 1;
};

E equation_rhs(Equation eq, const EquationParams& p = {});
const std::vector<std::pair<std::string, Equation>>& equation_names();
std::optional<Equation> equation_by_name(const std::string& name);

// Iterates S <- RHS(S) from S = 1 exactly x_order times and checks the
// residual. Throws SeriesError::NoContraction when agreement stalls.
BiSeries solve_fixed_point(Equation eq, std::size_t x_order, std::size_t y_order, const EquationParams& p = {});
Series solve_series(Equation eq, std::size_t order, const EquationParams& p = {});

// Memoized solutions; safe to call from several threads.
const BiSeries& solved(Equation eq, std::size_t x_order, std::size_t y_order);

Series catalan_series(std::size_t order);
Series motzkin_series(std::size_t order);
Series large_schroder_series(std::size_t order);
Series little_schroder_series(std::size_t order);
Series g_series(std::size_t order, long a = 1, long b = 1, long c = 1);

}
