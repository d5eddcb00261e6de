#pragma once

#include "gmotzkin/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gm {

class BadNormalization : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Lower-triangular array whose column i has generating function d(x) h(x)^i.
class RiordanArray {
public:
  // Requires d(0) = 1 and h(0) = 0.
  RiordanArray(Series d, Series h);

  std::size_t order() const { return d_.order(); }
  const Series& d() const { return d_; }
  const Series& h() const { return h_; }

  BigInt entry(std::size_t n, std::size_t i) const;
  // d(x) A(h(x)).
  Series apply(const Series& a) const;
  // Sum over i of entry(n, i) a_i.
  BigInt row_dot(std::size_t n, const Series& a) const;

private:
  Series d_, h_;
  std::vector<Series> columns_;  // d h^i
};

RiordanArray make_riordan(Series d, Series h);

enum class LevelArray { Alpha = 0, Beta = 1, Mu = 2, Returns = 3, Ballot = 4, PointTriangle = 5 };

// Arrays assembled from fixed-point G(x) and C(x):
//   Alpha   ((1+x) G^3, x(1+x) G^2)
//   Beta    (G^3, x(1+x) G^2)
//   Mu      (G^2, x(1+x) G^2)
//   Returns (1/(1-x), x(1+x) G/(1-x))
//   Ballot  (C^3, x C^2)
//   PointTriangle (C^2, x C^2)
RiordanArray named_array(LevelArray which, std::size_t order = 32);
std::string array_name(LevelArray which);

}
