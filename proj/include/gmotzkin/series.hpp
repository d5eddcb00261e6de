#pragma once

#include "gmotzkin/bigint.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gm {

class SeriesError : public std::runtime_error {
public:
  enum class Kind { NonzeroConstantTerm, OrderExceeded, NoContraction, DegreeBound };
  SeriesError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  Kind kind() const { return kind_; }
private:
  Kind kind_;
};

// Truncated power series in x: coefficients of x^0 .. x^{order-1}.
class Series {
public:
  Series() = default;
  explicit Series(std::size_t order) : c_(order) {}
  Series(std::size_t order, std::vector<BigInt> coeffs);

  static Series constant(const BigInt& v, std::size_t order);
  static Series x(std::size_t order);
  static Series from_ints(std::vector<long> coeffs, std::size_t order);

  std::size_t order() const { return c_.size(); }
  const BigInt& coeff(std::size_t n) const;
  const BigInt& operator[](std::size_t n) const { return c_[n]; }
  BigInt& operator[](std::size_t n) { return c_[n]; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  Series truncated(std::size_t order) const;
  bool operator==(const Series&) const = default;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const BigInt& k, const Series& a);

private:
  std::vector<BigInt> c_;
};

// outer(inner(x)); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner);
// 1/(1-s); s must have zero constant term.
Series geometric_inverse(const Series& s);
Series power(const Series& s, unsigned k);

// Truncated series in x whose coefficients are polynomials in y (also truncated).
class BiSeries {
public:
  BiSeries() = default;
  BiSeries(std::size_t x_order, std::size_t y_order);

  static BiSeries constant(const BigInt& v, std::size_t xo, std::size_t yo);
  static BiSeries x(std::size_t xo, std::size_t yo);
  static BiSeries y(std::size_t xo, std::size_t yo);
  static BiSeries from_series(const Series& s, std::size_t yo);

  std::size_t x_order() const { return xo_; }
  std::size_t y_order() const { return yo_; }
  const BigInt& coeff(std::size_t n, std::size_t i) const;
  BigInt& at(std::size_t n, std::size_t i) { return c_[n * yo_ + i]; }
  const BigInt& at(std::size_t n, std::size_t i) const { return c_[n * yo_ + i]; }

  // The x-coefficient row n is identically zero.
  bool row_zero(std::size_t n) const;
  // Substitutes an integer for y; exact only when no row was y-truncated.
  Series at_y(long y) const;
  // Column i as a series in x.
  Series column(std::size_t i) const;
  // Throws DegreeBound unless every [x^n y^i] with i > n vanishes.
  void check_degree_bound() const;

  bool operator==(const BiSeries&) const = default;

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BigInt& k, const BiSeries& a);

private:
  std::size_t xo_ = 0, yo_ = 0;
  std::vector<BigInt> c_;
};

// 1/(1-s); the x^0 row of s must vanish.
BiSeries geometric_inverse(const BiSeries& s);

// Index of the first differing x-coefficient (order() when equal).
std::size_t agreement(const Series& a, const Series& b);
std::size_t agreement(const BiSeries& a, const BiSeries& b);

std::string to_json(const Series& s);
std::string to_json(const BiSeries& s);

}
