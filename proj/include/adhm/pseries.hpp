#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adhm/rational.hpp"

namespace adhm {

// Truncated power series in (u, q): all coefficients of u^i q^j with
// i <= u_max, j <= q_max, stored densely. Operations between series with
// different caps throw std::invalid_argument.
class BiSeries {
 public:
  BiSeries(int u_max, int q_max);

  static BiSeries constant(const Rational& c, int u_max, int q_max);
  // c u^du q^dq, or zero when the monomial lies beyond the caps.
  static BiSeries monomial(const Rational& c, int du, int dq, int u_max, int q_max);

  int u_max() const { return u_max_; }
  int q_max() const { return q_max_; }

  // 0 for degrees outside the caps.
  Rational coefficient(int du, int dq) const;
  void set(int du, int dq, const Rational& c);
  void add(int du, int dq, const Rational& c);

  bool is_zero() const;
  // Nonzero coefficients keyed by (deg_u, deg_q).
  std::map<std::pair<int, int>, Rational> terms() const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Rational& s);

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(BiSeries a, const Rational& s) { return a *= s; }
  friend BiSeries operator*(const Rational& s, BiSeries a) { return a *= s; }
  // Truncated product, parallel over output rows in u.
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

  // a^n for n >= 0 by repeated squaring.
  BiSeries pow(int n) const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  friend BiSeries mul_rows(const BiSeries&, const BiSeries&, bool);
  std::size_t index(int du, int dq) const {
    return static_cast<std::size_t>(du) * static_cast<std::size_t>(q_max_ + 1) +
           static_cast<std::size_t>(dq);
  }
  void check_caps(const BiSeries& o) const;

  int u_max_;
  int q_max_;
  std::vector<Rational> coef_;
};

// Throws std::invalid_argument unless the constant term is 1.
BiSeries ps_log(const BiSeries& f);
// Throws std::invalid_argument unless the constant term is 0.
BiSeries ps_exp(const BiSeries& f);

// The factor (1 - coefficient u^du q^dq)^exponent with du + dq >= 1.
struct ProductFactor {
  long exponent = 1;
  Rational coefficient{1};
  int du = 0;
  int dq = 0;
};

// Truncated product of the factors, evaluated as exp(sum exponent log(...)).
// Factors whose monomial is beyond the caps are skipped.
BiSeries ps_product_formula(std::span<const ProductFactor> factors, int u_max, int q_max);

// "1 + u*q - 2*u*q^2 + 3*u*q^3": terms ordered by u-degree then q-degree.
std::string to_text(const BiSeries& s);

namespace reference {
// Serial product kept as the oracle for the parallel kernel.
BiSeries mul_serial(const BiSeries& a, const BiSeries& b);
}  // namespace reference

}  // namespace adhm
