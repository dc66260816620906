#pragma once

#include <map>
#include <optional>
#include <string>

#include "adhm/charge.hpp"

namespace adhm {

// Generators lambda(gamma) kept in L(X)_{<=2}. The v <= 2 cut always applies.
// The r bound is an ideal because every admissible charge has r >= 0. The
// optional e bound is only an ideal on the cone e >= 0, so operands are
// checked to lie there whenever it is active.
struct TruncationBounds {
  static constexpr int v_max = 2;
  int r_max = 0;
  std::optional<int> e_max;

  bool admits(const Charge& c) const {
    return c.v <= v_max && c.r <= r_max && (!e_max || c.e <= *e_max);
  }
};

class LieElement {
 public:
  using Terms = std::map<Charge, Rational>;

  LieElement() = default;

  static LieElement generator(const Charge& c, const Rational& coef = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Charge& c) const;

  // Adds coef * lambda(c); zero results are erased. Throws
  // std::invalid_argument for the zero charge, r < 0, or v outside {0,1,2}.
  void add_term(const Charge& c, const Rational& coef);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Rational& s) { return a *= s; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  LieElement operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  Terms terms_;
};

std::string to_string(const LieElement& x);

class LieAlgebra {
 public:
  LieAlgebra(Geometry geom, TruncationBounds bounds);

  const Geometry& geometry() const { return geom_; }
  const TruncationBounds& bounds() const { return bounds_; }

  // [lambda(a), lambda(b)] = (-1)^chi chi lambda(a+b), or nothing when it is
  // truncated away.
  std::optional<std::pair<Charge, long>> generator_bracket(const Charge& a, const Charge& b) const;

  // Bilinear truncated bracket. Parallel over the terms of x.
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  // sum_{j >= 0} ad(a)^j b / j!. Throws std::invalid_argument if some charge
  // of a does not strictly grow the truncation grading (e.g. the zero charge).
  LieElement ad_power_series(const LieElement& a, const LieElement& b) const;

  LieElement truncate(const LieElement& x) const;

  // Throws std::invalid_argument if x has a charge with e < 0 while the e
  // bound is active.
  void check_operand(const LieElement& x) const;

  // Whether ad/products by lambda(c) terminate under these bounds.
  bool grows(const Charge& c) const;

 private:
  Geometry geom_;
  TruncationBounds bounds_;
};

namespace reference {
// Serial bracket kept as the oracle for the parallel kernel.
LieElement bracket_serial(const LieAlgebra& lie, const LieElement& x, const LieElement& y);
}  // namespace reference

}  // namespace adhm
