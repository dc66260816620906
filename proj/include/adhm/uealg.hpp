#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "adhm/liealg.hpp"

namespace adhm {

// An ordered monomial lambda(c_1) * ... * lambda(c_k). In normal form the
// letters are non-decreasing in the Charge order (v, r, e).
using PBWWord = std::vector<Charge>;

Charge word_charge(const PBWWord& w);
bool is_normal_word(const PBWWord& w);

class UEAElement {
 public:
  using Terms = std::map<PBWWord, Rational>;

  UEAElement() = default;

  static UEAElement one();
  // The embedding L -> U(L): every generator becomes a length-1 word.
  static UEAElement from_lie(const LieElement& x);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const PBWWord& w) const;
  // Coefficient of the empty word.
  Rational scalar_part() const;

  // Throws std::invalid_argument unless w is in normal form.
  void add_term(const PBWWord& w, const Rational& coef);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rational& s);

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Rational& s) { return a *= s; }
  friend UEAElement operator*(const Rational& s, UEAElement a) { return a *= s; }
  UEAElement operator-() const { return *this * Rational(-1); }

  friend bool operator==(const UEAElement&, const UEAElement&) = default;

 private:
  Terms terms_;
};

std::string to_string(const UEAElement& x);

// Restriction to length-1 words.
LieElement lie_coefficients(const UEAElement& x);

struct RayFactor {
  Rational exponent;
  UEAElement argument;
};

class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(LieAlgebra lie) : lie_(std::move(lie)) {}

  const LieAlgebra& lie() const { return lie_; }

  // Associative product in PBW normal form; words whose total charge leaves
  // the truncation are dropped. Parallel over the terms of x.
  UEAElement star(const UEAElement& x, const UEAElement& y) const;

  // Normal form of lambda(c_1) * ... * lambda(c_k) in the given order.
  UEAElement product_of_generators(std::span<const Charge> letters) const;

  UEAElement truncate(const UEAElement& x) const;

  // sum_k x^k / k!. Throws std::invalid_argument if x has a scalar part or a
  // letter that does not grow the truncation grading.
  UEAElement exp_u(const UEAElement& x) const;

  // sum_k (-1)^{k+1} (x - 1)^k / k. Throws std::invalid_argument unless the
  // scalar part is 1 and x - 1 is nilpotent under the truncation.
  UEAElement log_u(const UEAElement& x) const;

  // Left-to-right product of exp_u(exponent * argument).
  UEAElement ordered_ray_product(std::span<const RayFactor> factors) const;

 private:
  void check_nilpotent(const UEAElement& x) const;

  LieAlgebra lie_;
};

namespace reference {
// Serial product kept as the oracle for the parallel kernel.
UEAElement star_serial(const EnvelopingAlgebra& uea, const UEAElement& x, const UEAElement& y);
}  // namespace reference

}  // namespace adhm
