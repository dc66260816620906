#pragma once

#include <compare>
#include <string>
#include <tuple>

#include "adhm/rational.hpp"

namespace adhm {

// Curve data (X, M1, M2) reduced to what the numerics see: the genus and the
// degrees of the two twisting line bundles, with M1 (x) M2 = K_X^{-1}.
struct Geometry {
  int genus = 0;
  int d1 = 1;
  int d2 = 1;

  // Throws std::invalid_argument unless d1 + d2 = 2 - 2 genus and genus >= 0.
  static Geometry make(int genus, int d1, int d2);
  // Genus-0 local curve, (d1, d2) in {(1,1), (0,2)}.
  static Geometry local_curve(int d1);

  bool is_genus0_local_curve() const { return genus == 0 && (d1 == 1 || d1 == 0); }

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

// alpha = (r, e): D2 rank and D0 degree with the framing suppressed.
struct RankDegree {
  int r = 0;
  int e = 0;

  RankDegree operator+(const RankDegree& o) const { return {r + o.r, e + o.e}; }
  RankDegree operator-(const RankDegree& o) const { return {r - o.r, e - o.e}; }
  friend auto operator<=>(const RankDegree&, const RankDegree&) = default;
};

// gamma = (r, e, v). The ordering is lexicographic on (v, r, e); it is the
// fixed generator order used for PBW words.
struct Charge {
  int r = 0;
  int e = 0;
  int v = 0;

  constexpr Charge() = default;
  constexpr Charge(int r_, int e_, int v_) : r(r_), e(e_), v(v_) {}
  constexpr Charge(RankDegree a, int v_) : r(a.r), e(a.e), v(v_) {}

  constexpr RankDegree rank_degree() const { return {r, e}; }
  constexpr bool is_zero() const { return r == 0 && e == 0 && v == 0; }

  constexpr Charge operator+(const Charge& o) const { return {r + o.r, e + o.e, v + o.v}; }
  constexpr Charge operator-(const Charge& o) const { return {r - o.r, e - o.e, v - o.v}; }
  constexpr Charge operator*(int k) const { return {k * r, k * e, k * v}; }

  friend constexpr bool operator==(const Charge&, const Charge&) = default;
  friend constexpr std::strong_ordering operator<=>(const Charge& a, const Charge& b) {
    return std::tie(a.v, a.r, a.e) <=> std::tie(b.v, b.r, b.e);
  }
};

std::string to_string(const Charge& c);

class StabilityParam {
 public:
  StabilityParam() = default;
  explicit StabilityParam(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

  const Rational& value() const { return value_; }

  friend bool operator==(const StabilityParam& a, const StabilityParam& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const StabilityParam& a, const StabilityParam& b) {
    return a.value_ < b.value_;
  }

 private:
  Rational value_{0};
};

// chi(g1, g2) = v2 e1 - v1 e2 - (v2 r1 - v1 r2)(g - 1).
long euler_pairing(const Charge& g1, const Charge& g2, const Geometry& geom);

// (e + delta v) / r; throws std::domain_error("slope undefined") when r = 0.
Rational delta_slope(const Charge& c, const StabilityParam& delta);

// f_v(alpha) = (-1)^{v(e - r(g-1))} v (e - r(g-1)), the weight of ad(e_alpha)
// on the framing-v sector.
long weight_f(const RankDegree& alpha, int v, const Geometry& geom);

// g(alpha1, alpha2) = (-1)^x x with x = e1 - e2 - (r1 - r2)(g - 1).
long weight_g(const RankDegree& a1, const RankDegree& a2, const Geometry& geom);

// (r, -e + 2 r (g - 1), v); an involution.
Charge dual_charge(const Charge& c, const Geometry& geom);

}  // namespace adhm
