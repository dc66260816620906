#include "adhm/charge.hpp"

#include <stdexcept>

namespace adhm {

Geometry Geometry::make(int genus, int d1, int d2) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (d1 + d2 != 2 - 2 * genus) {
    throw std::invalid_argument("twisting degrees must satisfy d1 + d2 = 2 - 2g");
  }
  return Geometry{genus, d1, d2};
}

Geometry Geometry::local_curve(int d1) {
  if (d1 != 0 && d1 != 1) {
    throw std::invalid_argument("genus-0 local curve requires (d1,d2) = (1,1) or (0,2)");
  }
  return Geometry{0, d1, 2 - d1};
}

std::string to_string(const Charge& c) {
  return "(" + std::to_string(c.r) + "," + std::to_string(c.e) + "," + std::to_string(c.v) + ")";
}

long euler_pairing(const Charge& g1, const Charge& g2, const Geometry& geom) {
  const long shift = geom.genus - 1;
  return static_cast<long>(g2.v) * g1.e - static_cast<long>(g1.v) * g2.e -
         (static_cast<long>(g2.v) * g1.r - static_cast<long>(g1.v) * g2.r) * shift;
}

Rational delta_slope(const Charge& c, const StabilityParam& delta) {
  if (c.r == 0) throw std::domain_error("slope undefined");
  Rational num = Rational(c.e) + delta.value() * c.v;
  Rational out = num / c.r;
  out.canonicalize();
  return out;
}

long weight_f(const RankDegree& alpha, int v, const Geometry& geom) {
  if (alpha.r < 1) throw std::invalid_argument("weight_f requires r >= 1");
  const long x = static_cast<long>(v) * (alpha.e - static_cast<long>(alpha.r) * (geom.genus - 1));
  return sign_power(x) * x;
}

long weight_g(const RankDegree& a1, const RankDegree& a2, const Geometry& geom) {
  const long x = static_cast<long>(a1.e) - a2.e -
                 (static_cast<long>(a1.r) - a2.r) * (geom.genus - 1);
  return sign_power(x) * x;
}

Charge dual_charge(const Charge& c, const Geometry& geom) {
  if (c.r < 1) throw std::invalid_argument("dual_charge requires r >= 1");
  return Charge{c.r, -c.e + 2 * c.r * (geom.genus - 1), c.v};
}

}  // namespace adhm
