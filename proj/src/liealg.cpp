#include "adhm/liealg.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace adhm {

namespace {

// Below this many term pairs the thread start-up cost dominates.
constexpr std::size_t kParallelPairs = 4096;

void bracket_rows(const LieAlgebra& lie, const std::vector<const LieElement::Terms::value_type*>& xs,
                  std::size_t begin, std::size_t end, const LieElement& y, LieElement& acc) {
  for (std::size_t i = begin; i < end; ++i) {
    const auto& [cx, ax] = *xs[i];
    for (const auto& [cy, ay] : y.terms()) {
      const auto br = lie.generator_bracket(cx, cy);
      if (!br) continue;
      Rational c = ax * ay * br->second;
      acc.add_term(br->first, c);
    }
  }
}

}  // namespace

LieElement LieElement::generator(const Charge& c, const Rational& coef) {
  LieElement x;
  x.add_term(c, coef);
  return x;
}

Rational LieElement::coefficient(const Charge& c) const {
  const auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const Charge& c, const Rational& coef) {
  if (c.is_zero()) throw std::invalid_argument("the zero charge is not a generator");
  if (c.r < 0 || c.v < 0 || c.v > TruncationBounds::v_max) {
    throw std::invalid_argument("generator charge outside r >= 0, v in {0,1,2}: " + to_string(c));
  }
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coef);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [c, a] : o.terms_) add_term(c, a);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [c, a] : o.terms_) {
    Rational neg = -a;
    add_term(c, neg);
  }
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, a] : terms_) a *= s;
  return *this;
}

std::string to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, a] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(a) << "*L" << to_string(c);
  }
  return os.str();
}

LieAlgebra::LieAlgebra(Geometry geom, TruncationBounds bounds) : geom_(geom), bounds_(bounds) {
  if (bounds_.r_max < 0 || (bounds_.e_max && *bounds_.e_max < 0)) {
    throw std::invalid_argument("truncation bounds must be non-negative");
  }
}

std::optional<std::pair<Charge, long>> LieAlgebra::generator_bracket(const Charge& a,
                                                                     const Charge& b) const {
  const Charge sum = a + b;
  if (!bounds_.admits(sum)) return std::nullopt;
  const long chi = euler_pairing(a, b, geom_);
  if (chi == 0) return std::nullopt;
  return std::make_pair(sum, sign_power(chi) * chi);
}

void LieAlgebra::check_operand(const LieElement& x) const {
  if (!bounds_.e_max) return;
  for (const auto& [c, a] : x.terms()) {
    if (c.e < 0) {
      throw std::invalid_argument("charge " + to_string(c) +
                                  " leaves the cone e >= 0 required by the degree bound");
    }
  }
}

bool LieAlgebra::grows(const Charge& c) const {
  return c.r >= 1 || c.v >= 1 || (bounds_.e_max && c.e >= 1);
}

LieElement LieAlgebra::truncate(const LieElement& x) const {
  LieElement out;
  for (const auto& [c, a] : x.terms()) {
    if (bounds_.admits(c)) out.add_term(c, a);
  }
  return out;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  check_operand(x);
  check_operand(y);
  std::vector<const LieElement::Terms::value_type*> xs;
  xs.reserve(x.size());
  for (const auto& t : x.terms()) xs.push_back(&t);

  if (xs.size() * y.size() < kParallelPairs || omp_get_max_threads() == 1) {
    LieElement out;
    bracket_rows(*this, xs, 0, xs.size(), y, out);
    return out;
  }

  std::vector<LieElement> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto nth = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t chunk = (xs.size() + nth - 1) / nth;
    const std::size_t begin = std::min(xs.size(), tid * chunk);
    const std::size_t end = std::min(xs.size(), begin + chunk);
    bracket_rows(*this, xs, begin, end, y, partial[tid]);
  }
  LieElement out;
  for (const auto& p : partial) out += p;
  return out;
}

LieElement LieAlgebra::ad_power_series(const LieElement& a, const LieElement& b) const {
  check_operand(a);
  check_operand(b);
  for (const auto& [c, coef] : a.terms()) {
    if (!grows(c)) {
      throw std::invalid_argument("ad power series does not terminate: charge " + to_string(c) +
                                  " does not grow the truncation grading");
    }
  }
  LieElement result = truncate(b);
  LieElement term = result;
  for (int j = 1; !term.is_zero(); ++j) {
    term = bracket(a, term);
    term *= Rational(1, j);
    result += term;
  }
  return result;
}

namespace reference {

LieElement bracket_serial(const LieAlgebra& lie, const LieElement& x, const LieElement& y) {
  lie.check_operand(x);
  lie.check_operand(y);
  LieElement out;
  for (const auto& [cx, ax] : x.terms()) {
    for (const auto& [cy, ay] : y.terms()) {
      const auto br = lie.generator_bracket(cx, cy);
      if (!br) continue;
      Rational c = ax * ay * br->second;
      out.add_term(br->first, c);
    }
  }
  return out;
}

}  // namespace reference

}  // namespace adhm
