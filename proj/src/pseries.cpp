#include "adhm/pseries.hpp"

#include <sstream>
#include <stdexcept>

namespace adhm {

BiSeries::BiSeries(int u_max, int q_max) : u_max_(u_max), q_max_(q_max) {
  if (u_max < 0 || q_max < 0) throw std::invalid_argument("series caps must be non-negative");
  coef_.assign(static_cast<std::size_t>(u_max + 1) * static_cast<std::size_t>(q_max + 1),
               Rational(0));
}

BiSeries BiSeries::constant(const Rational& c, int u_max, int q_max) {
  BiSeries s(u_max, q_max);
  s.set(0, 0, c);
  return s;
}

BiSeries BiSeries::monomial(const Rational& c, int du, int dq, int u_max, int q_max) {
  BiSeries s(u_max, q_max);
  if (du >= 0 && dq >= 0 && du <= u_max && dq <= q_max) s.set(du, dq, c);
  return s;
}

Rational BiSeries::coefficient(int du, int dq) const {
  if (du < 0 || dq < 0 || du > u_max_ || dq > q_max_) return Rational(0);
  return coef_[index(du, dq)];
}

void BiSeries::set(int du, int dq, const Rational& c) {
  if (du < 0 || dq < 0 || du > u_max_ || dq > q_max_) {
    throw std::out_of_range("series degree beyond caps");
  }
  coef_[index(du, dq)] = c;
  coef_[index(du, dq)].canonicalize();
}

void BiSeries::add(int du, int dq, const Rational& c) {
  if (du < 0 || dq < 0 || du > u_max_ || dq > q_max_) {
    throw std::out_of_range("series degree beyond caps");
  }
  coef_[index(du, dq)] += c;
}

bool BiSeries::is_zero() const {
  for (const Rational& c : coef_) {
    if (c != 0) return false;
  }
  return true;
}

std::map<std::pair<int, int>, Rational> BiSeries::terms() const {
  std::map<std::pair<int, int>, Rational> out;
  for (int i = 0; i <= u_max_; ++i) {
    for (int j = 0; j <= q_max_; ++j) {
      const Rational& c = coef_[index(i, j)];
      if (c != 0) out.emplace(std::make_pair(i, j), c);
    }
  }
  return out;
}

void BiSeries::check_caps(const BiSeries& o) const {
  if (u_max_ != o.u_max_ || q_max_ != o.q_max_) {
    throw std::invalid_argument("series caps mismatch");
  }
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  check_caps(o);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  check_caps(o);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
  return *this;
}

BiSeries& BiSeries::operator*=(const Rational& s) {
  for (Rational& c : coef_) c *= s;
  return *this;
}

BiSeries mul_rows(const BiSeries& a, const BiSeries& b, bool parallel) {
  a.check_caps(b);
  BiSeries out(a.u_max_, a.q_max_);
  const int U = a.u_max_;
  const int Q = a.q_max_;
  // Each output row is owned by one thread and summed in a fixed order.
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i <= U; ++i) {
    Rational prod;
    for (int i1 = 0; i1 <= i; ++i1) {
      for (int j1 = 0; j1 <= Q; ++j1) {
        const Rational& x = a.coef_[a.index(i1, j1)];
        if (x == 0) continue;
        for (int j2 = 0; j1 + j2 <= Q; ++j2) {
          const Rational& y = b.coef_[b.index(i - i1, j2)];
          if (y == 0) continue;
          prod = x * y;
          out.coef_[out.index(i, j1 + j2)] += prod;
        }
      }
    }
  }
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) { return mul_rows(a, b, a.u_max() > 0); }

BiSeries BiSeries::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a series");
  BiSeries result = constant(Rational(1), u_max_, q_max_);
  BiSeries base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

BiSeries ps_log(const BiSeries& f) {
  if (f.coefficient(0, 0) != 1) throw std::invalid_argument("ps_log requires constant term 1");
  BiSeries g = f - BiSeries::constant(Rational(1), f.u_max(), f.q_max());
  BiSeries result(f.u_max(), f.q_max());
  BiSeries power = g;
  for (int k = 1; !power.is_zero(); ++k) {
    result += power * Rational(k % 2 == 1 ? 1 : -1, k);
    power = power * g;
  }
  return result;
}

BiSeries ps_exp(const BiSeries& f) {
  if (f.coefficient(0, 0) != 0) throw std::invalid_argument("ps_exp requires constant term 0");
  BiSeries result = BiSeries::constant(Rational(1), f.u_max(), f.q_max());
  BiSeries term = result;
  for (int k = 1;; ++k) {
    term = term * f;
    if (term.is_zero()) break;
    term *= Rational(1, k);
    result += term;
  }
  return result;
}

BiSeries ps_product_formula(std::span<const ProductFactor> factors, int u_max, int q_max) {
  BiSeries log_sum(u_max, q_max);
  for (const ProductFactor& f : factors) {
    if (f.du < 0 || f.dq < 0 || f.du + f.dq < 1) {
      throw std::invalid_argument("product factor needs a monomial of positive degree");
    }
    if (f.du > u_max || f.dq > q_max || f.exponent == 0 || f.coefficient == 0) continue;
    // exponent * log(1 - c x) = -exponent sum_k c^k x^k / k.
    Rational ck = f.coefficient;
    for (int k = 1; k * f.du <= u_max && k * f.dq <= q_max; ++k) {
      Rational term = -ck * f.exponent / k;
      log_sum.add(k * f.du, k * f.dq, term);
      ck *= f.coefficient;
    }
  }
  return ps_exp(log_sum);
}

namespace {

std::string monomial_text(int du, int dq) {
  std::string out;
  auto factor = [&](const char* var, int d) {
    if (d == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  };
  factor("u", du);
  factor("q", dq);
  return out;
}

}  // namespace

std::string to_text(const BiSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, c] : s.terms()) {
    const std::string mono = monomial_text(deg.first, deg.second);
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << to_string(mag) << "*" << mono;
    }
  }
  return first ? "0" : os.str();
}

namespace reference {

BiSeries mul_serial(const BiSeries& a, const BiSeries& b) { return mul_rows(a, b, false); }

}  // namespace reference

}  // namespace adhm
