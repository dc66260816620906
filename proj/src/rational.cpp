#include "adhm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace adhm {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  return c.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational inverse_factorial(int n) {
  if (n < 0) throw std::invalid_argument("inverse_factorial of a negative integer");
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  Rational out(mpz_class(1), f);
  out.canonicalize();
  return out;
}

}  // namespace adhm
