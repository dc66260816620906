#include "adhm/uealg.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace adhm {

namespace {

constexpr std::size_t kParallelTerms = 64;

// Right multiplication of normal-form words by single generators, memoized
// for the lifetime of one product. Straightening rule for a word w'y and a
// letter x < y:  w' y x = (w' x) y + w' [y, x].
class Straightener {
 public:
  explicit Straightener(const LieAlgebra& lie) : lie_(lie) {}

  const UEAElement& word_times_letter(const PBWWord& w, const Charge& x) {
    auto key = std::make_pair(w, x);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    UEAElement out;
    if (lie_.bounds().admits(word_charge(w) + x)) {
      if (w.empty() || !(x < w.back())) {
        PBWWord nw = w;
        nw.push_back(x);
        out.add_term(nw, Rational(1));
      } else {
        const Charge y = w.back();
        const PBWWord prefix(w.begin(), w.end() - 1);
        const UEAElement& moved = word_times_letter(prefix, x);
        for (const auto& [u, c] : moved.terms()) {
          const UEAElement& tail = word_times_letter(u, y);
          for (const auto& [t, d] : tail.terms()) {
            Rational cd = c * d;
            out.add_term(t, cd);
          }
        }
        if (const auto br = lie_.generator_bracket(y, x)) {
          const UEAElement& rest = word_times_letter(prefix, br->first);
          for (const auto& [t, d] : rest.terms()) {
            Rational cd = d * br->second;
            out.add_term(t, cd);
          }
        }
      }
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  // coef * w * u, accumulated into acc.
  void word_times_word(const PBWWord& w, const PBWWord& u, const Rational& coef, UEAElement& acc) {
    if (!lie_.bounds().admits(word_charge(w) + word_charge(u))) return;
    UEAElement cur;
    cur.add_term(w, coef);
    for (const Charge& letter : u) {
      UEAElement next;
      for (const auto& [word, c] : cur.terms()) {
        for (const auto& [t, d] : word_times_letter(word, letter).terms()) {
          Rational cd = c * d;
          next.add_term(t, cd);
        }
      }
      cur = std::move(next);
      if (cur.is_zero()) return;
    }
    acc += cur;
  }

 private:
  const LieAlgebra& lie_;
  std::map<std::pair<PBWWord, Charge>, UEAElement> cache_;
};

void check_letters(const LieAlgebra& lie, const UEAElement& x) {
  for (const auto& [w, c] : x.terms()) {
    for (const Charge& letter : w) {
      if (lie.bounds().e_max && letter.e < 0) {
        throw std::invalid_argument("letter " + to_string(letter) +
                                    " leaves the cone e >= 0 required by the degree bound");
      }
    }
  }
}

}  // namespace

Charge word_charge(const PBWWord& w) {
  Charge total;
  for (const Charge& c : w) total = total + c;
  return total;
}

bool is_normal_word(const PBWWord& w) { return std::is_sorted(w.begin(), w.end()); }

UEAElement UEAElement::one() {
  UEAElement x;
  x.add_term({}, Rational(1));
  return x;
}

UEAElement UEAElement::from_lie(const LieElement& x) {
  UEAElement out;
  for (const auto& [c, a] : x.terms()) out.add_term({c}, a);
  return out;
}

Rational UEAElement::coefficient(const PBWWord& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational UEAElement::scalar_part() const { return coefficient({}); }

void UEAElement::add_term(const PBWWord& w, const Rational& coef) {
  if (!is_normal_word(w)) throw std::invalid_argument("word is not in PBW normal form");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) {
    Rational neg = -c;
    add_term(w, neg);
  }
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string to_string(const UEAElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (!w.empty()) {
      os << "*[";
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << to_string(w[i]);
      os << "]";
    }
  }
  return os.str();
}

LieElement lie_coefficients(const UEAElement& x) {
  LieElement out;
  for (const auto& [w, c] : x.terms()) {
    if (w.size() == 1) out.add_term(w.front(), c);
  }
  return out;
}

UEAElement EnvelopingAlgebra::star(const UEAElement& x, const UEAElement& y) const {
  check_letters(lie_, x);
  check_letters(lie_, y);
  std::vector<const UEAElement::Terms::value_type*> xs;
  xs.reserve(x.size());
  for (const auto& t : x.terms()) xs.push_back(&t);

  if (xs.size() < kParallelTerms || omp_get_max_threads() == 1) {
    return reference::star_serial(*this, x, y);
  }

  std::vector<UEAElement> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto nth = static_cast<std::size_t>(omp_get_num_threads());
    Straightener st(lie_);
    // Static round-robin keeps the per-thread partial sums deterministic.
    for (std::size_t i = tid; i < xs.size(); i += nth) {
      const auto& [w, c] = *xs[i];
      for (const auto& [u, d] : y.terms()) {
        Rational cd = c * d;
        st.word_times_word(w, u, cd, partial[tid]);
      }
    }
  }
  UEAElement out;
  for (const auto& p : partial) out += p;
  return out;
}

UEAElement EnvelopingAlgebra::product_of_generators(std::span<const Charge> letters) const {
  UEAElement out = UEAElement::one();
  for (const Charge& c : letters) out = star(out, UEAElement::from_lie(LieElement::generator(c)));
  return out;
}

UEAElement EnvelopingAlgebra::truncate(const UEAElement& x) const {
  UEAElement out;
  for (const auto& [w, c] : x.terms()) {
    if (lie_.bounds().admits(word_charge(w))) out.add_term(w, c);
  }
  return out;
}

void EnvelopingAlgebra::check_nilpotent(const UEAElement& x) const {
  if (x.scalar_part() != 0) throw std::invalid_argument("exponential argument has a scalar part");
  check_letters(lie_, x);
  for (const auto& [w, c] : x.terms()) {
    if (!std::any_of(w.begin(), w.end(), [&](const Charge& l) { return lie_.grows(l); })) {
      throw std::invalid_argument("element is not nilpotent under the truncation");
    }
  }
}

UEAElement EnvelopingAlgebra::exp_u(const UEAElement& x) const {
  check_nilpotent(x);
  UEAElement result = UEAElement::one();
  UEAElement term = result;
  for (int k = 1;; ++k) {
    term = star(term, x);
    if (term.is_zero()) break;
    term *= Rational(1, k);
    result += term;
  }
  return result;
}

UEAElement EnvelopingAlgebra::log_u(const UEAElement& x) const {
  if (x.scalar_part() != 1) throw std::invalid_argument("logarithm requires scalar part 1");
  const UEAElement y = x - UEAElement::one();
  check_nilpotent(y);
  UEAElement result;
  UEAElement power = UEAElement::one();
  for (int k = 1;; ++k) {
    power = star(power, y);
    if (power.is_zero()) break;
    Rational c(k % 2 == 1 ? 1 : -1, k);
    result += power * c;
  }
  return result;
}

UEAElement EnvelopingAlgebra::ordered_ray_product(std::span<const RayFactor> factors) const {
  UEAElement out = UEAElement::one();
  for (const RayFactor& f : factors) {
    if (f.exponent == 0) continue;
    out = star(out, exp_u(f.argument * f.exponent));
  }
  return out;
}

namespace reference {

UEAElement star_serial(const EnvelopingAlgebra& uea, const UEAElement& x, const UEAElement& y) {
  Straightener st(uea.lie());
  UEAElement out;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [u, d] : y.terms()) {
      Rational cd = c * d;
      st.word_times_word(w, u, cd, out);
    }
  }
  return out;
}

}  // namespace reference

}  // namespace adhm
