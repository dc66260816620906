#include "adhm/wallcross.hpp"

#include <algorithm>
#include <stdexcept>

namespace adhm {

namespace {

int moebius(int m) {
  int result = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  return m > 1 ? -result : result;
}

// Transform v >= 1 entries by A(m c) += w(m) A(c) / m^2.
InvariantTable multicover_transform(const InvariantTable& in, int r_max, bool barred_out,
                                    bool use_moebius) {
  InvariantTable out(in.geometry(), in.chamber(), barred_out);
  for (const auto& [c, a] : in.entries()) {
    if (c.v == 0) {
      out.set(c, out.at(c) + a);
      continue;
    }
    for (int m = 1; m * c.v <= TruncationBounds::v_max && m * c.r <= r_max; ++m) {
      const int w = use_moebius ? moebius(m) : 1;
      if (w == 0) continue;
      const Charge mc = c * m;
      Rational add = a * Rational(w, m * m);
      out.set(mc, out.at(mc) + add);
    }
  }
  return out;
}

Rational higgs_weight_product(const std::vector<Charge>& parts, std::size_t count, int v,
                              const InvariantTable& plus) {
  Rational prod(1);
  for (std::size_t i = 0; i < count && prod != 0; ++i) {
    prod *= plus.at(Charge(parts[i].rank_degree(), 0));
    prod *= weight_f(parts[i].rank_degree(), v, plus.geometry());
  }
  return prod;
}

}  // namespace

Rational InvariantTable::at(const Charge& c) const {
  const auto it = entries_.find(c);
  return it == entries_.end() ? Rational(0) : it->second;
}

void InvariantTable::set(const Charge& c, const Rational& value) {
  Rational v = value;
  v.canonicalize();
  entries_[c] = v;
}

bool same_values(const InvariantTable& a, const InvariantTable& b) {
  for (const auto& [c, x] : a.entries()) {
    if (b.at(c) != x) return false;
  }
  for (const auto& [c, x] : b.entries()) {
    if (a.at(c) != x) return false;
  }
  return true;
}

Rational jump_v1(RankDegree alpha, const StabilityParam& delta_c, const InvariantTable& plus,
                 JumpOptions opts) {
  const HNOptions hn{opts.nonneg_degrees};
  Rational total(0);
  for (int l = 1; l <= alpha.r; ++l) {
    for (const HNSequence& seq : enumerate_hn_minus(alpha, 1, delta_c, l, l - 1, hn)) {
      Rational term = plus.at(seq.parts.back());
      if (term == 0) continue;
      term *= higgs_weight_product(seq.parts, static_cast<std::size_t>(l - 1), 1, plus);
      total += term * inverse_factorial(l - 1);
    }
  }
  return total;
}

Rational jump_v2_js(RankDegree alpha, const StabilityParam& delta_c, const InvariantTable& plus,
                    JumpOptions opts) {
  const HNOptions hn{opts.nonneg_degrees};
  const Geometry& geom = plus.geometry();
  Rational total(0);

  // Single framing-2 part after l-1 Higgs parts (l = 1 gives A_+(alpha, 2)).
  for (int l = 1; l <= alpha.r; ++l) {
    for (const HNSequence& seq : enumerate_hn_minus(alpha, 2, delta_c, l, l - 1, hn)) {
      Rational term = plus.at(seq.parts.back());
      if (term == 0) continue;
      term *= higgs_weight_product(seq.parts, static_cast<std::size_t>(l - 1), 2, plus);
      total += term * inverse_factorial(l - 1);
    }
  }

  // Two trailing framing-1 parts after l-1 Higgs parts.
  for (int l = 1; l + 1 <= alpha.r; ++l) {
    for (const HNSequence& seq : enumerate_hn_minus(alpha, 2, delta_c, l + 1, l - 1, hn)) {
      const Charge& a_l = seq.parts[static_cast<std::size_t>(l - 1)];
      const Charge& a_next = seq.parts[static_cast<std::size_t>(l)];
      Rational term = plus.at(a_l) * plus.at(a_next);
      if (term == 0) continue;
      term *= weight_g(a_next.rank_degree(), a_l.rank_degree(), geom);
      if (term == 0) continue;
      term *= higgs_weight_product(seq.parts, static_cast<std::size_t>(l - 1), 2, plus);
      total -= term * inverse_factorial(l - 1) / 2;
    }
  }

  // Pairs of framing-1 parts, each dressed by its own v = 1 wallcrossing.
  for (const HNSequence& pair : enumerate_hn_minus(alpha, 2, delta_c, 2, 0, hn)) {
    const RankDegree a1 = pair.parts[0].rank_degree();
    const RankDegree a2 = pair.parts[1].rank_degree();
    const long g = weight_g(a1, a2, geom);
    if (g == 0) continue;
    Rational term = jump_v1(a1, delta_c, plus, opts);
    if (term == 0) continue;
    term *= jump_v1(a2, delta_c, plus, opts);
    total += term * g / 2;
  }
  return total;
}

Rational jump_v2_ks(RankDegree alpha, const StabilityParam& delta_c, const InvariantTable& plus,
                    JumpOptions opts) {
  if (alpha.r < 1) throw std::invalid_argument("jumps require r >= 1");
  const Charge target(alpha, 2);
  const Ray ray = Ray::through(target, delta_c);
  const LieAlgebra lie(plus.geometry(), TruncationBounds{alpha.r, std::nullopt});

  LieElement higgs, g_lin;
  std::vector<LieElement> f_plus;  // single-generator elements, r descending
  for (const Charge& c : ray.charges(alpha.r, std::nullopt, opts.nonneg_degrees)) {
    const Rational a = plus.at(c);
    if (a == 0) continue;
    if (c.v == 0) higgs.add_term(c, a);
    if (c.v == 1) f_plus.push_back(LieElement::generator(c, a));
    if (c.v == 2) g_lin.add_term(c, a);
  }
  std::sort(f_plus.begin(), f_plus.end(), [](const LieElement& x, const LieElement& y) {
    return x.terms().begin()->first.r > y.terms().begin()->first.r;
  });

  // log of the plus-side product: F + G + 1/2 sum_{i before j} [F_i, F_j].
  LieElement f_sum;
  LieElement cross;
  for (std::size_t i = 0; i < f_plus.size(); ++i) {
    f_sum += f_plus[i];
    for (std::size_t j = i + 1; j < f_plus.size(); ++j) cross += lie.bracket(f_plus[i], f_plus[j]);
  }
  cross *= Rational(1, 2);

  // Conjugating by the Higgs factor carries the plus side to the minus side.
  const LieElement z = lie.ad_power_series(higgs, g_lin + cross);
  const LieElement f_minus = lie.ad_power_series(higgs, f_sum);

  // The minus-side product is ordered by increasing r; strip its cross terms.
  std::vector<LieElement> f_minus_terms;
  for (const auto& [c, a] : f_minus.terms()) f_minus_terms.push_back(LieElement::generator(c, a));
  std::sort(f_minus_terms.begin(), f_minus_terms.end(), [](const LieElement& x, const LieElement& y) {
    return x.terms().begin()->first.r < y.terms().begin()->first.r;
  });
  Rational correction(0);
  for (std::size_t i = 0; i < f_minus_terms.size(); ++i) {
    for (std::size_t j = i + 1; j < f_minus_terms.size(); ++j) {
      correction += lie.bracket(f_minus_terms[i], f_minus_terms[j]).coefficient(target);
    }
  }
  Rational out = z.coefficient(target) - correction / 2;
  return out;
}

Ray Ray::through(const Charge& c, const StabilityParam& delta_c) {
  return Ray{delta_slope(c, delta_c), delta_c};
}

bool Ray::contains(const Charge& c) const {
  return c.r >= 1 && delta_slope(c, delta_c) == slope;
}

std::vector<Charge> Ray::charges(int r_max, std::optional<int> e_max, bool nonneg) const {
  std::vector<Charge> out;
  for (int v = 0; v <= TruncationBounds::v_max; ++v) {
    for (int r = 1; r <= r_max; ++r) {
      Rational e = slope * r - delta_c.value() * v;
      e.canonicalize();
      if (!is_integer(e)) continue;
      const long ev = e.get_num().get_si();
      if ((nonneg || e_max) && ev < 0) continue;
      if (e_max && ev > *e_max) continue;
      out.emplace_back(r, static_cast<int>(ev), v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InvariantTable minus_table(const InvariantTable& plus, const StabilityParam& delta_c,
                           const std::vector<Charge>& charges, JumpOptions opts) {
  InvariantTable out = plus;
  out.set_chamber(Chamber::Minus);
  for (const Charge& c : charges) {
    if (c.v == 1) out.set(c, jump_v1(c.rank_degree(), delta_c, plus, opts));
    if (c.v == 2) out.set(c, jump_v2_js(c.rank_degree(), delta_c, plus, opts));
  }
  return out;
}

namespace {

struct RaySectors {
  LieElement higgs;
  std::map<Rational, LieElement> framed;  // keyed by v / r
};

RaySectors ray_sectors(const Ray& ray, const TruncationBounds& bounds, const InvariantTable& table) {
  for (const Charge& c : ray.charges(bounds.r_max, std::nullopt, false)) {
    if (c.e < 0 && table.at(c) != 0) {
      throw std::invalid_argument("ray charge " + to_string(c) +
                                  " with e < 0 carries a value outside the truncation cone");
    }
  }
  const InvariantTable barred = multicover_invert(table, bounds.r_max);
  RaySectors s;
  for (const Charge& c : ray.charges(bounds.r_max, bounds.e_max, true)) {
    if (c.v == 0) {
      s.higgs.add_term(c, table.at(c));
      continue;
    }
    Rational ratio(c.v, c.r);
    ratio.canonicalize();
    LieElement& sector = s.framed[ratio];
    if (c.v == 1) {
      const Rational a = table.at(c);
      sector.add_term(c, a);
      if (bounds.admits(c * 2)) sector.add_term(c * 2, a / 4);
    } else {
      sector.add_term(c, barred.at(c));
    }
  }
  return s;
}

}  // namespace

KSGroupSides ks_group_sides(const Ray& ray, const TruncationBounds& bounds,
                            const InvariantTable& plus, const InvariantTable& minus) {
  if (!bounds.e_max) throw std::invalid_argument("the group identity needs a degree bound");
  const EnvelopingAlgebra uea(LieAlgebra(plus.geometry(), bounds));

  const RaySectors sp = ray_sectors(ray, bounds, plus);
  std::vector<RayFactor> lhs{{Rational(1), UEAElement::from_lie(sp.higgs)}};
  for (const auto& [ratio, arg] : sp.framed) lhs.push_back({Rational(1), UEAElement::from_lie(arg)});

  const RaySectors sm = ray_sectors(ray, bounds, minus);
  std::vector<RayFactor> rhs;
  for (auto it = sm.framed.rbegin(); it != sm.framed.rend(); ++it) {
    rhs.push_back({Rational(1), UEAElement::from_lie(it->second)});
  }
  rhs.push_back({Rational(1), UEAElement::from_lie(sm.higgs)});

  return {uea.ordered_ray_product(lhs), uea.ordered_ray_product(rhs)};
}

bool verify_ks_group_identity(const Ray& ray, const TruncationBounds& bounds,
                              const InvariantTable& plus, const InvariantTable& minus) {
  const KSGroupSides sides = ks_group_sides(ray, bounds, plus, minus);
  return sides.lhs == sides.rhs;
}

InvariantTable multicover(const InvariantTable& barred, int r_max) {
  return multicover_transform(barred, r_max, false, false);
}

InvariantTable multicover_invert(const InvariantTable& unbarred, int r_max) {
  return multicover_transform(unbarred, r_max, true, true);
}

}  // namespace adhm
