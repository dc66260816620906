#include "adhm/localcurve.hpp"

#include <algorithm>
#include <stdexcept>

namespace adhm {

namespace {

constexpr Charge kFramingOne{0, 0, 1};
constexpr Charge kFramingTwo{0, 0, 2};

int framing_sign(int d1) { return d1 == 1 ? 1 : -1; }  // (-1)^{d1-1}

}  // namespace

void LocalCurveConfig::validate() const {
  (void)Geometry::local_curve(d1);
  if (!bounds.e_max) throw std::invalid_argument("the local-curve pipeline needs a degree bound");
  if (bounds.r_max < 0 || *bounds.e_max < 0) {
    throw std::invalid_argument("truncation bounds must be non-negative");
  }
}

Rational higgs_invariant(int r, int e, int d1) {
  if (r < 1) throw std::invalid_argument("Higgs invariants need r >= 1");
  if (e % r != 0) return Rational(0);
  return Rational(framing_sign(d1), r * r);
}

LieElement higgs_exponent(const LocalCurveConfig& cfg) {
  cfg.validate();
  LieElement h;
  for (int r = 1; r <= cfg.bounds.r_max; ++r) {
    for (int e = 0; e <= *cfg.bounds.e_max; e += r) h.add_term(Charge(r, e, 0), higgs_invariant(r, e, cfg.d1));
  }
  return h;
}

UEAElement build_lhs(const LocalCurveConfig& cfg) {
  cfg.validate();
  const EnvelopingAlgebra uea(LieAlgebra(cfg.geometry(), cfg.bounds));
  LieElement seeds = LieElement::generator(kFramingOne);
  seeds.add_term(kFramingTwo, Rational(1, 4));
  const std::vector<RayFactor> factors{{Rational(1), UEAElement::from_lie(seeds)},
                                       {Rational(1), UEAElement::from_lie(higgs_exponent(cfg))}};
  return uea.ordered_ray_product(factors);
}

InvariantTable extract_asymptotic(const LocalCurveConfig& cfg) {
  cfg.validate();
  const LieAlgebra lie(cfg.geometry(), cfg.bounds);
  LieElement seeds = LieElement::generator(kFramingOne);
  seeds.add_term(kFramingTwo, Rational(1, 4));

  // The asymptotic product equals exp(-H) exp(seeds) exp(H) = exp(y).
  const LieElement y = lie.ad_power_series(-higgs_exponent(cfg), seeds);

  // Factors of the asymptotic product run by decreasing r, then increasing e,
  // with the framing generator last; collect their BCH cross terms.
  std::vector<LieElement> f_terms;
  for (const auto& [c, a] : y.terms()) {
    if (c.v == 1) f_terms.push_back(LieElement::generator(c, a));
  }
  std::sort(f_terms.begin(), f_terms.end(), [](const LieElement& x, const LieElement& z) {
    const Charge& a = x.terms().begin()->first;
    const Charge& b = z.terms().begin()->first;
    return a.r != b.r ? a.r > b.r : a.e < b.e;
  });
  LieElement cross;
  for (std::size_t i = 0; i < f_terms.size(); ++i) {
    for (std::size_t j = i + 1; j < f_terms.size(); ++j) cross += lie.bracket(f_terms[i], f_terms[j]);
  }
  cross *= Rational(1, 2);

  InvariantTable table(cfg.geometry(), Chamber::Asymptotic, false);
  for (int v = 1; v <= 2; ++v) {
    for (int r = 1; r <= cfg.bounds.r_max; ++r) {
      for (int e = 0; e <= *cfg.bounds.e_max; ++e) {
        const Charge c(r, e, v);
        table.set(c, v == 1 ? y.coefficient(c) : Rational(y.coefficient(c) - cross.coefficient(c)));
      }
    }
  }
  return table;
}

BiSeries closed_form_series(int v, const LocalCurveConfig& cfg,
                            const std::optional<InvariantTable>& a1) {
  cfg.validate();
  return closed_form_series(v, cfg.d1, cfg.bounds.r_max, *cfg.bounds.e_max + cfg.bounds.r_max, a1);
}

BiSeries closed_form_series(int v, int d1, int u_max, int q_max,
                            const std::optional<InvariantTable>& a1) {
  (void)Geometry::local_curve(d1);
  if (v != 1 && v != 2) throw std::invalid_argument("closed forms exist for v in {1,2}");
  const long s = framing_sign(d1);

  std::vector<ProductFactor> factors;
  for (int n = 1; n <= q_max; ++n) {
    if (v == 1) {
      factors.push_back({s * n, Rational(n % 2 == 0 ? 1 : -1), 1, n});
    } else {
      factors.push_back({2 * s * n, Rational(1), 1, n});
    }
  }
  BiSeries z = ps_product_formula(factors, u_max, q_max);
  if (v == 1) return z;

  if (!a1) throw std::invalid_argument("the v = 2 closed form needs the v = 1 invariants");
  z *= Rational(1, 4);
  // A1(r, n) in the u^r q^n convention, with the framing seed A1(0, 0) = 1.
  auto a1_at = [&](int r, int n) {
    if (r == 0) return Rational(n == 0 ? 1 : 0);
    return a1->at(Charge(r, n - r, 1));
  };
  for (int r1 = 1; r1 <= u_max; ++r1) {
    for (int n1 = 0; n1 <= q_max; ++n1) {
      const Rational x = a1_at(r1, n1);
      if (x == 0) continue;
      for (int r2 = 0; r2 <= r1 && r1 + r2 <= u_max; ++r2) {
        for (int n2 = 0; n1 + n2 <= q_max; ++n2) {
          const bool in_set = (r2 >= 1 && r1 > r2) || (r2 >= 1 && r1 == r2 && n2 > n1) ||
                              (r2 == 0 && n2 == 0);
          if (!in_set) continue;
          const Rational y = a1_at(r2, n2);
          if (y == 0) continue;
          const long w = n1 - n2;
          Rational term = x * y * (sign_power(w) * w);
          term /= 2;
          z.add(r1 + r2, n1 + n2, -term);
        }
      }
    }
  }
  return z;
}

InvariantTable closed_form_table_v1(const LocalCurveConfig& cfg) {
  cfg.validate();
  return closed_form_table_v1(cfg.d1, cfg.bounds.r_max, *cfg.bounds.e_max + cfg.bounds.r_max);
}

InvariantTable closed_form_table_v1(int d1, int u_max, int q_max) {
  const BiSeries z1 = closed_form_series(1, d1, u_max, q_max);
  InvariantTable table(Geometry::local_curve(d1), Chamber::Asymptotic, false);
  for (int r = 1; r <= z1.u_max(); ++r) {
    for (int n = 0; n <= z1.q_max(); ++n) table.set(Charge(r, n - r, 1), z1.coefficient(r, n));
  }
  return table;
}

Genus0Report verify_genus0(const LocalCurveConfig& cfg) {
  cfg.validate();
  const InvariantTable extracted = extract_asymptotic(cfg);
  const BiSeries z1 = closed_form_series(1, cfg);
  const BiSeries z2 = closed_form_series(2, cfg, closed_form_table_v1(cfg));

  Genus0Report report;
  for (int v = 1; v <= 2; ++v) {
    const BiSeries& z = v == 1 ? z1 : z2;
    for (int r = 1; r <= cfg.bounds.r_max; ++r) {
      for (int e = 0; e <= *cfg.bounds.e_max; ++e) {
        Genus0Entry entry{Charge(r, e, v), extracted.at(Charge(r, e, v)), z.coefficient(r, e + r)};
        entry.match = entry.extracted == entry.closed_form;
        report.pass = report.pass && entry.match;
        report.entries.push_back(std::move(entry));
      }
    }
  }
  return report;
}

}  // namespace adhm
