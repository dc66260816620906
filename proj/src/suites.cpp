#include "adhm/suites.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace adhm {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int num, int den) { return uniform(1, den) <= num; }

  Rational rational() {
    Rational x(uniform(-6, 6), uniform(1, 5));
    x.canonicalize();
    return x;
  }

  // A generator charge with 0 <= r <= r_max, 0 <= e <= e_max; Higgs charges
  // get r >= 1.
  Charge charge(int r_max, int e_max) {
    for (;;) {
      const Charge c(uniform(0, r_max), uniform(0, e_max), uniform(0, 2));
      if (c.is_zero() || (c.v == 0 && c.r == 0)) continue;
      return c;
    }
  }

  LieElement lie(int max_terms, int r_max, int e_max) {
    LieElement x;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) x.add_term(charge(r_max, e_max), rational());
    return x;
  }

  Geometry geometry() {
    const int g = uniform(0, 2);
    return Geometry::make(g, 1 - g, 1 - g);
  }

 private:
  std::mt19937_64 rng_;
};

void check(SuiteResult& res, bool ok, const std::function<std::string()>& what) {
  ++res.checks;
  if (!ok) res.failures.push_back(what());
}

std::string table_text(const InvariantTable& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [c, a] : t.entries()) {
    if (a == 0) continue;
    os << (first ? "" : ", ") << to_string(c) << ":" << to_string(a);
    first = false;
  }
  os << "}";
  return os.str();
}

SuiteResult jacobi_checks(Sampler& s, int trials) {
  SuiteResult res{"jacobi and antisymmetry", 0, {}};
  for (int t = 0; t < trials; ++t) {
    const LieAlgebra lie(s.geometry(), TruncationBounds{4, 6});
    const LieElement x = s.lie(3, 2, 3);
    const LieElement y = s.lie(3, 2, 3);
    const LieElement z = s.lie(3, 2, 3);
    const LieElement jac = lie.bracket(x, lie.bracket(y, z)) + lie.bracket(y, lie.bracket(z, x)) +
                           lie.bracket(z, lie.bracket(x, y));
    check(res, jac.is_zero(), [&] { return "Jacobi fails for x=" + to_string(x); });
    check(res, lie.bracket(x, y) == -lie.bracket(y, x),
          [&] { return "antisymmetry fails for x=" + to_string(x) + " y=" + to_string(y); });
  }
  return res;
}

UEAElement random_uea(Sampler& s, const EnvelopingAlgebra& uea) {
  UEAElement x;
  const int n = s.uniform(1, 3);
  for (int i = 0; i < n; ++i) {
    std::vector<Charge> letters;
    const int len = s.uniform(1, 2);
    for (int k = 0; k < len; ++k) letters.push_back(s.charge(1, 2));
    x += uea.product_of_generators(letters) * s.rational();
  }
  return x;
}

SuiteResult associativity_checks(Sampler& s, int trials) {
  SuiteResult res{"star associativity", 0, {}};
  for (int t = 0; t < trials; ++t) {
    const EnvelopingAlgebra uea(LieAlgebra(s.geometry(), TruncationBounds{3, 4}));
    const UEAElement x = random_uea(s, uea);
    const UEAElement y = random_uea(s, uea);
    const UEAElement z = random_uea(s, uea);
    check(res, uea.star(uea.star(x, y), z) == uea.star(x, uea.star(y, z)),
          [&] { return "associativity fails for x=" + to_string(x); });

    // The Higgs sector is abelian.
    LieElement h1, h2;
    h1.add_term(Charge(s.uniform(1, 3), s.uniform(0, 4), 0), s.rational());
    h2.add_term(Charge(s.uniform(1, 3), s.uniform(0, 4), 0), s.rational());
    const UEAElement a = UEAElement::from_lie(h1);
    const UEAElement b = UEAElement::from_lie(h2);
    check(res, uea.star(a, b) == uea.star(b, a), [&] { return "Higgs sector is not abelian"; });
  }
  return res;
}

SuiteResult exp_log_checks(Sampler& s, int trials) {
  SuiteResult res{"exp/log round trip", 0, {}};
  for (int t = 0; t < trials; ++t) {
    const EnvelopingAlgebra uea(LieAlgebra(s.geometry(), TruncationBounds{3, 4}));
    const UEAElement a = UEAElement::from_lie(s.lie(3, 2, 3));
    const UEAElement ea = uea.exp_u(a);
    check(res, uea.log_u(ea) == a, [&] { return "log(exp(a)) != a for a=" + to_string(a); });
    check(res, uea.star(ea, uea.exp_u(-a)) == UEAElement::one(),
          [&] { return "exp(a) exp(-a) != 1 for a=" + to_string(a); });
  }
  return res;
}

SuiteResult commutator_family_checks() {
  SuiteResult res{"genus-0 commutator families", 0, {}};
  const Geometry geom = Geometry::local_curve(1);
  const LieAlgebra lie(geom, TruncationBounds{10, 20});
  auto coeff = [&](const Charge& a, const Charge& b) -> long {
    const auto br = lie.generator_bracket(a, b);
    return br ? br->second : 0;
  };
  for (int r1 = 1; r1 <= 3; ++r1) {
    for (int n1 = 0; n1 <= 4; ++n1) {
      for (int r2 = 0; r2 <= 3; ++r2) {
        for (int n2 = 0; n2 <= 4; ++n2) {
          const Charge e(r1, n1, 0);
          const long ef = sign_power(n1 + r1) * (n1 + r1);
          check(res, coeff(e, Charge(r2, n2, 1)) == ef,
                [&] { return "[e,f] family fails at " + to_string(e); });
          check(res, coeff(e, Charge(r2, n2, 2)) == 2 * (n1 + r1),
                [&] { return "[e,g] family fails at " + to_string(e); });
        }
      }
    }
  }
  for (int r1 = 0; r1 <= 3; ++r1) {
    for (int n1 = 0; n1 <= 4; ++n1) {
      for (int r2 = 0; r2 <= 3; ++r2) {
        for (int n2 = 0; n2 <= 4; ++n2) {
          const RankDegree a1{r1, n1};
          const RankDegree a2{r2, n2};
          check(res, coeff(Charge(a1, 1), Charge(a2, 1)) == weight_g(a1, a2, geom),
                [&] { return "[f,f] family fails at " + to_string(Charge(a1, 1)); });
        }
      }
    }
  }

  // Iterated conjugation of the framing generator by the Higgs exponent:
  // the coefficient of f_(R,N) is a sum over ordered Higgs sequences
  // (k_i, k_i n_i) of (-1)^{j(d1-1)} prod (n_i+1)/k_i (-1)^{(n_i+1)k_i-1} / j!.
  for (int d1 = 0; d1 <= 1; ++d1) {
    const LocalCurveConfig cfg{d1, TruncationBounds{3, 4}};
    const LieAlgebra lc(cfg.geometry(), cfg.bounds);
    const LieElement y = lc.ad_power_series(-higgs_exponent(cfg), LieElement::generator({0, 0, 1}));
    const long s = d1 == 1 ? 1 : -1;
    std::function<Rational(int, int, int)> seq_sum = [&](int r_left, int e_left, int j) {
      if (r_left == 0 && e_left == 0) {
        Rational end = inverse_factorial(j) * (j % 2 == 0 ? 1 : s);
        return end;
      }
      Rational total(0);
      for (int k = 1; k <= r_left; ++k) {
        for (int n = 0; k * n <= e_left; ++n) {
          Rational w(n + 1, k);
          w.canonicalize();
          w *= sign_power(static_cast<long>(n + 1) * k - 1);
          total += w * seq_sum(r_left - k, e_left - k * n, j + 1);
        }
      }
      return total;
    };
    for (int r = 0; r <= 3; ++r) {
      for (int e = 0; e <= 4; ++e) {
        if (r == 0 && e > 0) continue;
        const Charge c(r, e, 1);
        const Rational expected = seq_sum(r, e, 0);
        check(res, y.coefficient(c) == expected, [&] {
          return "Higgs conjugation family fails at " + to_string(c) + " (d1=" +
                 std::to_string(d1) + ")";
        });
      }
    }
  }
  return res;
}

SuiteResult bch_relation_checks(Sampler& s) {
  SuiteResult res{"two-generator BCH relation", 0, {}};
  for (int trial = 0; trial < 3; ++trial) {
    const Geometry geom = s.geometry();
    const EnvelopingAlgebra uea(LieAlgebra(geom, TruncationBounds{4, 6}));
    const LieAlgebra& lie = uea.lie();
    for (int r1 = 0; r1 <= 2; ++r1) {
      for (int e1 = 0; e1 <= 3; ++e1) {
        for (int r2 = 0; r2 <= 2; ++r2) {
          for (int e2 = 0; e2 <= 3; ++e2) {
            const RankDegree a1{r1, e1};
            const RankDegree a2{r2, e2};
            if (a1 == a2) continue;
            const LieElement f1 = LieElement::generator(Charge(a1, 1));
            const LieElement f2 = LieElement::generator(Charge(a2, 1));
            const UEAElement log_prod = uea.log_u(
                uea.star(uea.exp_u(UEAElement::from_lie(f1)), uea.exp_u(UEAElement::from_lie(f2))));
            const LieElement expected = f1 + f2 + lie.bracket(f1, f2) * Rational(1, 2);
            check(res, log_prod == UEAElement::from_lie(expected),
                  [&] { return "BCH fails at " + to_string(Charge(a1, 1)); });
            const Charge sum(a1 + a2, 2);
            Rational half_g(weight_g(a1, a2, geom), 2);
            half_g.canonicalize();
            check(res, lie_coefficients(log_prod).coefficient(sum) == half_g,
                  [&] { return "g-coefficient of log(exp f exp f) fails at " + to_string(sum); });
          }
        }
      }
    }
  }
  return res;
}

InstanceOutcome evaluate_one(const WallInstance& inst, const InstanceChecks& checks) {
  const JumpOptions jo{true};
  InstanceOutcome out;
  out.js = jump_v2_js(inst.alpha, inst.delta_c, inst.plus, jo);
  out.ks = jump_v2_ks(inst.alpha, inst.delta_c, inst.plus, jo);
  if (!checks.group_identity) return out;

  const Ray ray = Ray::through(Charge(inst.alpha, 2), inst.delta_c);
  const std::vector<Charge> charges = ray.charges(checks.bounds.r_max, checks.bounds.e_max, true);
  const InvariantTable minus = minus_table(inst.plus, inst.delta_c, charges, jo);
  const KSGroupSides sides = ks_group_sides(ray, checks.bounds, inst.plus, minus);
  out.group_identity = sides.lhs == sides.rhs;
  if (!checks.perturbations) return out;

  for (const Charge& c : charges) {
    if (c.v == 0) continue;
    InvariantTable bad = minus;
    bad.set(c, bad.at(c) + 1);
    if (ks_group_sides(ray, checks.bounds, inst.plus, bad).rhs == sides.lhs) {
      out.undetected_perturbations.push_back(c);
    }
  }
  return out;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const SuiteResult& r : results) {
    if (!r.pass()) return false;
  }
  return true;
}

SuiteReport run_algebra_suite(const AlgebraSuiteOptions& opts) {
  Sampler s(opts.seed);
  SuiteReport rep;
  rep.results.push_back(jacobi_checks(s, opts.jacobi_trials));
  rep.results.push_back(associativity_checks(s, opts.associativity_trials));
  rep.results.push_back(exp_log_checks(s, opts.exp_log_trials));
  rep.results.push_back(commutator_family_checks());
  rep.results.push_back(bch_relation_checks(s));
  return rep;
}

std::vector<WallInstance> random_wall_instances(std::uint64_t seed, int count) {
  Sampler s(seed);
  std::vector<WallInstance> out;
  for (int round = 0; static_cast<int>(out.size()) < count; ++round) {
    const int g = round % 3;
    InvariantTable plus(Geometry::make(g, 1 - g, 1 - g), Chamber::Plus);
    for (int v = 0; v <= 2; ++v) {
      for (int r = 1; r <= 4; ++r) {
        for (int e = 0; e <= 6; ++e) {
          if (s.chance(3, 4)) plus.set(Charge(r, e, v), s.rational());
        }
      }
    }
    const RankDegree alpha{s.uniform(2, 4), s.uniform(0, 6)};
    const WallSet walls = enumerate_walls(alpha, 2, DegreeWindow{0, alpha.e}, true);
    for (const Rational& w : walls.walls) out.push_back({plus, alpha, StabilityParam(w)});
  }
  return out;
}

std::vector<InstanceOutcome> evaluate_instances(const std::vector<WallInstance>& instances,
                                                const InstanceChecks& checks) {
  std::vector<InstanceOutcome> out(instances.size());
  const auto n = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_one(instances[static_cast<std::size_t>(i)], checks);
  }
  return out;
}

std::string describe(const WallInstance& inst) {
  return "alpha=(" + std::to_string(inst.alpha.r) + "," + std::to_string(inst.alpha.e) +
         ") v=2 delta_c=" + to_string(inst.delta_c.value()) +
         " genus=" + std::to_string(inst.plus.geometry().genus) + " table=" + table_text(inst.plus);
}

SuiteReport run_ks_vs_js_suite(std::uint64_t seed, int trials) {
  const auto instances = random_wall_instances(seed, trials);
  const auto outcomes = evaluate_instances(instances, InstanceChecks{});
  SuiteResult res{"Joyce-Song vs Kontsevich-Soibelman jumps", 0, {}};
  for (std::size_t i = 0; i < instances.size(); ++i) {
    check(res, outcomes[i].js == outcomes[i].ks, [&] {
      return describe(instances[i]) + ": JS=" + to_string(outcomes[i].js) +
             " KS=" + to_string(outcomes[i].ks);
    });
  }
  return SuiteReport{{res}};
}

SuiteReport run_group_identity_suite(std::uint64_t seed, int trials, bool perturbations) {
  const auto instances = random_wall_instances(seed, trials);
  InstanceChecks checks;
  checks.group_identity = true;
  checks.perturbations = perturbations;
  const auto outcomes = evaluate_instances(instances, checks);
  SuiteResult ident{"KS group identity", 0, {}};
  SuiteResult pert{"unit perturbations detected", 0, {}};
  for (std::size_t i = 0; i < instances.size(); ++i) {
    check(ident, outcomes[i].group_identity,
          [&] { return describe(instances[i]) + ": ordered products differ"; });
    if (!perturbations) continue;
    check(pert, outcomes[i].undetected_perturbations.empty(), [&] {
      std::string msg = describe(instances[i]) + ": undetected perturbation at";
      for (const Charge& c : outcomes[i].undetected_perturbations) msg += " " + to_string(c);
      return msg;
    });
  }
  SuiteReport rep{{ident}};
  if (perturbations) rep.results.push_back(pert);
  return rep;
}

SuiteReport run_closed_form_suite(const LocalCurveConfig& cfg) {
  const Genus0Report g0 = verify_genus0(cfg);
  SuiteResult res{"closed-form reproduction (d1=" + std::to_string(cfg.d1) + ")", 0, {}};
  for (const Genus0Entry& e : g0.entries) {
    check(res, e.match, [&] {
      return to_string(e.charge) + ": extracted " + to_string(e.extracted) + ", closed form " +
             to_string(e.closed_form);
    });
  }
  return SuiteReport{{res}};
}

namespace reference {

std::vector<InstanceOutcome> evaluate_instances_serial(const std::vector<WallInstance>& instances,
                                                       const InstanceChecks& checks) {
  std::vector<InstanceOutcome> out;
  out.reserve(instances.size());
  for (const WallInstance& inst : instances) out.push_back(evaluate_one(inst, checks));
  return out;
}

}  // namespace reference

}  // namespace adhm
