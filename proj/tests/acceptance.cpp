// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "adhm/hnconfig.hpp"
#include "adhm/localcurve.hpp"
#include "adhm/suites.hpp"
#include "adhm/wallcross.hpp"
#include "oracles.hpp"

namespace {

using namespace adhm;

int failures = 0;

void criterion(int n, bool pass, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " " << detail << std::endl;
  if (!pass) ++failures;
}

std::string first_failure(const SuiteReport& rep) {
  for (const SuiteResult& r : rep.results) {
    if (!r.pass()) return r.name + ": " + r.failures.front();
  }
  return "";
}

std::size_t total_checks(const SuiteReport& rep) {
  std::size_t n = 0;
  for (const SuiteResult& r : rep.results) n += r.checks;
  return n;
}

// Genus-0 closed forms at r <= 4, e <= 8 for both twistings, plus spot values
// read off the u-linear part of the products by hand:
// log prod (1 - u(-q)^n)^n = -u sum n (-1)^n q^n + O(u^2), and the r = 1 part
// of Z_2 is -u sum n q^n / 2 + (bilinear term) = u sum n(n-1)/2 q^n.
void closed_forms() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::size_t entries = 0;
  std::string detail;
  for (int d1 : {1, 0}) {
    const LocalCurveConfig cfg{d1, {4, 8}};
    const Genus0Report rep = verify_genus0(cfg);
    entries += rep.entries.size();
    if (!rep.pass) {
      pass = false;
      for (const Genus0Entry& e : rep.entries) {
        if (!e.match && detail.empty()) {
          detail = "mismatch at d1=" + std::to_string(d1) + " " + to_string(e.charge) + ": " +
                   to_string(e.extracted) + " vs " + to_string(e.closed_form);
        }
      }
    }
    // Coefficients u^r q^n with n < r would be negative-degree invariants,
    // which the extraction never produces; the closed forms must agree.
    const BiSeries z1 = closed_form_series(1, cfg);
    const BiSeries z2 = closed_form_series(2, cfg, closed_form_table_v1(cfg));
    for (int r = 1; r <= 4; ++r) {
      for (int n = 0; n < r; ++n) {
        entries += 2;
        if (z1.coefficient(r, n) != 0 || z2.coefficient(r, n) != 0) {
          pass = false;
          if (detail.empty()) detail = "nonzero closed-form coefficient below the diagonal";
        }
      }
    }
    if (d1 == 1) {
      const InvariantTable a = extract_asymptotic(cfg);
      const bool spots = a.at({1, 0, 1}) == 1 && a.at({1, 1, 1}) == -2 && a.at({1, 2, 1}) == 3 &&
                         a.at({1, 0, 2}) == 0 && a.at({1, 1, 2}) == 1;
      if (!spots && detail.empty()) detail = "spot values differ";
      pass = pass && spots;
    }
  }
  const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
  if (secs.count() >= 120.0 && detail.empty()) detail = "too slow";
  pass = pass && secs.count() < 120.0;
  std::ostringstream os;
  os << "genus-0 closed forms (" << entries << " coefficients, d1 in {0,1}, r<=4, e<=8, "
     << secs.count() << " s)";
  criterion(1, pass, os.str() + (detail.empty() ? "" : " " + detail));
}

void ks_vs_js() {
  const SuiteReport rep = run_ks_vs_js_suite(2024, 100);
  criterion(2, rep.pass() && total_checks(rep) >= 100,
            "JS = KS on " + std::to_string(total_checks(rep)) + " wall instances " + first_failure(rep));
}

void group_identity() {
  const SuiteReport rep = run_group_identity_suite(2024, 100, true);
  criterion(3, rep.pass() && total_checks(rep) >= 100,
            "group identity at r<=5, e<=8 with unit perturbations (" + std::to_string(total_checks(rep)) +
                " checks) " + first_failure(rep));
}

// alpha = (2,1) at delta_c = 1/2: beyond the single block only
// ((1,1,0),(1,0,2)) is an HN sequence, weighted by f_2((1,1)) = 4.
// alpha = (3,1) at delta_c = 1 with H = 0: the pair ((2,1),(1,0)) enters the
// second sum with -g((1,0),(2,1))/2 = 1 and the third with g((2,1),(1,0))/2 = 1.
void hand_jumps() {
  std::mt19937_64 rng(99);
  auto rational = [&] {
    return make_rational(std::uniform_int_distribution<int>(-6, 6)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
  };
  bool pass = true;
  int trials = 0;
  for (int t = 0; t < 50; ++t, ++trials) {
    const Geometry g0 = Geometry::make(0, 1, 1);
    InvariantTable plus(g0, Chamber::Plus);
    for (int v = 1; v <= 2; ++v)
      for (int r = 1; r <= 4; ++r)
        for (int e = 0; e <= 6; ++e) plus.set({r, e, v}, rational());
    const StabilityParam one(Rational(1));
    const Rational jump31 = 2 * plus.at({2, 1, 1}) * plus.at({1, 0, 1});
    for (JumpOptions jo : {JumpOptions{false}, JumpOptions{true}}) {
      pass = pass && jump_v2_js({3, 1}, one, plus, jo) - plus.at({3, 1, 2}) == jump31;
      pass = pass && jump_v2_ks({3, 1}, one, plus, jo) - plus.at({3, 1, 2}) == jump31;
    }

    for (int r = 1; r <= 4; ++r)
      for (int e = 0; e <= 6; ++e) plus.set({r, e, 0}, rational());
    const StabilityParam half(make_rational(1, 2));
    const Rational jump21 = 4 * plus.at({1, 1, 0}) * plus.at({1, 0, 2});
    for (JumpOptions jo : {JumpOptions{false}, JumpOptions{true}}) {
      pass = pass && jump_v2_js({2, 1}, half, plus, jo) - plus.at({2, 1, 2}) == jump21;
      pass = pass && jump_v2_ks({2, 1}, half, plus, jo) - plus.at({2, 1, 2}) == jump21;
    }
  }
  criterion(4, pass, "hand-computed jumps on " + std::to_string(trials) + " random tables");
}

void hn_oracle() {
  bool pass = true;
  std::size_t compared = 0;
  std::string detail;
  for (int r = 1; r <= 5; ++r) {
    for (int v = 1; v <= 2; ++v) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const auto got = enumerate_admissible(r, v, s);
        const auto want = oracle::admissible_by_filter(r, v, s);
        std::set<std::vector<std::pair<int, int>>> g, w;
        for (const auto& c : got) {
          std::vector<std::pair<int, int>> k;
          for (auto x : c) k.emplace_back(x.r, x.v);
          g.insert(k);
        }
        for (const auto& c : want) {
          std::vector<std::pair<int, int>> k;
          for (auto x : c) k.emplace_back(x.r, x.v);
          w.insert(k);
        }
        ++compared;
        if (g != w || g.size() != got.size()) {
          pass = false;
          if (detail.empty()) detail = "admissible r=" + std::to_string(r) + " v=" + std::to_string(v);
        }
      }
      for (int e = -6; e <= 6; ++e) {
        std::set<Rational> deltas{make_rational(1, 3), make_rational(1, 2), Rational(1), Rational(2)};
        for (const Rational& d : enumerate_walls({r, e}, v, {-6, 6}, false).walls) deltas.insert(d);
        for (const Rational& d : deltas) {
          for (int l = 1; l <= r; ++l) {
            for (int k : {l - 1, l - 2}) {
              if (k < 0 || (k == l - 2 && v != 2)) continue;
              const auto seqs = enumerate_hn_minus({r, e}, v, StabilityParam(d), l, k);
              ++compared;
              if (oracle::as_set(seqs, -6, 6) != oracle::hn_minus_by_filter({r, e}, v, d, l, k, -6, 6)) {
                pass = false;
                if (detail.empty()) {
                  detail = "HN alpha=(" + std::to_string(r) + "," + std::to_string(e) + ") v=" +
                           std::to_string(v) + " delta=" + to_string(d);
                }
              }
            }
          }
        }
      }
    }
  }
  criterion(5, pass, "HN enumeration equals brute force (" + std::to_string(compared) + " sets) " + detail);
}

void algebra() {
  const SuiteReport rep = run_algebra_suite(AlgebraSuiteOptions{});
  criterion(6, rep.pass(), "algebra suite (" + std::to_string(total_checks(rep)) + " checks) " + first_failure(rep));
}

void multicover_checks() {
  std::mt19937_64 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  bool pass = true;
  int tables = 0;
  for (int t = 0; t < 100; ++t, ++tables) {
    InvariantTable barred(Geometry::make(t % 3, 1 - t % 3, 1 - t % 3), Chamber::Plus, true);
    for (int v = 0; v <= 2; ++v)
      for (int r = 1; r <= 6; ++r)
        for (int e = -3; e <= 8; ++e)
          if (pick(0, 3) > 0) barred.set({r, e, v}, make_rational(pick(-9, 9), pick(1, 6)));
    const InvariantTable a = multicover(barred, 6);
    pass = pass && same_values(multicover_invert(a, 6), barred);
    pass = pass && a.at({2, 2, 2}) == barred.at({2, 2, 2}) + barred.at({1, 1, 1}) / 4;
  }
  criterion(7, pass, "multicover round trip and A(2,2,2) specialization on " + std::to_string(tables) + " tables");
}

void truncation_stability() {
  bool pass = true;
  std::size_t compared = 0;
  for (int d1 : {1, 0}) {
    const InvariantTable small = extract_asymptotic(LocalCurveConfig{d1, {3, 6}});
    const InvariantTable big = extract_asymptotic(LocalCurveConfig{d1, {5, 10}});
    for (const auto& [c, x] : small.entries()) {
      ++compared;
      pass = pass && big.at(c) == x;
    }
  }
  criterion(8, pass, "invariants at (3,6) unchanged at (5,10) (" + std::to_string(compared) + " values)");
}

}  // namespace

int main() {
  try {
    closed_forms();
    ks_vs_js();
    group_identity();
    hand_jumps();
    hn_oracle();
    algebra();
    multicover_checks();
    truncation_stability();
  } catch (const std::exception& e) {
    std::cout << "aborted: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
