#pragma once

#include <optional>
#include <vector>

#include "adhm/pseries.hpp"
#include "adhm/uealg.hpp"
#include "adhm/wallcross.hpp"

namespace adhm {

// Genus-0 local curve with twisting degrees (d1, 2 - d1), d1 in {0, 1}.
// bounds.e_max must be set.
struct LocalCurveConfig {
  int d1 = 1;
  TruncationBounds bounds{0, 0};

  Geometry geometry() const { return Geometry::local_curve(d1); }
  // Throws std::invalid_argument for an unsupported d1 or a missing degree bound.
  void validate() const;
};

// H(r, e) = (-1)^{d1-1} / r^2 if r | e, else 0. Requires r >= 1.
Rational higgs_invariant(int r, int e, int d1);

// The Higgs exponent sum_{n, k} H-weighted e_{k, kn} for 0 <= n, k n <= e_max,
// k <= r_max: the logarithm of the product of all Higgs ray factors.
LieElement higgs_exponent(const LocalCurveConfig& cfg);

// exp(f_(0,0) + g_(0,0)/4) * exp(Higgs exponent): the ordered product on the
// empty-chamber side.
UEAElement build_lhs(const LocalCurveConfig& cfg);

// Asymptotic-chamber invariants A(r, e, v) for v in {1, 2}, 1 <= r <= r_max,
// 0 <= e <= e_max (zeros included), by conjugating the framing seeds with the
// Higgs factor and stripping the BCH cross terms of the asymptotic product.
InvariantTable extract_asymptotic(const LocalCurveConfig& cfg);

// Closed-form generating function Z_v truncated at u <= r_max,
// q <= e_max + r_max; the coefficient of u^r q^{e+r} is A(r, e, v). For v = 2
// the v = 1 invariants entering the bilinear correction must be supplied
// (std::invalid_argument otherwise).
BiSeries closed_form_series(int v, const LocalCurveConfig& cfg,
                            const std::optional<InvariantTable>& a1 = std::nullopt);
// The same series with explicit caps u <= u_max, q <= q_max.
BiSeries closed_form_series(int v, int d1, int u_max, int q_max,
                            const std::optional<InvariantTable>& a1 = std::nullopt);

// The v = 1 invariants read off the closed form Z_1: A(r, n - r, 1) for every
// u^r q^n inside the caps.
InvariantTable closed_form_table_v1(const LocalCurveConfig& cfg);
InvariantTable closed_form_table_v1(int d1, int u_max, int q_max);

struct Genus0Entry {
  Charge charge;
  Rational extracted;
  Rational closed_form;
  bool match = false;
};

struct Genus0Report {
  std::vector<Genus0Entry> entries;
  bool pass = true;
};

// Compares extract_asymptotic with the closed forms on every charge in bounds.
Genus0Report verify_genus0(const LocalCurveConfig& cfg);

}  // namespace adhm
