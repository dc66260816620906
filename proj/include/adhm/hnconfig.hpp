#pragma once

#include <vector>

#include "adhm/charge.hpp"

namespace adhm {

enum class Sign { Plus, Minus };

// rho = (r, v) with r >= 1, v >= 0.
struct RankFraming {
  int r = 0;
  int v = 0;
  friend bool operator==(const RankFraming&, const RankFraming&) = default;
};

using AdmissibleConfig = std::vector<RankFraming>;

// All positive (Sign::Plus) or negative (Sign::Minus) admissible
// configurations of type (r, v): ordered sequences summing to (r, v) whose
// partial framing ratios sit strictly above (below) v/r and whose successive
// ratios v_i/r_i strictly decrease (increase). Requires r, v >= 1.
std::vector<AdmissibleConfig> enumerate_admissible(int r, int v, Sign sign);

// Identifies one negative-side HN index set HN_-(alpha, v, delta_c, l, k).
// Only k = l-1 (all but the last part Higgs) and, for v = 2, k = l-2 (two
// trailing framing-1 parts) enter the rank-two wallcrossing formula.
struct HNKind {
  int v = 0;
  int l = 0;
  int k = 0;
  friend bool operator==(const HNKind&, const HNKind&) = default;
};

// Parts carry their own framing: 0 for Higgs parts, v for the single framed
// part of a k = l-1 sequence, 1 for each of the two trailing parts when k = l-2.
struct HNSequence {
  std::vector<Charge> parts;
  HNKind kind;
  friend bool operator==(const HNSequence&, const HNSequence&) = default;
};

struct HNOptions {
  // Genus-0 mode: discard sequences containing a part of negative degree.
  bool nonneg_degrees = false;
};

// The exact finite set HN_-(alpha, v, delta_c, l, k). Sequences with repeated
// identical parts are listed once per ordering. Throws std::invalid_argument
// for any (v, l, k) outside the supported combinations.
std::vector<HNSequence> enumerate_hn_minus(RankDegree alpha, int v, const StabilityParam& delta_c,
                                           int l, int k, HNOptions opts = {});

// True iff seq satisfies every defining condition of seq.kind for the target.
bool validate_sequence(const HNSequence& seq, const Charge& target, const StabilityParam& delta_c);

struct DegreeWindow {
  int lo = 0;
  int hi = 0;
  bool contains(int e) const { return lo <= e && e <= hi; }
};

struct WallSet {
  std::vector<Rational> walls;  // strictly increasing, all positive
  Charge type;
  DegreeWindow bounds;
  bool nonneg_degrees = false;
};

// Positive critical stability parameters of type (alpha, v) admitting a
// nonempty HN set with at least two parts, all inside the degree window.
WallSet enumerate_walls(RankDegree alpha, int v, DegreeWindow window, bool nonneg_degrees);

// Nonempty HN witness at delta_c with parts inside the window (and
// nonnegative when requested).
bool has_wall_witness(RankDegree alpha, int v, const StabilityParam& delta_c, DegreeWindow window,
                      bool nonneg_degrees);

}  // namespace adhm
