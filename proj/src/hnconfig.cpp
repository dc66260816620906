#include "adhm/hnconfig.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace adhm {

namespace {

// Ratio comparison a.v/a.r against b.v/b.r without division (r >= 1).
long ratio_cmp(long v1, long r1, long v2, long r2) { return v1 * r2 - v2 * r1; }

void extend_admissible(int r, int v, Sign sign, int used_r, int used_v, AdmissibleConfig& prefix,
                       std::vector<AdmissibleConfig>& out) {
  if (used_r == r && used_v == v) {
    out.push_back(prefix);
    return;
  }
  for (int ri = 1; ri <= r - used_r; ++ri) {
    for (int vi = 0; vi <= v - used_v; ++vi) {
      const int pr = used_r + ri;
      const int pv = used_v + vi;
      const bool complete = (pr == r && pv == v);
      if (pr == r && !complete) continue;
      if (!prefix.empty()) {
        const long c = ratio_cmp(prefix.back().v, prefix.back().r, vi, ri);
        if (sign == Sign::Plus ? c <= 0 : c >= 0) continue;
      }
      if (!complete) {
        const long c = ratio_cmp(pv, pr, v, r);
        if (sign == Sign::Plus ? c <= 0 : c >= 0) continue;
      }
      prefix.push_back({ri, vi});
      extend_admissible(r, v, sign, pr, pv, prefix, out);
      prefix.pop_back();
    }
  }
}

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> comp(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      if (left >= 1) {
        comp[idx] = left;
        fn(comp);
      }
      return;
    }
    for (int x = 1; x <= left - (parts - 1 - idx); ++x) {
      comp[idx] = x;
      rec(idx + 1, left - x);
    }
  };
  if (parts >= 1) rec(0, total);
}

std::optional<int> as_int(const Rational& x) {
  if (!is_integer(x)) return std::nullopt;
  return static_cast<int>(x.get_num().get_si());
}

void check_kind(int v, int l, int k) {
  const bool k_tail = (l >= 1 && k == l - 1 && (v == 1 || v == 2));
  const bool k_pair = (v == 2 && l >= 2 && k == l - 2);
  if (!k_tail && !k_pair) {
    throw std::invalid_argument("invalid (l,k) combination for HN_-: v=" + std::to_string(v) +
                                " l=" + std::to_string(l) + " k=" + std::to_string(k));
  }
}

}  // namespace

std::vector<AdmissibleConfig> enumerate_admissible(int r, int v, Sign sign) {
  if (r < 1 || v < 1) throw std::invalid_argument("admissible configurations need r, v >= 1");
  std::vector<AdmissibleConfig> out;
  AdmissibleConfig prefix;
  extend_admissible(r, v, sign, 0, 0, prefix, out);
  return out;
}

std::vector<HNSequence> enumerate_hn_minus(RankDegree alpha, int v, const StabilityParam& delta_c,
                                           int l, int k, HNOptions opts) {
  check_kind(v, l, k);
  if (alpha.r < 1) throw std::invalid_argument("HN sets require r >= 1");

  const Rational& dc = delta_c.value();
  Rational mu = (Rational(alpha.e) + dc * v) / alpha.r;
  mu.canonicalize();
  const int higgs_parts = k;
  const HNKind kind{v, l, k};

  std::vector<HNSequence> out;
  for_each_composition(alpha.r, l, [&](const std::vector<int>& ranks) {
    if (k == l - 2 && !(ranks[l - 2] > ranks[l - 1])) return;
    HNSequence seq;
    seq.kind = kind;
    seq.parts.reserve(l);
    for (int i = 0; i < l; ++i) {
      int part_v = 0;
      if (i >= higgs_parts) part_v = (k == l - 1) ? v : 1;
      Rational deg = mu * ranks[i] - dc * part_v;
      const auto e = as_int(deg);
      if (!e) return;
      if (opts.nonneg_degrees && *e < 0) return;
      seq.parts.emplace_back(ranks[i], *e, part_v);
    }
    out.push_back(std::move(seq));
  });
  return out;
}

bool validate_sequence(const HNSequence& seq, const Charge& target, const StabilityParam& delta_c) {
  const auto& parts = seq.parts;
  const HNKind& kind = seq.kind;
  if (parts.empty() || static_cast<int>(parts.size()) != kind.l) return false;
  if (target.r < 1 || target.v != kind.v) return false;
  try {
    check_kind(kind.v, kind.l, kind.k);
  } catch (const std::invalid_argument&) {
    return false;
  }

  Charge sum;
  for (const Charge& p : parts) {
    if (p.r < 1) return false;
    sum = sum + p;
  }
  if (sum != target) return false;

  const int l = kind.l;
  for (int i = 0; i < l; ++i) {
    int expected_v = 0;
    if (i >= kind.k) expected_v = (kind.k == l - 1) ? kind.v : 1;
    if (parts[i].v != expected_v) return false;
  }
  if (kind.k == l - 2 && !(parts[l - 2].r > parts[l - 1].r)) return false;

  const Rational mu = delta_slope(target, delta_c);
  return std::all_of(parts.begin(), parts.end(),
                     [&](const Charge& p) { return delta_slope(p, delta_c) == mu; });
}

bool has_wall_witness(RankDegree alpha, int v, const StabilityParam& delta_c, DegreeWindow window,
                      bool nonneg_degrees) {
  const HNOptions opts{nonneg_degrees};
  auto inside = [&](const HNSequence& s) {
    return std::all_of(s.parts.begin(), s.parts.end(),
                       [&](const Charge& p) { return window.contains(p.e); });
  };
  for (int l = 2; l <= alpha.r; ++l) {
    for (const auto& s : enumerate_hn_minus(alpha, v, delta_c, l, l - 1, opts)) {
      if (inside(s)) return true;
    }
    if (v == 2) {
      for (const auto& s : enumerate_hn_minus(alpha, v, delta_c, l, l - 2, opts)) {
        if (inside(s)) return true;
      }
    }
  }
  return false;
}

WallSet enumerate_walls(RankDegree alpha, int v, DegreeWindow window, bool nonneg_degrees) {
  if (alpha.r < 1) throw std::invalid_argument("walls require r >= 1");
  if (v != 1 && v != 2) throw std::invalid_argument("walls are computed for v in {1,2}");
  if (nonneg_degrees) window.lo = std::max(window.lo, 0);

  // A wall solves r (e' + delta v') = r' (e + delta v) for some sub-type
  // (r', e', v') with 1 <= r' < r, 0 <= v' <= v.
  std::vector<Rational> candidates;
  for (int rp = 1; rp < alpha.r; ++rp) {
    for (int vp = 0; vp <= v; ++vp) {
      const long den = static_cast<long>(alpha.r) * vp - static_cast<long>(rp) * v;
      if (den == 0) continue;
      for (int ep = window.lo; ep <= window.hi; ++ep) {
        const long num = static_cast<long>(rp) * alpha.e - static_cast<long>(alpha.r) * ep;
        Rational d = make_rational(num, den);
        if (d > 0) candidates.push_back(d);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  WallSet ws;
  ws.type = Charge(alpha, v);
  ws.bounds = window;
  ws.nonneg_degrees = nonneg_degrees;
  for (const Rational& d : candidates) {
    if (has_wall_witness(alpha, v, StabilityParam(d), window, nonneg_degrees)) ws.walls.push_back(d);
  }
  return ws;
}

}  // namespace adhm
