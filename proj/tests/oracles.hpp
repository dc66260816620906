#pragma once

// Brute-force reference computations used by the unit and acceptance tests.
// They follow the defining conditions literally and share no code with the
// pruned enumerations they check.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "adhm/hnconfig.hpp"
#include "adhm/wallcross.hpp"

namespace adhm::oracle {

// Every ordered sequence of (r_i, v_i) with r_i >= 1, v_i >= 0 summing to (r, v).
inline std::vector<AdmissibleConfig> all_rank_framing_splittings(int r, int v) {
  std::vector<AdmissibleConfig> out;
  AdmissibleConfig cur;
  std::function<void(int, int)> rec = [&](int r_left, int v_left) {
    if (r_left == 0) {
      if (v_left == 0) out.push_back(cur);
      return;
    }
    for (int ri = 1; ri <= r_left; ++ri) {
      for (int vi = 0; vi <= v_left; ++vi) {
        cur.push_back({ri, vi});
        rec(r_left - ri, v_left - vi);
        cur.pop_back();
      }
    }
  };
  rec(r, v);
  return out;
}

// The admissible configurations by filtering all splittings with exact
// rational comparisons of the partial and successive framing ratios.
inline std::vector<AdmissibleConfig> admissible_by_filter(int r, int v, Sign sign) {
  std::vector<AdmissibleConfig> out;
  const Rational total(v, r);
  for (const AdmissibleConfig& seq : all_rank_framing_splittings(r, v)) {
    bool ok = true;
    int pr = 0;
    int pv = 0;
    for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i) {
      pr += seq[i].r;
      pv += seq[i].v;
      Rational partial(pv, pr);
      partial.canonicalize();
      Rational a(seq[i].v, seq[i].r);
      Rational b(seq[i + 1].v, seq[i + 1].r);
      a.canonicalize();
      b.canonicalize();
      if (sign == Sign::Plus) {
        ok = partial > total && a > b;
      } else {
        ok = partial < total && a < b;
      }
    }
    if (ok) out.push_back(seq);
  }
  return out;
}

// All ordered splittings of alpha into l parts with r_i >= 1, lo <= e_i <= hi.
inline void for_each_splitting(RankDegree alpha, int l, int lo, int hi,
                               const std::function<void(const std::vector<RankDegree>&)>& fn) {
  std::vector<RankDegree> cur;
  std::function<void(int, int)> rec = [&](int r_left, int e_left) {
    if (static_cast<int>(cur.size()) == l - 1) {
      if (r_left >= 1 && lo <= e_left && e_left <= hi) {
        cur.push_back({r_left, e_left});
        fn(cur);
        cur.pop_back();
      }
      return;
    }
    for (int ri = 1; ri <= r_left - 1; ++ri) {
      for (int ei = lo; ei <= hi; ++ei) {
        cur.push_back({ri, ei});
        rec(r_left - ri, e_left - ei);
        cur.pop_back();
      }
    }
  };
  rec(alpha.r, alpha.e);
}

// HN_-(alpha, v, delta_c, l, k) restricted to part degrees in [lo, hi], by
// filtering splittings with the slope equalities in integer form.
inline std::set<std::vector<Charge>> hn_minus_by_filter(RankDegree alpha, int v, Rational delta_c,
                                                        int l, int k, int lo, int hi) {
  delta_c.canonicalize();
  const long p = delta_c.get_num().get_si();
  const long q = delta_c.get_den().get_si();
  std::set<std::vector<Charge>> out;
  for_each_splitting(alpha, l, lo, hi, [&](const std::vector<RankDegree>& parts) {
    std::vector<Charge> seq;
    for (int i = 0; i < l; ++i) {
      int vi = 0;
      if (k == l - 1 && i == l - 1) vi = v;
      if (k == l - 2 && i >= l - 2) vi = 1;
      seq.emplace_back(parts[static_cast<std::size_t>(i)], vi);
    }
    if (k == l - 2 && !(seq[static_cast<std::size_t>(l - 2)].r > seq[static_cast<std::size_t>(l - 1)].r)) {
      return;
    }
    // (e_i + v_i delta) / r_i = (e + v delta) / r, scaled by q.
    for (const Charge& c : seq) {
      if ((q * c.e + p * c.v) * alpha.r != (q * alpha.e + p * v) * c.r) return;
    }
    out.insert(seq);
  });
  return out;
}

inline std::set<std::vector<Charge>> as_set(const std::vector<HNSequence>& seqs, int lo, int hi) {
  std::set<std::vector<Charge>> out;
  for (const HNSequence& s : seqs) {
    if (std::all_of(s.parts.begin(), s.parts.end(),
                    [&](const Charge& c) { return lo <= c.e && c.e <= hi; })) {
      out.insert(s.parts);
    }
  }
  return out;
}

inline Rational factorial_inverse(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f /= i;
  return f;
}

inline long f_weight(const Charge& a, int v, const Geometry& g) {
  const long x = static_cast<long>(v) * (a.e - a.r * (g.genus - 1));
  return (x % 2 == 0 ? 1 : -1) * x;
}

inline long g_weight(const Charge& a, const Charge& b, const Geometry& g) {
  const long x = static_cast<long>(a.e) - b.e - static_cast<long>(a.r - b.r) * (g.genus - 1);
  return (x % 2 == 0 ? 1 : -1) * x;
}

// A_-(alpha, 1) with HN sets taken from the filter oracle on [lo, hi].
inline Rational jump_v1_by_filter(RankDegree alpha, const Rational& dc, const InvariantTable& t,
                                  int lo, int hi) {
  const Geometry& g = t.geometry();
  Rational total(0);
  for (int l = 1; l <= alpha.r; ++l) {
    for (const auto& seq : hn_minus_by_filter(alpha, 1, dc, l, l - 1, lo, hi)) {
      Rational term = t.at(seq.back()) * factorial_inverse(l - 1);
      for (int i = 0; i + 1 < l; ++i) {
        const Charge& c = seq[static_cast<std::size_t>(i)];
        term *= t.at(c) * f_weight(c, 1, g);
      }
      total += term;
    }
  }
  return total;
}

// A_-(alpha, 2) from the three Joyce-Song sums with HN sets from the oracle.
inline Rational jump_v2_by_filter(RankDegree alpha, const Rational& dc, const InvariantTable& t,
                                  int lo, int hi) {
  const Geometry& g = t.geometry();
  Rational total(0);
  for (int l = 1; l <= alpha.r; ++l) {
    for (const auto& seq : hn_minus_by_filter(alpha, 2, dc, l, l - 1, lo, hi)) {
      Rational term = t.at(seq.back()) * factorial_inverse(l - 1);
      for (int i = 0; i + 1 < l; ++i) {
        const Charge& c = seq[static_cast<std::size_t>(i)];
        term *= t.at(c) * f_weight(c, 2, g);
      }
      total += term;
    }
  }
  for (int l = 1; l + 1 <= alpha.r; ++l) {
    for (const auto& seq : hn_minus_by_filter(alpha, 2, dc, l + 1, l - 1, lo, hi)) {
      const Charge& a = seq[static_cast<std::size_t>(l - 1)];
      const Charge& b = seq[static_cast<std::size_t>(l)];
      Rational term = Rational(-1, 2) * factorial_inverse(l - 1) * g_weight(b, a, g) * t.at(a) * t.at(b);
      for (int i = 0; i + 1 < l; ++i) {
        const Charge& c = seq[static_cast<std::size_t>(i)];
        term *= t.at(c) * f_weight(c, 2, g);
      }
      total += term;
    }
  }
  for (const auto& pair : hn_minus_by_filter(alpha, 2, dc, 2, 0, lo, hi)) {
    const Charge& a = pair[0];
    const Charge& b = pair[1];
    total += Rational(1, 2) * g_weight(a, b, g) * jump_v1_by_filter(a.rank_degree(), dc, t, lo, hi) *
             jump_v1_by_filter(b.rank_degree(), dc, t, lo, hi);
  }
  return total;
}

}  // namespace adhm::oracle
