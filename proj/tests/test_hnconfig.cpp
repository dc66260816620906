#include <gtest/gtest.h>

#include "adhm/hnconfig.hpp"
#include "oracles.hpp"

namespace adhm {
namespace {

using Config = AdmissibleConfig;

TEST(Admissible, Examples) {
  EXPECT_EQ(enumerate_admissible(2, 1, Sign::Plus), (std::vector<Config>{{{1, 1}, {1, 0}}, {{2, 1}}}));
  EXPECT_EQ(enumerate_admissible(2, 1, Sign::Minus), (std::vector<Config>{{{1, 0}, {1, 1}}, {{2, 1}}}));
  for (int v = 1; v <= 3; ++v) {
    EXPECT_EQ(enumerate_admissible(1, v, Sign::Plus), (std::vector<Config>{{{1, v}}}));
    EXPECT_EQ(enumerate_admissible(1, v, Sign::Minus), (std::vector<Config>{{{1, v}}}));
  }
  EXPECT_THROW(enumerate_admissible(0, 1, Sign::Plus), std::invalid_argument);
}

TEST(Admissible, MatchesFilteredSplittings) {
  for (int r = 1; r <= 5; ++r) {
    for (int v = 1; v <= 2; ++v) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        auto got = enumerate_admissible(r, v, s);
        auto want = oracle::admissible_by_filter(r, v, s);
        auto key = [](const Config& c) {
          std::vector<std::pair<int, int>> k;
          for (auto x : c) k.emplace_back(x.r, x.v);
          return k;
        };
        std::set<std::vector<std::pair<int, int>>> g, w;
        for (auto& c : got) g.insert(key(c));
        for (auto& c : want) w.insert(key(c));
        EXPECT_EQ(g, w) << "r=" << r << " v=" << v;
        EXPECT_EQ(g.size(), got.size()) << "duplicates for r=" << r;
      }
    }
  }
}

TEST(HNMinus, Examples) {
  const StabilityParam half(make_rational(1, 2));
  const auto s = enumerate_hn_minus({2, 1}, 2, half, 2, 1);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].parts, (std::vector<Charge>{{1, 1, 0}, {1, 0, 2}}));
  for (const Rational d : {make_rational(1, 3), Rational(1), Rational(4)}) {
    EXPECT_TRUE(enumerate_hn_minus({2, 0}, 2, StabilityParam(d), 2, 0).empty());
  }
  const auto single = enumerate_hn_minus({3, -2}, 1, half, 1, 0);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].parts, (std::vector<Charge>{{3, -2, 1}}));
}

TEST(HNMinus, RejectsUnsupportedShapes) {
  const StabilityParam one(Rational(1));
  EXPECT_THROW(enumerate_hn_minus({3, 1}, 2, one, 3, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_hn_minus({3, 1}, 1, one, 2, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_hn_minus({3, 1}, 2, one, 0, -1), std::invalid_argument);
}

TEST(HNMinus, MatchesFilteredSplittings) {
  const std::vector<Rational> deltas{make_rational(1, 3), make_rational(1, 2), Rational(1),
                                     make_rational(3, 2), Rational(2)};
  for (int r = 1; r <= 4; ++r) {
    for (int e = -4; e <= 4; ++e) {
      for (int v = 1; v <= 2; ++v) {
        for (const Rational& d : deltas) {
          for (int l = 1; l <= r; ++l) {
            for (int k : {l - 1, l - 2}) {
              if (k < 0 || (k == l - 2 && v != 2)) continue;
              const auto seqs = enumerate_hn_minus({r, e}, v, StabilityParam(d), l, k);
              for (const auto& s : seqs) {
                EXPECT_TRUE(validate_sequence(s, Charge({r, e}, v), StabilityParam(d)));
              }
              EXPECT_EQ(oracle::as_set(seqs, -6, 6), oracle::hn_minus_by_filter({r, e}, v, d, l, k, -6, 6))
                  << "alpha=(" << r << "," << e << ") v=" << v << " delta=" << d << " l=" << l
                  << " k=" << k;
            }
          }
        }
      }
    }
  }
}

TEST(HNMinus, NonnegativeModeDropsNegativeParts) {
  const StabilityParam one(Rational(1));
  const auto all = enumerate_hn_minus({3, 1}, 1, one, 2, 1);
  const auto nonneg = enumerate_hn_minus({3, 1}, 1, one, 2, 1, HNOptions{true});
  for (const auto& s : nonneg) {
    for (const Charge& c : s.parts) EXPECT_GE(c.e, 0);
  }
  EXPECT_LE(nonneg.size(), all.size());
}

TEST(ValidateSequence, Examples) {
  const StabilityParam half(make_rational(1, 2));
  const HNKind kind{2, 2, 1};
  EXPECT_TRUE(validate_sequence({{{1, 1, 0}, {1, 0, 2}}, kind}, {2, 1, 2}, half));
  EXPECT_FALSE(validate_sequence({{{1, 0, 0}, {1, 1, 2}}, kind}, {2, 1, 2}, half));
  EXPECT_FALSE(validate_sequence({{}, kind}, {2, 1, 2}, half));
}

TEST(Walls, Examples) {
  const WallSet w = enumerate_walls({2, 1}, 2, {0, 1}, true);
  EXPECT_EQ(w.walls, (std::vector<Rational>{make_rational(1, 2)}));
  for (int e = -3; e <= 5; ++e) {
    for (int v = 1; v <= 2; ++v) {
      EXPECT_TRUE(enumerate_walls({1, e}, v, {-6, 6}, false).walls.empty());
    }
  }
  const WallSet w31 = enumerate_walls({3, 1}, 2, {0, 1}, true);
  EXPECT_NE(std::find(w31.walls.begin(), w31.walls.end(), Rational(1)), w31.walls.end());
}

// A wall of type (r, e, v) solves r (e' + delta v') = r' (e + delta v), so
// delta = (r' e - r e') / (r v' - r' v); all candidates have a denominator of
// at most 2 r and a bounded numerator. Scan that grid with the filter oracle.
TEST(Walls, MatchesGridScanWithWitnesses) {
  for (int r = 2; r <= 3; ++r) {
    for (int e = 0; e <= 3; ++e) {
      for (int v = 1; v <= 2; ++v) {
        const WallSet ws = enumerate_walls({r, e}, v, {0, e}, true);
        EXPECT_TRUE(std::is_sorted(ws.walls.begin(), ws.walls.end()));
        std::set<Rational> expected;
        for (int den = 1; den <= 2 * r; ++den) {
          for (int num = 1; num <= 4 * r * (e + 1); ++num) {
            Rational d(num, den);
            d.canonicalize();
            bool witness = false;
            for (int l = 2; l <= r && !witness; ++l) {
              witness = !oracle::hn_minus_by_filter({r, e}, v, d, l, l - 1, 0, e).empty();
              if (v == 2 && !witness) witness = !oracle::hn_minus_by_filter({r, e}, v, d, l, l - 2, 0, e).empty();
            }
            if (witness) expected.insert(d);
          }
        }
        EXPECT_EQ(std::set<Rational>(ws.walls.begin(), ws.walls.end()), expected)
            << "alpha=(" << r << "," << e << ") v=" << v;
      }
    }
  }
}

}  // namespace
}  // namespace adhm
