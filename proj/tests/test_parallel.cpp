#include <gtest/gtest.h>
#include <omp.h>

#include <random>

#include "adhm/liealg.hpp"
#include "adhm/pseries.hpp"
#include "adhm/suites.hpp"
#include "adhm/uealg.hpp"

namespace adhm {
namespace {

class Parallel : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

LieElement dense_element(std::mt19937_64& rng, int r_max, int e_max) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  LieElement x;
  for (int v = 0; v <= 2; ++v)
    for (int r = v == 0 ? 1 : 0; r <= r_max; ++r)
      for (int e = 0; e <= e_max; ++e) x.add_term({r, e, v}, make_rational(pick(-4, 4), pick(1, 3)));
  return x;
}

TEST_F(Parallel, BracketMatchesSerialReference) {
  std::mt19937_64 rng(1);
  const LieAlgebra lie(Geometry::make(0, 1, 1), {6, 12});
  const LieElement x = dense_element(rng, 6, 12);
  const LieElement y = dense_element(rng, 6, 12);
  ASSERT_GE(x.size() * y.size(), 4096u);
  EXPECT_EQ(lie.bracket(x, y), reference::bracket_serial(lie, x, y));
}

TEST_F(Parallel, StarMatchesSerialReference) {
  std::mt19937_64 rng(2);
  const EnvelopingAlgebra uea(LieAlgebra(Geometry::make(1, 0, 0), {3, 5}));
  UEAElement x = UEAElement::from_lie(dense_element(rng, 3, 5));
  const UEAElement y = UEAElement::from_lie(dense_element(rng, 2, 3));
  x = uea.star(x, UEAElement::from_lie(dense_element(rng, 1, 1))) + x;
  ASSERT_GE(x.size(), 64u);
  EXPECT_EQ(uea.star(x, y), reference::star_serial(uea, x, y));
}

TEST_F(Parallel, SeriesProductMatchesSerialReference) {
  std::mt19937_64 rng(3);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  BiSeries a(5, 12), b(5, 12);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 12; ++j) {
      a.set(i, j, make_rational(pick(-9, 9), pick(1, 7)));
      b.set(i, j, make_rational(pick(-9, 9), pick(1, 7)));
    }
  EXPECT_EQ(a * b, reference::mul_serial(a, b));
}

TEST_F(Parallel, InstanceEvaluationMatchesSerialReference) {
  const auto instances = random_wall_instances(5, 16);
  const InstanceChecks checks{true, true, {4, 6}};
  const auto par = evaluate_instances(instances, checks);
  const auto ser = reference::evaluate_instances_serial(instances, checks);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].js, ser[i].js);
    EXPECT_EQ(par[i].ks, ser[i].ks);
    EXPECT_EQ(par[i].group_identity, ser[i].group_identity);
    EXPECT_EQ(par[i].undetected_perturbations, ser[i].undetected_perturbations);
  }
}

}  // namespace
}  // namespace adhm
