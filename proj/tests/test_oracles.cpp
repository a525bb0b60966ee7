#include <gtest/gtest.h>

#include "aci_verify/oracles.hpp"
#include "support.hpp"

namespace aci {
namespace {

using testing::ideal_of;
using testing::P;
using testing::ring_of;

TEST(TorOracle, CompleteIntersectionIsKoszul) {
  auto r = ring_of({"x", "y", "z"});
  BettiTable B = verify::koszul_tor_table(ideal_of(r, {"x^2", "y^2+x*z"}), 8);
  EXPECT_EQ(B.entries(), (std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}}));
}

TEST(TorOracle, TruncatesAtTheRequestedDegree) {
  auto r = ring_of({"x", "y"});
  BettiTable B = verify::koszul_tor_table(ideal_of(r, {"x^3", "y^3"}), 5);
  EXPECT_EQ(B.at(1, 3), 2);
  EXPECT_EQ(B.at(2, 6), 0);
}

TEST(IdealDims, MonomialCounts) {
  auto r = ring_of({"x", "y"});
  EXPECT_EQ(verify::ideal_dims(ideal_of(r, {"x^2"}), 4), (std::vector<std::size_t>{0, 0, 1, 2, 3}));
  EXPECT_EQ(verify::ideal_dims(ideal_of(r, {"x^2", "x*y+y^2"}), 3), (std::vector<std::size_t>{0, 0, 2, 4}));
}

TEST(ColonDims, ColonByAZeroDivisor) {
  auto r = ring_of({"x", "y"});
  // (x*y) : x = (y)
  auto dims = verify::colon_dims(ideal_of(r, {"x*y"}), P(r, "x"), 3);
  EXPECT_EQ(dims, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(OrbitCensus, SmallCases) {
  EXPECT_EQ(verify::labeled_orbit_census(1), (std::map<int, long long>{{2, 1}}));
  EXPECT_EQ(verify::labeled_orbit_census(2), (std::map<int, long long>{{3, 1}, {4, 1}}));
  long long total = 0;
  for (const auto& [v, c] : verify::labeled_orbit_census(4)) total += c;
  EXPECT_EQ(total, 11);
  EXPECT_THROW(verify::labeled_orbit_census(6), std::invalid_argument);
}

}  // namespace
}  // namespace aci
