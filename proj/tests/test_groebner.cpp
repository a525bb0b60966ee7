#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "aci/errors.hpp"
#include "aci/groebner.hpp"
#include "support.hpp"

namespace aci {
namespace {

using testing::ideal_of;
using testing::P;
using testing::ring_of;

class Xyzw : public ::testing::Test {
 protected:
  RingPtr r = ring_of({"x", "y", "z", "w"});
};

TEST_F(Xyzw, NormalForms) {
  auto G1 = buchberger(ideal_of(r, {"x*y"}));
  EXPECT_TRUE(G1.normal_form(P(r, "x^2*y")).is_zero());
  auto G2 = buchberger(ideal_of(r, {"x*y", "x*w"}));
  EXPECT_EQ(G2.normal_form(P(r, "x^2")), P(r, "x^2"));
  auto G3 = buchberger(ideal_of(r, {"x*z", "z*w"}));
  EXPECT_TRUE(G3.normal_form(P(r, "z*w*x")).is_zero());
}

TEST_F(Xyzw, MonomialIdealIsItsOwnBasis) {
  auto G = buchberger(ideal_of(r, {"x*y", "x*w", "z^2"}));
  std::vector<std::string> got;
  for (const auto& g : G.elements()) got.push_back(g.to_string());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"x*w", "x*y", "z^2"}));
}

TEST(Groebner, GenericMatrixMinorsUnderLex) {
  auto r = ring_of({"x12", "x11", "x22", "x21", "x32", "x31"}, MonomialOrder::lex());
  auto I = ideal_of(r, {"x11*x22 - x12*x21", "x11*x32 - x12*x31", "x21*x32 - x22*x31"});
  auto G = buchberger(I);
  EXPECT_EQ(G.size(), 3u);
  EXPECT_EQ(G.max_degree(), 2);
  MonomialIdeal expected(6, {P(r, "x12*x21").lead_monomial(), P(r, "x12*x31").lead_monomial(),
                             P(r, "x22*x31").lead_monomial()});
  EXPECT_EQ(G.initial_ideal(), expected);
}

TEST(Groebner, LiftedMinorsWithEliminatedSquares) {
  // S = k[a,b,c]; y-block greater than the matrix block, lex inside.
  auto r = ring_of({"y", "x12", "x11", "x22", "x21", "x32", "x31", "a", "b", "c"},
                   MonomialOrder::block({0}, OrderKind::lex));
  auto I = ideal_of(r, {"x11*x22 - x12*x21", "x11*x32 - x12*x31", "x21*x32 - x22*x31",
                        "y^2 + a^2 + b*c"});
  auto G = buchberger(I);
  EXPECT_EQ(G.max_degree(), 2);
  MonomialIdeal expected(10, {P(r, "x12*x21").lead_monomial(), P(r, "x12*x31").lead_monomial(),
                              P(r, "x22*x31").lead_monomial(), P(r, "y^2").lead_monomial()});
  EXPECT_EQ(G.initial_ideal(), expected);
}

TEST(Groebner, InitialIdealOfBlockLift) {
  // I0 = (y1 z, y2 z, y3^2 + q3) in S[y1,y2,y3], y-block greater.
  auto r = ring_of({"y1", "y2", "y3", "x", "z", "w", "u"}, MonomialOrder::block({0, 1, 2}));
  auto I0 = ideal_of(r, {"y1*z", "y2*z", "y3^2 + x^2 + w*u"});
  auto in = initial_ideal(I0, r->order());
  MonomialIdeal expected(7, {P(r, "y1*z").lead_monomial(), P(r, "y2*z").lead_monomial(),
                             P(r, "y3^2").lead_monomial()});
  EXPECT_EQ(in, expected);
}

TEST_F(Xyzw, InitialIdeals) {
  auto in1 = initial_ideal(ideal_of(r, {"x*z", "z*w"}), MonomialOrder::grevlex());
  EXPECT_EQ(in1, MonomialIdeal(4, {P(r, "x*z").lead_monomial(), P(r, "z*w").lead_monomial()}));
  auto in2 = initial_ideal(ideal_of(r, {"(x-y)*z"}), MonomialOrder::lex());
  EXPECT_EQ(in2, MonomialIdeal(4, {P(r, "x*z").lead_monomial()}));
}

TEST_F(Xyzw, ColonIdentitiesOfTheKoszulExample) {
  auto c1 = colon(ideal_of(r, {"x*y", "x*w", "z^2"}), P(r, "(x-y)*z"));
  EXPECT_TRUE(ideals_equal(c1, ideal_of(r, {"x*y", "x*w", "z"})));
  EXPECT_EQ(c1.size(), 3u);
  auto c2 = colon(ideal_of(r, {"x*y", "x*w", "z^2", "(x-y)*z"}), P(r, "x^2+z*w"));
  EXPECT_TRUE(ideals_equal(c2, ideal_of(r, {"x*w", "y", "z"})));
  EXPECT_EQ(c2.size(), 3u);
}

TEST_F(Xyzw, ColonByOneAndZero) {
  auto I = ideal_of(r, {"x*y", "z^2 - w*x"});
  EXPECT_TRUE(ideals_equal(colon(I, P(r, "1")), I));
  EXPECT_THROW(colon(I, P(r, "0")), ComputationError);
}

TEST_F(Xyzw, KrullDimension) {
  EXPECT_EQ(krull_dimension(ideal_of(r, {"x*y", "x*z", "x*w"})), 3);
  EXPECT_EQ(height(ideal_of(r, {"x*z", "z*w"})), 1);
  EXPECT_EQ(height(ideal_of(r, {"x^2 + y*z", "y^2 - z*w", "z^2 + x*w"})), 3);
  EXPECT_EQ(krull_dimension(ideal_of(r, {"1"})), -1);
  EXPECT_EQ(krull_dimension(Ideal(r)), 4);
}

TEST_F(Xyzw, RegularElements) {
  EXPECT_TRUE(is_regular_on(P(r, "z"), ideal_of(r, {"x^2 + y*w", "y^2 - x*w"})));
  EXPECT_FALSE(is_regular_on(P(r, "x"), ideal_of(r, {"x*y"})));
  EXPECT_FALSE(is_regular_on(P(r, "x*y"), ideal_of(r, {"x*y", "z^2"})));
}

TEST_F(Xyzw, MinimalGeneratorCounts) {
  EXPECT_EQ(minimal_generator_count(ideal_of(r, {"x*z", "z*w", "z*x"})),
            (std::map<int, int>{{2, 2}}));
  EXPECT_EQ(minimal_generator_count(ideal_of(r, {"x*y", "x*w", "(x-y)*z", "z^2", "x^2+z*w"})),
            (std::map<int, int>{{2, 5}}));
  EXPECT_EQ(minimal_generator_count(ideal_of(r, {"x^2", "x^3"})), (std::map<int, int>{{2, 1}}));
  EXPECT_EQ(minimal_generator_count(ideal_of(r, {"x", "x*y + z^2", "z^2"})),
            (std::map<int, int>{{1, 1}, {2, 1}}));
}

TEST(MonomialIdeal, KPolynomial) {
  // S/(xz, zw) in 4 variables: 1 - 2t^2 + t^3.
  auto r = ring_of({"x", "y", "z", "w"});
  MonomialIdeal M(4, {P(r, "x*z").lead_monomial(), P(r, "z*w").lead_monomial()});
  EXPECT_EQ(M.k_polynomial(), (std::vector<long long>{1, 0, -2, 1}));
  EXPECT_EQ(M.dimension(), 3);
}

class RandomIdeals : public ::testing::Test {
 protected:
  RingPtr r = ring_of({"a", "b", "c", "d"});
  std::mt19937_64 rng{2024};

  Ideal random_ideal() {
    std::vector<Polynomial> gens;
    int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      gens.push_back(testing::random_form(r, 2 + static_cast<int>(rng() % 2), 3, rng));
    }
    return Ideal(r, gens);
  }

  static bool s_pairs_reduce(const GroebnerBasis& G) {
    const auto& E = G.elements();
    for (std::size_t i = 0; i < E.size(); ++i) {
      for (std::size_t j = i + 1; j < E.size(); ++j) {
        auto L = lcm(E[i].lead_monomial(), E[j].lead_monomial());
        auto s = E[i].times_term(1, E[i].lead_monomial().cofactor_in(L)) -
                 E[j].times_term(1, E[j].lead_monomial().cofactor_in(L));
        if (!G.normal_form(s).is_zero()) return false;
      }
    }
    return true;
  }
};

TEST_F(RandomIdeals, BasesAreReducedAndComplete) {
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block({0, 2})}) {
    for (int trial = 0; trial < 25; ++trial) {
      Ideal I = random_ideal();
      auto G = buchberger(I, ord);
      EXPECT_TRUE(s_pairs_reduce(G));
      for (const auto& g : I.gens()) EXPECT_TRUE(G.normal_form(g).is_zero());
      for (const auto& e : G.elements()) {
        EXPECT_EQ(e.lead_coeff(), 1u);
        for (const auto& other : G.elements()) {
          if (&other == &e) continue;
          for (const auto& t : e.terms()) EXPECT_FALSE(other.lead_monomial().divides(t.mono));
        }
      }
    }
  }
}

TEST_F(RandomIdeals, InitialIdealIgnoresGeneratorOrder) {
  for (int trial = 0; trial < 25; ++trial) {
    Ideal I = random_ideal();
    auto gens = I.gens();
    std::reverse(gens.begin(), gens.end());
    EXPECT_EQ(initial_ideal(I, MonomialOrder::grevlex()),
              initial_ideal(Ideal(r, gens), MonomialOrder::grevlex()));
  }
}

TEST_F(RandomIdeals, DimensionMatchesInitialIdeal) {
  for (int trial = 0; trial < 100; ++trial) {
    Ideal I = random_ideal();
    EXPECT_EQ(krull_dimension(I), initial_ideal(I, MonomialOrder::lex()).dimension());
  }
}

TEST_F(RandomIdeals, RegularityDropsDimension) {
  for (int trial = 0; trial < 30; ++trial) {
    // A random complete intersection of two quadrics, tested against a random form.
    Ideal J(r, {testing::random_form(r, 2, 6, rng), testing::random_form(r, 2, 6, rng)});
    if (height(J) != 2) continue;
    auto f = testing::random_form(r, 1 + static_cast<int>(rng() % 2), 2, rng);
    if (f.is_zero() || ideal_contains(J, f)) continue;
    EXPECT_EQ(is_regular_on(f, J), krull_dimension(J.plus(f)) == krull_dimension(J) - 1);
  }
}

}  // namespace
}  // namespace aci
