#include <gtest/gtest.h>

#include <cstdlib>

#include "aci/errors.hpp"
#include "aci/groebner.hpp"
#include "aci/koszul_aci.hpp"
#include "support.hpp"

namespace aci {
namespace {

using testing::ideal_of;
using testing::P;
using testing::ring_of;

using Table = std::map<std::pair<int, int>, long long>;

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RingPtr xyzw() { return ring_of({"x", "y", "z", "w"}); }

TEST(LinearSyzygies, OneSyzygyOnTheFirstShape) {
  auto r = xyzw();
  auto I = ideal_of(r, {"x*z", "z*w", "y^2"});
  auto syz = linear_syzygies(I.gens());
  ASSERT_EQ(syz.size(), 1u);
  Polynomial sum(r);
  for (std::size_t i = 0; i < 3; ++i) sum += syz[0].coefficients[i] * I.gens()[i];
  EXPECT_TRUE(sum.is_zero());
  EXPECT_TRUE(syz[0].coefficients[2].is_zero());
}

TEST(LinearSyzygies, DeterminantalHasTwo) {
  auto r = ring_of({"x", "y"});
  EXPECT_EQ(beta23({P(r, "x^2"), P(r, "x*y"), P(r, "y^2")}), 2);
}

TEST(LinearSyzygies, NoneForASparseExample) {
  auto r = xyzw();
  EXPECT_EQ(beta23({P(r, "x^2"), P(r, "y^2"), P(r, "x*z+y*w")}), 0);
}

TEST(LinearSyzygies, RejectsBadInput) {
  auto r = xyzw();
  EXPECT_THROW(beta23({P(r, "x^2"), P(r, "2*x^2")}), ComputationError);
  EXPECT_THROW(beta23({P(r, "x^2"), P(r, "0")}), ComputationError);
}

TEST(QuadraticAci, Recognition) {
  auto r = xyzw();
  EXPECT_TRUE(is_quadratic_aci(ideal_of(r, {"x*z", "z*w", "y^2"})));
  EXPECT_TRUE(is_quadratic_aci(ideal_of(r, {"x^2", "x*y", "y^2"})));
  EXPECT_FALSE(is_quadratic_aci(ideal_of(r, {"x^2", "y^2"})));
  EXPECT_FALSE(is_quadratic_aci(ideal_of(r, {"x^2", "y^3", "x*y"})));
  EXPECT_FALSE(is_quadratic_aci(ideal_of(r, {"x^2", "x*y", "x*z", "x*w"})));
}

TEST(QuadraticAci, RegularSubsequence) {
  for (int g = 2; g <= 4; ++g) {
    Ideal I = generate_family_one(g, 3);
    auto split = extract_regular_subsequence(I, 9);
    ASSERT_EQ(static_cast<int>(split.regular.size()), g);
    Ideal reg(I.ring(), split.regular);
    EXPECT_EQ(height(reg), g);
    EXPECT_EQ(split.extra.degree(), 2);
    auto all = split.regular;
    all.push_back(split.extra);
    EXPECT_TRUE(ideals_equal(Ideal(I.ring(), all), I));
  }
}

TEST(Classify, HandPickedShapes) {
  auto r = xyzw();
  auto one = classify(ideal_of(r, {"x*z", "z*w", "y^2"}));
  EXPECT_EQ(one.tag, AciTag::OneLinearSyzygy);
  EXPECT_EQ(one.beta23, 1);
  EXPECT_EQ(one.height, 2);
  EXPECT_TRUE(ideals_equal(one.reassemble(), one.input));

  auto two = classify(ideal_of(r, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(two.tag, AciTag::TwoLinearSyzygies);
  ASSERT_EQ(two.matrix.size(), 3u);
  EXPECT_TRUE(ideals_equal(Ideal(r, maximal_minors(two.matrix)), ideal_of(r, {"x^2", "x*y", "y^2"})));

  auto none = classify(ideal_of(r, {"x^2", "y^2", "x*z+y*w"}));
  EXPECT_EQ(none.tag, AciTag::Unstructured);
  EXPECT_EQ(none.beta23, 0);
  EXPECT_FALSE(none.structured());
  EXPECT_THROW(lg_lift(none), ComputationError);

  auto ci = classify(ideal_of(r, {"x^2", "y^2"}));
  EXPECT_EQ(ci.tag, AciTag::CompleteIntersection);
}

TEST(Classify, RejectsNonAci) {
  auto r = xyzw();
  EXPECT_THROW(classify(ideal_of(r, {"x^2", "x*y", "x*z", "x*w"})), ComputationError);
  EXPECT_THROW(classify(ideal_of(r, {"x^3", "y^2", "x*y"})), ComputationError);
  EXPECT_THROW(classify(Ideal(r, {})), ComputationError);
}

TEST(Classify, FamiliesRoundTrip) {
  for (int g = 1; g <= 4; ++g) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Ideal I = generate_family_one(g, seed);
      auto c = classify(I);
      EXPECT_EQ(c.tag, AciTag::OneLinearSyzygy) << g << " " << seed << " " << c.reason;
      EXPECT_EQ(c.height, g);
      EXPECT_TRUE(ideals_equal(c.reassemble(), I));
      EXPECT_TRUE(ideals_equal(c.reassemble(), Ideal(I.ring(), {c.x() * c.z(), c.z() * c.w()}).plus(
                                                    Ideal(I.ring(), c.quadrics))));
      if (g < 2) continue;
      Ideal J = generate_family_two(g, seed);
      auto d = classify(J);
      EXPECT_EQ(d.tag, AciTag::TwoLinearSyzygies) << g << " " << seed << " " << d.reason;
      EXPECT_EQ(static_cast<int>(d.quadrics.size()), g - 2);
      EXPECT_TRUE(ideals_equal(d.reassemble(), J));
    }
  }
}

TEST(Families, PredictedTablesByHand) {
  EXPECT_EQ(predicted_betti(1, FamilyCase::one).entries(), (Table{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}}));
  EXPECT_EQ(predicted_betti(2, FamilyCase::two).entries(), (Table{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  EXPECT_EQ(predicted_betti(2, FamilyCase::one).entries(),
            (Table{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 1}, {{2, 4}, 2}, {{3, 5}, 1}}));
  EXPECT_THROW(predicted_betti(1, FamilyCase::two), std::invalid_argument);
  EXPECT_EQ(predicted_multiplicity(5, FamilyCase::one), 16);
  EXPECT_EQ(predicted_multiplicity(5, FamilyCase::two), 24);
}

TEST(Families, PredictedTotalsAreBinomial) {
  for (int g = 1; g <= 8; ++g) {
    auto t = predicted_betti(g, FamilyCase::one).totals();
    ASSERT_EQ(static_cast<int>(t.size()), g + 2);
    for (int i = 0; i <= g + 1; ++i) EXPECT_EQ(t[i], choose(g + 1, i)) << g << " " << i;
  }
}

TEST(Families, GeneratedTablesMatchPrediction) {
  for (int g = 1; g <= 4; ++g) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Ideal I = generate_family_one(g, seed);
      EXPECT_EQ(I.ring()->num_vars(), g + 2);
      EXPECT_TRUE(is_quadratic_aci(I));
      auto s = summarize_resolution(I);
      EXPECT_EQ(s.betti, predicted_betti(g, FamilyCase::one));
      EXPECT_EQ(s.hilbert.multiplicity(), predicted_multiplicity(g, FamilyCase::one));
      if (g < 2) continue;
      Ideal J = generate_family_two(g, seed);
      auto t = summarize_resolution(J);
      EXPECT_EQ(t.betti, predicted_betti(g, FamilyCase::two));
      EXPECT_EQ(t.hilbert.multiplicity(), predicted_multiplicity(g, FamilyCase::two));
    }
  }
}

TEST(Families, GeneratorsAreDeterministic) {
  auto a = generate_family_two(3, 42), b = generate_family_two(3, 42), c = generate_family_two(3, 43);
  EXPECT_EQ(a.gens(), b.gens());
  EXPECT_NE(a.gens(), c.gens());
  EXPECT_THROW(generate_family_two(1, 0), std::invalid_argument);
  EXPECT_THROW(generate_family_one(0, 0), std::invalid_argument);
  EXPECT_EQ(generate_family_one(2, 0, 6).ring()->num_vars(), 6);
}

TEST(Families, RandomAcisAreAcis) {
  for (int g = 2; g <= 4; ++g) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Ideal I = random_quadratic_aci(g, seed);
      EXPECT_TRUE(is_quadratic_aci(I));
      EXPECT_EQ(height(I), g);
      EXPECT_LE(beta23(minimal_generators(I).gens()), 2);
      EXPECT_EQ(I.gens(), random_quadratic_aci(g, seed).gens());
    }
  }
}

TEST(Lift, FamiliesLiftToQuadraticBases) {
  for (int g = 1; g <= 4; ++g) {
    for (FamilyCase fc : {FamilyCase::one, FamilyCase::two}) {
      if (fc == FamilyCase::two && g < 2) continue;
      Ideal I = generate_family(fc, g, 5);
      auto cert = lg_lift(classify(I));
      auto rep = verify_lift(cert);
      EXPECT_TRUE(rep.gb_quadratic) << g << " max degree " << rep.gb_max_degree;
      EXPECT_TRUE(rep.telescope) << g;
      EXPECT_TRUE(rep.recovers) << g;
      EXPECT_EQ(rep.k_polynomials.size(), cert.linear_forms.size() + 1);
      EXPECT_EQ(cert.ring->num_vars() - static_cast<int>(cert.linear_forms.size()),
                I.ring()->num_vars());
    }
  }
}

TEST(Lift, TamperedCertificatesFail) {
  Ideal I = generate_family_one(3, 1);
  auto cert = lg_lift(classify(I));
  ASSERT_TRUE(verify_lift(cert).ok());

  auto bad_images = cert;
  bad_images.images[0] = bad_images.images[0] + Polynomial::variable(I.ring(), 0);
  EXPECT_FALSE(verify_lift(bad_images).recovers);

  auto bad_forms = cert;
  bad_forms.linear_forms[0] = Polynomial::variable(cert.ring, cert.ring->num_vars() - 1);
  auto rep = verify_lift(bad_forms);
  EXPECT_FALSE(rep.ok());
}

TEST(Lift, ExplicitFirstShape) {
  auto r = xyzw();
  auto cert = lg_lift(classify(ideal_of(r, {"x*z", "z*w", "y^2"})));
  auto rep = verify_lift(cert);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(cert.source, AciTag::OneLinearSyzygy);
}

TEST(Bounds, FamiliesSatisfyEverything) {
  for (int g = 2; g <= 4; ++g) {
    for (FamilyCase fc : {FamilyCase::one, FamilyCase::two}) {
      Ideal I = generate_family(fc, g, 2);
      auto c = classify(I);
      auto rep = bound_suite(I, betti_table(I), &c);
      for (const auto& chk : rep.checks) EXPECT_TRUE(chk.holds) << chk.name << " " << chk.detail;
      EXPECT_NE(rep.find("egh-witness"), nullptr);
      EXPECT_NE(rep.find("subdiagonal"), nullptr);
    }
  }
}

TEST(Bounds, ViolationsAreReported) {
  auto r = xyzw();
  Ideal I = ideal_of(r, {"x*z", "z*w", "y^2"});
  auto c = classify(I);
  BettiTable fake = betti_table(I);
  fake.add(2, 5, 1);
  fake.add(1, 2, 4);
  auto rep = bound_suite(I, fake, &c);
  EXPECT_FALSE(rep.all());
  EXPECT_FALSE(rep.find("subdiagonal")->holds);
  EXPECT_FALSE(rep.find("total<=binom(mu,i)")->holds);
  EXPECT_FALSE(rep.find("egh-witness")->holds);
}

TEST(Bounds, UnstructuredRunsOnlyGeneralChecks) {
  auto r = xyzw();
  Ideal I = ideal_of(r, {"x^2", "y^2", "x*z+y*w"});
  auto c = classify(I);
  auto rep = bound_suite(I, betti_table(I), &c);
  EXPECT_EQ(rep.find("subdiagonal"), nullptr);
  EXPECT_EQ(rep.find("total<=binom(mu,i)"), nullptr);
  EXPECT_EQ(rep.find("pd<=mu"), nullptr);
  EXPECT_TRUE(rep.checks.empty());
}

TEST(Bounds, WitnessShapes) {
  auto one = egh_witness(5, 3, FamilyCase::one);
  auto two = egh_witness(5, 3, FamilyCase::two);
  EXPECT_EQ(one.gens().size(), 4u);
  EXPECT_EQ(two.gens().size(), 4u);
  EXPECT_THROW(egh_witness(3, 3, FamilyCase::one), std::invalid_argument);
}

TEST(RetryBudget, EnvironmentOverride) {
  EXPECT_EQ(retry_budget(), 64);
  setenv("TOOL_RETRY_BUDGET", "5", 1);
  EXPECT_EQ(retry_budget(), 5);
  unsetenv("TOOL_RETRY_BUDGET");
}

}  // namespace
}  // namespace aci
