#include <gtest/gtest.h>

#include <random>

#include "aci/errors.hpp"
#include "aci/parser.hpp"
#include "support.hpp"

namespace aci {
namespace {

using testing::P;
using testing::ring_of;

TEST(PrimeField, InversesAndSymmetricForm) {
  PrimeField F;
  EXPECT_EQ(F.characteristic(), 32003u);
  for (std::uint32_t a : {1u, 2u, 7u, 16001u, 32002u}) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  EXPECT_EQ(F.to_symmetric(32002), -1);
  EXPECT_EQ(F.from_int(-5), 31998u);
  EXPECT_THROW(PrimeField(32004), std::invalid_argument);
  EXPECT_THROW(F.inv(0), std::domain_error);
}

TEST(Parser, CommutativityCancels) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(P(r, "x*y - y*x").is_zero());
}

TEST(Parser, ProductWithDifference) {
  auto r = ring_of({"x", "y", "z", "w"});
  auto f = P(r, "(x-y)*z");
  EXPECT_EQ(f.to_string(), "x*z-y*z");
  EXPECT_EQ(f, P(r, "x*z - y*z"));
}

TEST(Parser, SquarePlusProduct) {
  auto r = ring_of({"x", "y", "z", "w"});
  auto f = P(r, "x^2+z*w");
  EXPECT_EQ(f.to_string(), "x^2+z*w");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(f.is_homogeneous());
}

TEST(Parser, ReportsPositionOfErrors) {
  auto r = ring_of({"x", "y"});
  try {
    P(r, "x + \n  q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(P(r, "x +"), ParseError);
  EXPECT_THROW(P(r, "(x"), ParseError);
  EXPECT_THROW(P(r, "x y"), ParseError);
}

TEST(Parser, DocumentRoundTrip) {
  auto doc = parse_document(
      "# Example\nring F32003[x,y,z,w];\nideal (x*y, x*w, (x-y)*z, z^2, x^2+z*w);\n");
  ASSERT_TRUE(doc.ideal);
  EXPECT_EQ(doc.ideal->size(), 5u);
  auto again = parse_document(format_document(*doc.ideal));
  ASSERT_TRUE(again.ideal);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(again.ideal->gens()[i], doc.ideal->gens()[i]);
}

TEST(Parser, FieldFromCaller) {
  auto doc = parse_document("ring Fp[a,b]; ideal (a*b - 7*b^2);", 101);
  EXPECT_EQ(doc.ring->field().characteristic(), 101u);
  EXPECT_EQ(doc.ideal->gens()[0].to_string(), "a*b-7*b^2");
  EXPECT_THROW(parse_document("ring F12[a];"), ParseError);
  EXPECT_THROW(parse_document("ring F7[a]; ideal (a^2+a);"), ComputationError);
}

TEST(MonomialOrder, GrevlexDegreeTie) {
  auto r = ring_of({"x", "y", "z"});
  EXPECT_GT(r->order().compare(P(r, "x^2").lead_monomial(), P(r, "x*y").lead_monomial()), 0);
  EXPECT_GT(r->order().compare(P(r, "y^2").lead_monomial(), P(r, "x*z").lead_monomial()), 0);
}

TEST(MonomialOrder, BlockEliminates) {
  for (auto inner : {OrderKind::grevlex, OrderKind::lex}) {
    auto r = ring_of({"x", "y1"}, MonomialOrder::block({1}, inner));
    EXPECT_GT(r->order().compare(Monomial::variable(1), Monomial::variable(0, 10)), 0);
  }
}

TEST(MonomialOrder, LexOnGenericMatrixEntries) {
  auto r = ring_of({"x12", "x11", "x22", "x21", "x32", "x31"}, MonomialOrder::lex());
  auto a = P(r, "x11*x22").lead_monomial();
  auto b = P(r, "x12*x21").lead_monomial();
  EXPECT_LT(r->order().compare(a, b), 0);
}

TEST(Polynomial, Arithmetic) {
  auto r = ring_of({"x", "y", "z", "w"});
  EXPECT_EQ(P(r, "x*z") * P(r, "z*w"), P(r, "x*z^2*w"));
  auto f = P(r, "x^2 - 3*y*z + 5");
  EXPECT_TRUE((f + (-f)).is_zero());
  // l1*h2 - l2*h1 with l = (x, y), h = (z, w).
  auto q = P(r, "x") * P(r, "w") - P(r, "y") * P(r, "z");
  EXPECT_EQ(q, P(r, "x*w - y*z"));
}

class RandomRing : public ::testing::Test {
 protected:
  RingPtr r = ring_of({"a", "b", "c", "d"});
  std::mt19937_64 rng{12345};
};

TEST_F(RandomRing, RingAxioms) {
  for (int trial = 0; trial < 200; ++trial) {
    auto f = testing::random_poly(r, 3, 5, rng);
    auto g = testing::random_poly(r, 3, 5, rng);
    auto h = testing::random_poly(r, 3, 5, rng);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
  }
}

TEST_F(RandomRing, OrdersAreTotalAndMultiplicative) {
  std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(), MonomialOrder::lex(),
                                       MonomialOrder::block({1, 3}),
                                       MonomialOrder::block({0}, OrderKind::lex)};
  auto rand_mono = [&] {
    std::array<int, 4> e{};
    for (auto& x : e) x = static_cast<int>(rng() % 4);
    return Monomial::from_exponents(e);
  };
  for (const auto& ord : orders) {
    for (int trial = 0; trial < 10000 / 4; ++trial) {
      auto a = rand_mono(), b = rand_mono(), c = rand_mono();
      int ab = ord.compare(a, b);
      EXPECT_EQ(ab, -ord.compare(b, a));
      EXPECT_EQ(ab == 0, a == b);
      if (ab > 0 && ord.compare(b, c) > 0) EXPECT_GT(ord.compare(a, c), 0);
      EXPECT_EQ(ord.compare(a * c, b * c), ab);
      if (!c.is_one()) EXPECT_GT(ord.compare(a * c, a), 0);
    }
  }
}

TEST_F(RandomRing, ParsePrintRoundTrip) {
  for (int trial = 0; trial < 200; ++trial) {
    auto f = testing::random_poly(r, 4, 6, rng);
    EXPECT_EQ(P(r, f.to_string()), f) << f.to_string();
  }
}

TEST_F(RandomRing, HomogeneityPreserved) {
  for (int trial = 0; trial < 100; ++trial) {
    auto f = testing::random_form(r, 2, 4, rng);
    auto g = testing::random_form(r, 2, 4, rng);
    auto h = testing::random_form(r, 3, 4, rng);
    EXPECT_TRUE((f + g).is_homogeneous());
    auto fh = f * h;
    EXPECT_TRUE(fh.is_homogeneous());
    if (!fh.is_zero()) {
      EXPECT_EQ(fh.degree(), 5);
    }
  }
}

}  // namespace
}  // namespace aci
