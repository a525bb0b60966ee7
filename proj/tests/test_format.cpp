#include <gtest/gtest.h>

#include "aci_format/format.hpp"
#include "support.hpp"

namespace aci {
namespace {

using format::Json;
using testing::ideal_of;
using testing::ring_of;

BettiTable example_table() {
  return BettiTable({{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 4}, {{2, 4}, 4}, {{3, 5}, 6}, {{4, 6}, 2}});
}

TEST(BettiAscii, DotsAndDashes) {
  EXPECT_EQ(format::betti_ascii(example_table()),
            "1 · · · ·\n"
            "· 5 4 · ·\n"
            "· · 4 6 2\n");
  EXPECT_EQ(format::betti_ascii(example_table(), format::CellStyle::dash),
            " 1 -- -- -- --\n"
            "--  5  4 -- --\n"
            "-- --  4  6  2\n");
  EXPECT_EQ(format::betti_ascii(BettiTable()), "");
}

TEST(BettiAscii, WideColumnsAlignRight) {
  BettiTable B({{{0, 0}, 1}, {{1, 2}, 12}, {{2, 4}, 3}});
  EXPECT_EQ(format::betti_ascii(B), "1  · ·\n· 12 ·\n·  · 3\n");
}

TEST(BettiJson, RoundTrips) {
  BettiTable B = example_table();
  Json j = format::betti_json(B);
  EXPECT_EQ(j["pd"], 4);
  EXPECT_EQ(j["reg"], 2);
  EXPECT_EQ(format::betti_from_json(Json::parse(j.dump())), B);
}

TEST(BettiJson, RejectsMalformedDocuments) {
  EXPECT_THROW(format::betti_from_json(Json::parse("[1,2]")), std::invalid_argument);
  EXPECT_THROW(format::betti_from_json(Json::parse(R"({"entries":[[0,0]]})")), std::invalid_argument);
  EXPECT_THROW(format::betti_from_json(Json::parse(R"({"entries":[[0,0,1]],"pd":3})")),
               std::invalid_argument);
}

TEST(TPoly, Text) {
  EXPECT_EQ(format::tpoly({1, 2, -2, -2, 2}), "1+2t-2t^2-2t^3+2t^4");
  EXPECT_EQ(format::tpoly({0, -1, 0, 1}), "-t+t^3");
  EXPECT_EQ(format::tpoly({}), "0");
  EXPECT_EQ(format::tpoly({-1}), "-1");
}

TEST(Order, ParsesAndRoundTrips) {
  const std::vector<std::string> names{"x", "y", "z"};
  for (std::string text : {"grevlex", "lex", "block:x,z", "block:y/lex"}) {
    MonomialOrder o = format::parse_order(text, names);
    EXPECT_EQ(format::parse_order(o.describe(names), names).describe(names), o.describe(names)) << text;
  }
  EXPECT_THROW(format::parse_order("deglex", names), std::invalid_argument);
  EXPECT_THROW(format::parse_order("block:q", names), std::invalid_argument);
  EXPECT_THROW(format::parse_order("block:x/revlex", names), std::invalid_argument);
}

TEST(IdealJson, RoundTrips) {
  auto r = ring_of({"x", "y", "z"}, MonomialOrder::lex());
  Ideal I = ideal_of(r, {"x^2-3*y*z", "y^2+z^2"});
  Ideal J = format::ideal_from_json(Json::parse(format::ideal_json(I).dump()));
  EXPECT_EQ(J.ring()->names(), r->names());
  EXPECT_EQ(format::strings(J.gens()), format::strings(I.gens()));
  EXPECT_EQ(J.ring()->order().describe(r->names()), "lex");
}

}  // namespace
}  // namespace aci
