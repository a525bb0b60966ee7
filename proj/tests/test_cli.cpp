#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "aci_cli/cli.hpp"
#include "aci_format/format.hpp"

namespace aci {
namespace {

using format::Json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kExample =
    "ring F32003[x,y,z,w];\n"
    "ideal (x*y, x*w, z^2, (x-y)*z, x^2+z*w);\n";

TEST(Cli, BettiFromStdin) {
  auto r = call({"betti"}, kExample);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 · · · ·\n· 5 4 · ·\n· · 4 6 2\n");
  EXPECT_EQ(call({"betti", "--style", "dash"}, kExample).out, " 1 -- -- -- --\n--  5  4 -- --\n-- --  4  6  2\n");
}

TEST(Cli, InputFile) {
  const std::string path = ::testing::TempDir() + "cli_example.txt";
  std::ofstream(path) << kExample;
  auto r = call({"hilbert", "--input", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(1+2t-2t^2-2t^3+2t^4)/(1-t)^2"), std::string::npos);
  std::remove(path.c_str());
  EXPECT_EQ(call({"hilbert", "--input", path}).code, 2);
}

TEST(Cli, JsonRoundTrips) {
  auto b = call({"betti", "--json"}, kExample);
  ASSERT_EQ(b.code, 0);
  BettiTable B = format::betti_from_json(Json::parse(b.out));
  EXPECT_EQ(B.at(3, 5), 6);
  EXPECT_EQ(Json::parse(b.out).dump() + "\n", b.out);

  auto h = call({"hilbert", "--format", "json"}, kExample);
  EXPECT_EQ(Json::parse(h.out)["multiplicity"], 1);

  auto gen = call({"gen-family", "--g", "3", "--case", "one", "--seed", "2", "--json"});
  ASSERT_EQ(gen.code, 0);
  Ideal I = format::ideal_from_json(Json::parse(gen.out));
  EXPECT_EQ(I.gens().size(), 4u);
  EXPECT_EQ(format::betti_from_json(Json::parse(gen.out)["predicted"]), predicted_betti(3, FamilyCase::one));
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"gen-family", "--g", "4", "--case", "two", "--seed", "9"},
        std::vector<std::string>{"enum-edges", "--g", "4", "--json"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
  EXPECT_NE(call({"gen-family", "--g", "2", "--case", "one", "--seed", "1"}).out,
            call({"gen-family", "--g", "2", "--case", "one", "--seed", "2"}).out);
}

TEST(Cli, FamilyPipeline) {
  auto gen = call({"gen-family", "--g", "3", "--case", "two", "--seed", "5"});
  ASSERT_EQ(gen.code, 0);
  auto cls = call({"classify"}, gen.out);
  EXPECT_EQ(cls.code, 0) << cls.err;
  EXPECT_NE(cls.out.find("tag: TwoLinearSyzygies"), std::string::npos);
  auto lift = call({"lift", "--json"}, gen.out);
  EXPECT_EQ(lift.code, 0) << lift.err;
  EXPECT_TRUE(Json::parse(lift.out)["report"]["ok"].get<bool>());
  auto res = call({"res"}, gen.out);
  EXPECT_NE(res.out.find("F1: S(-2)^4"), std::string::npos);
}

TEST(Cli, EnumEdgesLines) {
  auto r = call({"enum-edges", "--g", "3", "--json"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0, aci = 0;
  while (std::getline(lines, line)) {
    Json j = Json::parse(line);
    ++n;
    aci += j["aci"].get<bool>();
    format::betti_from_json(j["betti"]);
  }
  EXPECT_EQ(n, 5);
  EXPECT_EQ(aci, 3);
  EXPECT_EQ(call({"enum-edges", "--g", "7"}).code, 2);
}

TEST(Cli, GroebnerOrders) {
  const std::string in = "ring F32003[x,y,z];\nideal (x*z-y^2, x*y-z^2);\n";
  auto lex = call({"gb", "--order", "lex"}, in);
  EXPECT_EQ(lex.code, 0) << lex.err;
  EXPECT_NE(lex.out.find("y^3-z^3"), std::string::npos) << lex.out;
  EXPECT_EQ(call({"gb", "--order", "block:x"}, in).code, 0);
  EXPECT_EQ(call({"gb", "--order", "weird"}, in).code, 2);
  EXPECT_EQ(call({"gb"}, "ring F32003[x,y];\nideal (x-y^2);\n").code, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"betti", "--format", "xml"}, kExample).code, 2);
  EXPECT_EQ(call({"betti"}, "ring F32003[x];\nideal (x+);\n").code, 2);
  EXPECT_EQ(call({"betti", "--char", "12"}, "ring Fp[x];\nideal (x);\n").code, 2);
  EXPECT_EQ(call({"gen-family", "--g", "3"}).code, 2);
  // Five generators of height two: not an almost complete intersection.
  auto r = call({"classify"}, kExample);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("almost complete intersection"), std::string::npos);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, VerifySubset) {
  auto r = call({"verify-paper", "--criteria", "1", "--criteria", "6"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("pass example.hilbert"), std::string::npos);
  EXPECT_NE(r.out.find("PASS 6 edge-catalog"), std::string::npos);
  auto j = call({"verify-paper", "--criteria", "1", "--json"});
  EXPECT_TRUE(Json::parse(j.out)[0]["pass"].get<bool>());
  EXPECT_EQ(j.out, call({"verify-paper", "--criteria", "1", "--json"}).out);
}

}  // namespace
}  // namespace aci
