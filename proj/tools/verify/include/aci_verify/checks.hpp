#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aci/edge_ideals.hpp"
#include "aci/koszul_aci.hpp"
#include "aci_format/format.hpp"

namespace aci::verify {

struct LedgerRow {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CriterionResult {
  CriterionResult() = default;
  CriterionResult(int number, std::string name, double budget_seconds = 0)
      : number(number), name(std::move(name)), budget_seconds(budget_seconds) {}

  int number = 0;
  std::string name;
  /// 0 means no time limit.
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<LedgerRow> rows;

  bool within_budget() const { return budget_seconds <= 0 || seconds < budget_seconds; }
  bool pass() const;
  void record(std::string id, std::string expected, std::string computed, bool pass);
  /// Records "passed/total" under `id`.
  void tally(std::string id, int passed, int total);
};

struct SuiteOptions {
  int family_seeds = 20;
  int fuzz_count = 500;
  int tor_count = 100;
  int tor_degree = 8;
  std::uint64_t seed = 0;
};

/// The acceptance checks. Later checks reuse the family instances and
/// catalogs computed by earlier ones, building them on demand.
class PaperSuite {
 public:
  explicit PaperSuite(SuiteOptions options = {}) : opt_(options) {}

  CriterionResult example();
  CriterionResult family_one();
  CriterionResult family_two();
  CriterionResult fuzz();
  CriterionResult lifts();
  CriterionResult edge_catalog();
  CriterionResult tor_oracle();
  CriterionResult properties();

  std::vector<CriterionResult> run_all();

 private:
  struct Instance {
    FamilyCase shape;
    int g;
    std::uint64_t seed;
    Ideal ideal;
    BettiTable betti;
    long long multiplicity;
    std::optional<ACIClassification> classification;
  };

  CriterionResult family(FamilyCase shape);
  void ensure_family(FamilyCase shape);
  void ensure_catalogs();
  void ensure_classified();

  SuiteOptions opt_;
  std::vector<Instance> one_, two_;
  std::vector<HPolyCatalog> catalogs_;
  bool classified_ = false;
};

format::Json ledger_json(const std::vector<CriterionResult>& results, bool with_time = true);
/// One line per ledger row followed by a verdict line per criterion.
std::string ledger_text(const std::vector<CriterionResult>& results, bool with_time = true);
/// "PASS 1 example (0.10 s of 5.00 s): 7/7 rows"; without timing the
/// parenthesis is dropped.
std::string summary_line(const CriterionResult& r, bool with_time = true);

}  // namespace aci::verify
