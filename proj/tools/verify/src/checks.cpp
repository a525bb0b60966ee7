#include "aci_verify/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "aci/errors.hpp"
#include "aci/groebner.hpp"
#include "aci/parser.hpp"
#include "aci_verify/oracles.hpp"

namespace aci::verify {

namespace {

using Clock = std::chrono::steady_clock;

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string compact(const BettiTable& B) { return format::betti_json(B)["entries"].dump(); }

BettiTable truncate(const BettiTable& B, int max_degree) {
  BettiTable out;
  for (const auto& [k, v] : B.entries()) {
    if (k.second <= max_degree) out.add(k.first, k.second, v);
  }
  return out;
}

Ideal parse_ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, std::move(ps));
}

class Stopwatch {
 public:
  explicit Stopwatch(CriterionResult& r) : r_(r), start_(Clock::now()) {}
  ~Stopwatch() { r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  CriterionResult& r_;
  Clock::time_point start_;
};

const char* shape_name(FamilyCase c) { return c == FamilyCase::one ? "one" : "two"; }

}  // namespace

bool CriterionResult::pass() const {
  return within_budget() &&
         std::all_of(rows.begin(), rows.end(), [](const LedgerRow& r) { return r.pass; });
}

void CriterionResult::record(std::string id, std::string expected, std::string computed, bool ok) {
  rows.push_back(LedgerRow{std::move(id), std::move(expected), std::move(computed), ok});
}

void CriterionResult::tally(std::string id, int passed, int total) {
  std::string s = std::to_string(passed) + "/" + std::to_string(total);
  record(std::move(id), std::to_string(total) + "/" + std::to_string(total), s, passed == total);
}

CriterionResult PaperSuite::example() {
  CriterionResult r{1, "example", 5.0};
  {
    Stopwatch sw(r);
    RingPtr ring = Ring::make({"x", "y", "z", "w"}, PrimeField());
    Ideal I = parse_ideal(ring, {"x*y", "x*w", "z^2", "(x-y)*z", "x^2+z*w"});

    BettiTable expected({{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 4}, {{2, 4}, 4}, {{3, 5}, 6}, {{4, 6}, 2}});
    BettiTable minimal = betti_table(minimal_free_resolution(I));
    r.record("example.betti", compact(expected), compact(minimal), minimal == expected);
    BettiTable oracle = koszul_tor_table(I, 8);
    r.record("example.betti.oracle", compact(expected), compact(oracle), oracle == expected);

    struct ColonCase {
      std::string id;
      std::vector<std::string> ideal;
      std::string f;
      std::vector<std::string> quotient;
    };
    const std::vector<ColonCase> colons{
        {"example.colon1", {"x*y", "x*w", "z^2"}, "(x-y)*z", {"x*y", "x*w", "z"}},
        {"example.colon2", {"x*y", "x*w", "z^2", "(x-y)*z"}, "x^2+z*w", {"x*w", "y", "z"}},
    };
    for (const auto& c : colons) {
      Ideal J = parse_ideal(ring, c.ideal);
      Polynomial f = parse_polynomial(c.f, ring);
      Ideal want = parse_ideal(ring, c.quotient);
      Ideal got = colon(J, f);
      r.record(c.id, want.to_string(), got.to_string(), ideals_equal(got, want));
      auto lhs = colon_dims(J, f, 6), rhs = ideal_dims(want, 6);
      r.record(c.id + ".oracle", join(rhs), join(lhs), lhs == rhs);
    }

    auto H = hilbert_series(I);
    const std::vector<long long> h{1, 2, -2, -2, 2};
    r.record("example.hilbert", format::tpoly(h) + " / (1-t)^2",
             format::tpoly(H.h_polynomial) + " / (1-t)^" + std::to_string(H.dimension),
             H.h_polynomial == h && H.dimension == 2);
  }
  return r;
}

void PaperSuite::ensure_family(FamilyCase shape) {
  auto& store = shape == FamilyCase::one ? one_ : two_;
  if (!store.empty()) return;
  const int lo = shape == FamilyCase::one ? 1 : 2;
  for (int g = lo; g <= 5; ++g) {
    for (int k = 0; k < opt_.family_seeds; ++k) {
      const std::uint64_t seed = opt_.seed + static_cast<std::uint64_t>(k);
      Ideal I = generate_family(shape, g, seed);
      auto s = summarize_resolution(I);
      store.push_back(Instance{shape, g, seed, I, s.betti, s.hilbert.multiplicity(), std::nullopt});
    }
  }
}

CriterionResult PaperSuite::family(FamilyCase shape) {
  const bool first = shape == FamilyCase::one;
  CriterionResult r{first ? 2 : 3, first ? "family-one" : "family-two", 120.0};
  {
    Stopwatch sw(r);
    ensure_family(shape);
    const auto& store = first ? one_ : two_;
    const std::string tag = std::string("family.") + shape_name(shape);
    std::map<int, std::array<int, 4>> by_g;  // table, totals, multiplicity, count
    for (const auto& inst : store) {
      auto& t = by_g[inst.g];
      ++t[3];
      const int g = inst.g;
      if (inst.betti == predicted_betti(g, shape)) ++t[0];
      const auto totals = inst.betti.totals();
      bool totals_ok = static_cast<int>(totals.size()) <= g + 2;
      bool strict = false;
      for (int i = 0; i < static_cast<int>(totals.size()); ++i) {
        const long long bound = choose(g + 1, i);
        if (first) {
          totals_ok = totals_ok && totals[i] == bound;
        } else {
          totals_ok = totals_ok && totals[i] <= bound;
          strict = strict || totals[i] < bound;
        }
      }
      if (first && static_cast<int>(totals.size()) != g + 2) totals_ok = false;
      if (!first && static_cast<int>(totals.size()) < g + 2) strict = true;
      if (!first && g >= 3 && !strict) totals_ok = false;
      if (totals_ok) ++t[1];
      const long long e = first ? (1LL << (g - 1)) : 3 * (1LL << (g - 2));
      if (inst.multiplicity == e) ++t[2];
    }
    for (const auto& [g, t] : by_g) {
      const std::string id = tag + ".g" + std::to_string(g);
      r.tally(id + ".table", t[0], t[3]);
      r.tally(id + (first ? ".totals=binom" : ".totals<=binom"), t[1], t[3]);
      r.tally(id + ".multiplicity", t[2], t[3]);
    }
  }
  return r;
}

CriterionResult PaperSuite::family_one() { return family(FamilyCase::one); }
CriterionResult PaperSuite::family_two() { return family(FamilyCase::two); }

CriterionResult PaperSuite::fuzz() {
  CriterionResult r{4, "fuzz", 180.0};
  {
    Stopwatch sw(r);
    int ok = 0;
    std::map<int, int> beta_hist;
    std::map<std::string, int> tags;
    for (int k = 0; k < opt_.fuzz_count; ++k) {
      const int g = 2 + k % 4;
      const std::uint64_t seed = opt_.seed + static_cast<std::uint64_t>(k);
      Ideal I = random_quadratic_aci(g, seed);
      std::string problem;
      int b = -1;
      try {
        if (!is_quadratic_aci(I)) problem = "not an almost complete intersection";
        b = beta23(minimal_generators(I).gens());
        ++beta_hist[b];
        ++tags[to_string(classify(I).tag)];
      } catch (const std::exception& e) {
        problem = e.what();
      }
      if (problem.empty() && b <= 2) {
        ++ok;
      } else {
        r.record("fuzz.g" + std::to_string(g) + ".seed" + std::to_string(seed), "beta23<=2",
                 problem.empty() ? "beta23=" + std::to_string(b) : problem, false);
      }
    }
    r.tally("fuzz.beta23<=2", ok, opt_.fuzz_count);
    std::string hist, tag_text;
    for (const auto& [b, n] : beta_hist) hist += (hist.empty() ? "" : " ") + std::to_string(b) + ":" + std::to_string(n);
    for (const auto& [t, n] : tags) tag_text += (tag_text.empty() ? "" : " ") + t + ":" + std::to_string(n);
    r.record("fuzz.beta23.histogram", "values in {0,1,2}", hist,
             beta_hist.empty() || beta_hist.rbegin()->first <= 2);
    r.record("fuzz.tags", "classified", tag_text, true);
  }
  return r;
}

void PaperSuite::ensure_classified() {
  ensure_family(FamilyCase::one);
  ensure_family(FamilyCase::two);
  if (classified_) return;
  for (auto* store : {&one_, &two_}) {
    for (auto& inst : *store) inst.classification = classify(inst.ideal);
  }
  classified_ = true;
}

CriterionResult PaperSuite::lifts() {
  CriterionResult r{5, "lifts"};
  {
    Stopwatch sw(r);
    ensure_classified();
    int total = 0, tagged = 0, quadratic = 0, telescope = 0, recovers = 0;
    for (const auto* store : {&one_, &two_}) {
      for (const auto& inst : *store) {
        ++total;
        const auto& c = *inst.classification;
        const AciTag want = inst.shape == FamilyCase::one ? AciTag::OneLinearSyzygy : AciTag::TwoLinearSyzygies;
        if (c.tag != want) {
          r.record(std::string("lifts.") + shape_name(inst.shape) + ".g" + std::to_string(inst.g) + ".seed" +
                       std::to_string(inst.seed),
                   to_string(want), to_string(c.tag) + ": " + c.reason, false);
          continue;
        }
        ++tagged;
        auto rep = verify_lift(lg_lift(c));
        quadratic += rep.gb_quadratic;
        telescope += rep.telescope;
        recovers += rep.recovers;
      }
    }
    r.tally("lifts.classified", tagged, total);
    r.tally("lifts.gb_quadratic", quadratic, total);
    r.tally("lifts.telescope", telescope, total);
    r.tally("lifts.recovers", recovers, total);
  }
  return r;
}

void PaperSuite::ensure_catalogs() {
  if (!catalogs_.empty()) return;
  for (int g = 1; g <= kMaxCatalogEdges; ++g) catalogs_.push_back(build_catalog(g));
}

CriterionResult PaperSuite::edge_catalog() {
  CriterionResult r{6, "edge-catalog"};
  {
    Stopwatch sw(r);
    ensure_catalogs();
    for (int g = 1; g <= 5; ++g) {
      const auto& cat = catalogs_[g - 1];
      std::map<int, long long> mine;
      for (const auto& e : cat.entries) ++mine[e.graph.vertices()];
      auto census = labeled_orbit_census(g);
      auto text = [](const std::map<int, long long>& m) {
        std::string s;
        long long total = 0;
        for (const auto& [v, n] : m) {
          s += (s.empty() ? "" : " ") + std::to_string(v) + "v:" + std::to_string(n);
          total += n;
        }
        return std::to_string(total) + " (" + s + ")";
      };
      r.record("edges.g" + std::to_string(g) + ".classes", text(census), text(mine), census == mine);
    }
    for (int g = 3; g <= 5; ++g) {
      const auto& cat = catalogs_[g - 1];
      const std::string id = "edges.g" + std::to_string(g);
      auto tables = cat.aci_tables();
      std::set<long long> b23;
      for (const auto& B : tables) b23.insert(B.at(2, 3));
      r.record(id + ".aci_tables", "2 tables, beta23 {1,2}",
               std::to_string(tables.size()) + " tables, beta23 {" + join(std::vector<long long>(b23.begin(), b23.end())) + "}",
               tables.size() == 2 && b23 == std::set<long long>{1, 2});
      int matched = 0, members = 0;
      for (const auto& e : cat.entries) {
        if (!e.aci) continue;
        ++members;
        auto c = classify(edge_ideal(e.graph));
        if (!c.structured()) continue;
        FamilyCase shape = c.tag == AciTag::OneLinearSyzygy ? FamilyCase::one : FamilyCase::two;
        if (c.beta23 == e.beta23() && e.betti == predicted_betti(e.height, shape)) ++matched;
      }
      r.tally(id + ".aci_tables=predicted", matched, members);
    }
    const std::vector<long long> excluded{1, 2, -2, -2, 2};
    const auto& five = catalogs_[4];
    r.record("edges.g5.hpoly_excludes", "absent: " + format::tpoly(excluded),
             std::to_string(five.by_hpoly.size()) + " h-polynomials, " +
                 (five.contains(excluded) ? "present" : "absent"),
             !five.contains(excluded));
  }
  return r;
}

CriterionResult PaperSuite::tor_oracle() {
  CriterionResult r{7, "tor-oracle"};
  {
    Stopwatch sw(r);
    std::mt19937_64 rng(opt_.seed ^ 0x746f72u);
    int ok = 0, done = 0;
    while (done < opt_.tor_count) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const int k = 1 + static_cast<int>(rng() % 4);
      RingPtr ring = Ring::standard(n, PrimeField());
      std::vector<Polynomial> gens;
      for (int a = 0; a < k; ++a) {
        const int d = 1 + static_cast<int>(rng() % 3);
        auto monos = monomials_of_degree(n, d);
        const int terms = 1 + static_cast<int>(rng() % 4);
        std::vector<Term> ts;
        for (int t = 0; t < terms; ++t) {
          ts.push_back(Term{static_cast<std::uint32_t>(1 + rng() % 32002), monos[rng() % monos.size()]});
        }
        Polynomial f = Polynomial::from_terms(ring, std::move(ts));
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      Ideal I(ring, gens);
      ++done;
      BettiTable want = koszul_tor_table(I, opt_.tor_degree);
      BettiTable minimal = truncate(betti_table(minimal_free_resolution(I)), opt_.tor_degree);
      BettiTable ranks = truncate(betti_table(I), opt_.tor_degree);
      if (minimal == want && ranks == want) {
        ++ok;
      } else {
        r.record("tor.ideal" + std::to_string(done), compact(want),
                 compact(minimal) + " / " + compact(ranks) + " for " + I.to_string(), false);
      }
    }
    r.tally("tor.oracle_agrees", ok, opt_.tor_count);
  }
  return r;
}

CriterionResult PaperSuite::properties() {
  CriterionResult r{8, "properties"};
  {
    Stopwatch sw(r);
    ensure_classified();
    std::map<std::string, std::pair<int, int>> counts;
    const std::vector<std::string> family_checks{"subdiagonal", "linear-strand<=binom(mu,i)",
                                                  "diagonal<=binom(mu,i)",
                                                  "total>=binom(c,i)+binom(c-1,i-1)", "egh-witness"};
    for (const auto* store : {&one_, &two_}) {
      for (const auto& inst : *store) {
        const auto& c = *inst.classification;
        auto rep = bound_suite(inst.ideal, inst.betti, &c);
        for (const auto& name : family_checks) {
          const std::string key = std::string("families.") + shape_name(inst.shape) + "." + name;
          auto& [pass, total] = counts[key];
          ++total;
          const BoundCheck* chk = rep.find(name);
          if (chk && chk->holds) {
            ++pass;
          } else if (chk) {
            r.record(key + ".g" + std::to_string(inst.g) + ".seed" + std::to_string(inst.seed), "holds",
                     chk->detail, false);
          }
        }
      }
    }
    ensure_catalogs();
    for (const auto& cat : catalogs_) {
      for (const auto& e : cat.entries) {
        auto rep = bound_suite(edge_ideal(e.graph), e.betti);
        for (const std::string name : {"total<=binom(mu,i)", "pd<=mu"}) {
          auto& [pass, total] = counts["catalog." + name];
          ++total;
          const BoundCheck* chk = rep.find(name);
          if (chk && chk->holds) ++pass;
        }
        bool sub = true;
        for (const auto& [k, v] : e.betti.entries()) sub = sub && k.second <= 2 * k.first;
        auto& [pass, total] = counts["catalog.subdiagonal"];
        ++total;
        pass += sub;
      }
    }
    for (const auto& [key, pt] : counts) r.tally(key, pt.first, pt.second);
  }
  return r;
}

std::vector<CriterionResult> PaperSuite::run_all() {
  return {example(), family_one(), family_two(), fuzz(), lifts(), edge_catalog(), tor_oracle(), properties()};
}

format::Json ledger_json(const std::vector<CriterionResult>& results, bool with_time) {
  format::Json out = format::Json::array();
  for (const auto& r : results) {
    format::Json rows = format::Json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"id", row.id}, {"expected", row.expected}, {"computed", row.computed}, {"pass", row.pass}});
    }
    format::Json entry{{"criterion", r.number}, {"name", r.name}, {"pass", r.pass()}};
    if (with_time) {
      entry["seconds"] = r.seconds;
      entry["budget_seconds"] = r.budget_seconds;
    }
    entry["rows"] = rows;
    out.push_back(entry);
  }
  return out;
}

std::string summary_line(const CriterionResult& r, bool with_time) {
  const auto passed = std::count_if(r.rows.begin(), r.rows.end(), [](const LedgerRow& x) { return x.pass; });
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass() ? "PASS " : "FAIL ") << r.number << " " << r.name;
  if (with_time) {
    os << " (" << r.seconds << " s";
    if (r.budget_seconds > 0) os << " of " << r.budget_seconds << " s";
    os << ")";
  }
  os << ": " << passed << "/" << r.rows.size() << " rows";
  if (!r.within_budget()) os << ", over time budget";
  return os.str();
}

std::string ledger_text(const std::vector<CriterionResult>& results, bool with_time) {
  std::string out;
  for (const auto& r : results) {
    for (const auto& row : r.rows) {
      out += (row.pass ? "pass " : "FAIL ") + row.id + ": " + row.computed;
      if (!row.pass || row.expected != row.computed) out += "  [expected " + row.expected + "]";
      out += '\n';
    }
  }
  for (const auto& r : results) out += summary_line(r, with_time) + '\n';
  return out;
}

}  // namespace aci::verify
