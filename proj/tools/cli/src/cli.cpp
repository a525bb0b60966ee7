#include "aci_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aci/errors.hpp"
#include "aci/parser.hpp"
#include "aci_format/format.hpp"
#include "aci_verify/checks.hpp"

namespace aci::cli {

namespace {

using format::Json;

struct Options {
  std::string input;
  std::string order = "grevlex";
  int g = 0;
  std::string shape;
  std::uint64_t seed = 0;
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  std::string format = "ascii";
  bool json = false;
  std::string style = "dot";
  bool dedup = false;
  int seeds = 20;
  int fuzz = 500;
  int tor = 100;
  std::vector<int> criteria;

  bool as_json() const { return json || format == "json"; }
  format::CellStyle cell_style() const {
    return style == "dash" ? format::CellStyle::dash : format::CellStyle::dot;
  }
};

std::string read_all(std::istream& s) {
  std::ostringstream os;
  os << s.rdbuf();
  return os.str();
}

Ideal load_ideal(const Options& o, std::istream& in) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(o.input);
    if (!f) throw std::invalid_argument("cannot open input file '" + o.input + "'");
    text = read_all(f);
  }
  Document doc = parse_document(text, o.characteristic);
  if (!doc.ideal) throw std::invalid_argument("input declares no ideal");
  if (o.order == "grevlex") return *doc.ideal;
  RingPtr ring = doc.ring->with_order(format::parse_order(o.order, doc.ring->names()));
  std::vector<Polynomial> gens;
  for (const auto& f : doc.ideal->gens()) gens.push_back(parse_polynomial(f.to_string(), ring));
  return Ideal(ring, std::move(gens));
}

FamilyCase family_case(const Options& o) {
  if (o.shape == "two") return FamilyCase::two;
  return FamilyCase::one;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string twists(const GradedFreeModule& F) {
  std::map<int, int> count;
  for (int d : F) ++count[d];
  std::string s;
  for (const auto& [d, c] : count) {
    if (!s.empty()) s += " + ";
    s += "S(" + std::to_string(-d) + ")^" + std::to_string(c);
  }
  return s.empty() ? "0" : s;
}

int cmd_gb(const Options& o, std::istream& in, std::ostream& out) {
  Ideal I = load_ideal(o, in);
  GroebnerBasis G = buchberger(I, I.ring()->order());
  if (o.as_json()) {
    emit(out, format::groebner_json(G));
  } else {
    for (const auto& f : G.elements()) out << f.to_string() << '\n';
  }
  return kOk;
}

int cmd_res(const Options& o, std::istream& in, std::ostream& out) {
  Ideal I = load_ideal(o, in);
  GradedComplex C = minimal_free_resolution(I);
  BettiTable B = betti_table(C);
  if (o.as_json()) {
    Json modules = Json::array();
    for (const auto& F : C.modules()) modules.push_back(F);
    Json maps = Json::array();
    for (int i = 1; i <= C.length(); ++i) {
      const PolyMatrix& d = C.differential(i);
      Json rows = Json::array();
      for (std::size_t r = 0; r < d.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d.at(r, c).to_string());
        rows.push_back(row);
      }
      maps.push_back(rows);
    }
    emit(out, Json{{"ring", format::ring_json(I.ring())},
                   {"modules", modules},
                   {"differentials", maps},
                   {"betti", format::betti_json(B)}});
  } else {
    for (int i = 0; i <= C.length(); ++i) out << "F" << i << ": " << twists(C.module(i)) << '\n';
    out << '\n' << format::betti_ascii(B, o.cell_style());
  }
  return kOk;
}

int cmd_betti(const Options& o, std::istream& in, std::ostream& out) {
  Ideal I = load_ideal(o, in);
  BettiTable B = betti_table(I);
  if (o.as_json()) {
    emit(out, format::betti_json(B));
  } else {
    out << format::betti_ascii(B, o.cell_style());
  }
  return kOk;
}

int cmd_hilbert(const Options& o, std::istream& in, std::ostream& out) {
  Ideal I = load_ideal(o, in);
  HilbertSeries H = hilbert_series(I);
  if (o.as_json()) {
    emit(out, format::hilbert_json(H));
  } else {
    out << "H(t) = (" << format::tpoly(H.h_polynomial) << ")/(1-t)^" << H.dimension << '\n';
    out << "numerator: " << format::tpoly(H.numerator) << " over (1-t)^" << H.ambient << '\n';
    out << "dimension: " << H.dimension << '\n';
    out << "multiplicity: " << H.multiplicity() << '\n';
  }
  return kOk;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  Ideal I = load_ideal(o, in);
  ACIClassification c = classify(I);
  if (o.as_json()) {
    emit(out, format::classification_json(c));
    return kOk;
  }
  out << "tag: " << to_string(c.tag) << '\n';
  out << "height: " << c.height << '\n';
  out << "beta23: " << c.beta23 << '\n';
  if (c.tag == AciTag::OneLinearSyzygy) {
    out << "x: " << c.x().to_string() << "\nz: " << c.z().to_string() << "\nw: " << c.w().to_string()
        << '\n';
  }
  if (c.tag == AciTag::TwoLinearSyzygies) {
    for (const auto& row : c.matrix) {
      out << "row:";
      for (const auto& f : row) out << ' ' << f.to_string();
      out << '\n';
    }
  }
  for (const auto& q : c.quadrics) out << "quadric: " << q.to_string() << '\n';
  out << "reason: " << c.reason << '\n';
  return kOk;
}

int cmd_gen_family(const Options& o, std::ostream& out) {
  FamilyCase shape = family_case(o);
  Ideal I = generate_family(shape, o.g, o.seed, 0, o.characteristic);
  if (o.as_json()) {
    Json j = format::ideal_json(I);
    j["case"] = o.shape.empty() ? "one" : o.shape;
    j["g"] = o.g;
    j["seed"] = o.seed;
    j["predicted"] = format::betti_json(predicted_betti(o.g, shape));
    emit(out, j);
  } else {
    out << format_document(I);
  }
  return kOk;
}

int cmd_lift(const Options& o, std::istream& in, std::ostream& out) {
  Ideal I = load_ideal(o, in);
  ACIClassification c = classify(I);
  LGCertificate cert = lg_lift(c);
  LiftReport report = verify_lift(cert);
  if (o.as_json()) {
    emit(out, format::certificate_json(cert, report));
  } else {
    out << "source: " << to_string(cert.source) << '\n';
    out << "ring: " << format::ring_json(cert.ring).dump() << '\n';
    for (const auto& f : cert.lifted.gens()) out << "lifted: " << f.to_string() << '\n';
    for (const auto& l : cert.linear_forms) out << "form: " << l.to_string() << '\n';
    out << "gb max degree: " << report.gb_max_degree << '\n';
    out << "telescope: " << (report.telescope ? "pass" : "fail") << '\n';
    out << "recovers: " << (report.recovers ? "pass" : "fail") << '\n';
    out << (report.ok() ? "lift verified" : "lift FAILED") << '\n';
  }
  return report.ok() ? kOk : kComputationFailure;
}

int cmd_enum_edges(const Options& o, std::ostream& out) {
  HPolyCatalog cat = build_catalog(o.g);
  std::vector<std::size_t> picks;
  if (o.dedup) {
    for (const auto& [h, idx] : cat.by_hpoly) picks.push_back(idx);
    std::sort(picks.begin(), picks.end());
  } else {
    for (std::size_t k = 0; k < cat.entries.size(); ++k) picks.push_back(k);
  }
  for (std::size_t k : picks) {
    const CatalogEntry& e = cat.entries[k];
    if (o.as_json()) {
      out << format::catalog_line(e).dump() << '\n';
    } else {
      out << e.graph.to_string() << " | h = " << format::tpoly(e.hpoly) << " | height " << e.height
          << (e.aci ? " | aci" : "") << '\n';
    }
  }
  return kOk;
}

int cmd_verify_paper(const Options& o, std::ostream& out, std::ostream& err) {
  verify::SuiteOptions so;
  so.family_seeds = o.seeds;
  so.fuzz_count = o.fuzz;
  so.tor_count = o.tor;
  so.seed = o.seed;
  verify::PaperSuite suite(so);
  std::vector<verify::CriterionResult> results;
  if (o.criteria.empty()) {
    results = suite.run_all();
  } else {
    using Check = verify::CriterionResult (verify::PaperSuite::*)();
    static const Check checks[] = {&verify::PaperSuite::example,   &verify::PaperSuite::family_one,
                                   &verify::PaperSuite::family_two, &verify::PaperSuite::fuzz,
                                   &verify::PaperSuite::lifts,      &verify::PaperSuite::edge_catalog,
                                   &verify::PaperSuite::tor_oracle, &verify::PaperSuite::properties};
    for (int k : o.criteria) results.push_back((suite.*checks[k - 1])());
  }
  // Timings go to stderr so stdout stays reproducible.
  for (const auto& r : results) err << verify::summary_line(r) << '\n';
  if (o.as_json()) {
    emit(out, verify::ledger_json(results, false));
  } else {
    out << verify::ledger_text(results, false);
  }
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass(); });
  return ok ? kOk : kComputationFailure;
}

void add_input_options(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Input file (default or '-': stdin)");
  sub->add_option("--order", o.order, "grevlex | lex | block:VARS[/lex]");
  sub->add_option("--char", o.characteristic, "Characteristic for 'ring Fp[...]'");
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"ascii", "json"}));
  sub->add_flag("--json", o.json, "Same as --format json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Quadratic almost complete intersections over F_p", "aci"};
  app.require_subcommand(1);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  auto* res = app.add_subcommand("res", "Minimal free resolution");
  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and multiplicity");
  auto* cls = app.add_subcommand("classify", "Linear-syzygy structure of a quadratic ACI");
  auto* lift = app.add_subcommand("lift", "Lift to a quadratic Groebner basis and verify it");
  for (auto* sub : {gb, res, betti, hilbert, cls, lift}) {
    add_input_options(sub, o);
    add_output_options(sub, o);
  }
  for (auto* sub : {res, betti}) {
    sub->add_option("--style", o.style, "Zero cells as '·' or '--'")->check(CLI::IsMember({"dot", "dash"}));
  }

  auto* gen = app.add_subcommand("gen-family", "Random member of a structured family");
  gen->add_option("--g", o.g, "Height")->required()->check(CLI::Range(1, 64));
  gen->add_option("--case", o.shape, "Family shape")->required()->check(CLI::IsMember({"one", "two"}));
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--char", o.characteristic, "Characteristic");
  add_output_options(gen, o);

  auto* edges = app.add_subcommand("enum-edges", "Edge ideals of graphs with g edges, up to isomorphism");
  edges->add_option("--g", o.g, "Number of edges")->required();
  edges->add_flag("--dedup", o.dedup, "Keep the first graph per h-polynomial");
  add_output_options(edges, o);

  auto* paper = app.add_subcommand("verify-paper", "Run the acceptance ledger");
  paper->add_option("--seed", o.seed, "Base seed");
  paper->add_option("--seeds", o.seeds, "Seeds per family height")->check(CLI::PositiveNumber);
  paper->add_option("--fuzz", o.fuzz, "Random ACIs in the fuzz check")->check(CLI::PositiveNumber);
  paper->add_option("--tor", o.tor, "Random ideals in the Tor comparison")->check(CLI::PositiveNumber);
  paper->add_option("--criteria", o.criteria, "Subset of checks to run")->check(CLI::Range(1, 8));
  add_output_options(paper, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (gb->parsed()) return cmd_gb(o, in, out);
    if (res->parsed()) return cmd_res(o, in, out);
    if (betti->parsed()) return cmd_betti(o, in, out);
    if (hilbert->parsed()) return cmd_hilbert(o, in, out);
    if (cls->parsed()) return cmd_classify(o, in, out);
    if (lift->parsed()) return cmd_lift(o, in, out);
    if (gen->parsed()) return cmd_gen_family(o, out);
    if (edges->parsed()) return cmd_enum_edges(o, out);
    if (paper->parsed()) return cmd_verify_paper(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << '\n';
    return kComputationFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kComputationFailure;
  }
  return kUsageError;
}

}  // namespace aci::cli
