#include "aci_format/format.hpp"

#include <algorithm>
#include <stdexcept>

#include "aci/parser.hpp"

namespace aci::format {

namespace {

// Display width; the middle dot is one column but two bytes.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

}  // namespace

std::string betti_ascii(const BettiTable& B, CellStyle style) {
  const std::string zero = style == CellStyle::dot ? "·" : "--";
  const int pd = B.projective_dimension();
  const int reg = B.regularity();
  if (pd < 0) return "";
  std::vector<std::vector<std::string>> cells(reg + 1, std::vector<std::string>(pd + 1));
  std::vector<std::size_t> col_width(pd + 1, 0);
  for (int j = 0; j <= reg; ++j) {
    for (int i = 0; i <= pd; ++i) {
      long long v = B.at(i, i + j);
      cells[j][i] = v == 0 ? zero : std::to_string(v);
      col_width[i] = std::max(col_width[i], width(cells[j][i]));
    }
  }
  std::string out;
  for (int j = 0; j <= reg; ++j) {
    for (int i = 0; i <= pd; ++i) {
      if (i) out += ' ';
      out += std::string(col_width[i] - width(cells[j][i]), ' ') + cells[j][i];
    }
    out += '\n';
  }
  return out;
}

Json betti_json(const BettiTable& B) {
  Json entries = Json::array();
  for (const auto& [key, v] : B.entries()) entries.push_back({key.first, key.second, v});
  return Json{{"entries", entries}, {"pd", B.projective_dimension()}, {"reg", B.regularity()}};
}

BettiTable betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw std::invalid_argument("Betti JSON needs an \"entries\" array");
  }
  BettiTable B;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("Betti entry must be [i, j, count]");
    B.add(e[0].get<int>(), e[1].get<int>(), e[2].get<long long>());
  }
  if (j.contains("pd") && j["pd"].get<int>() != B.projective_dimension()) {
    throw std::invalid_argument("Betti JSON pd disagrees with its entries");
  }
  if (j.contains("reg") && j["reg"].get<int>() != B.regularity()) {
    throw std::invalid_argument("Betti JSON reg disagrees with its entries");
  }
  return B;
}

std::string tpoly(const std::vector<long long>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    long long c = coeffs[k];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) s += 't';
    if (k >= 2) s += '^' + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json ring_json(const RingPtr& ring) {
  return Json{{"names", ring->names()},
              {"characteristic", ring->field().characteristic()},
              {"order", ring->order().describe(ring->names())}};
}

Json ideal_json(const Ideal& I) {
  return Json{{"ring", ring_json(I.ring())}, {"generators", strings(I.gens())}};
}

Ideal ideal_from_json(const Json& j) {
  const Json& r = j.at("ring");
  auto names = r.at("names").get<std::vector<std::string>>();
  RingPtr ring = Ring::make(names, PrimeField(r.at("characteristic").get<std::uint32_t>()));
  ring = ring->with_order(parse_order(r.at("order").get<std::string>(), names));
  std::vector<Polynomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_polynomial(g.get<std::string>(), ring));
  return Ideal(ring, std::move(gens));
}

Json groebner_json(const GroebnerBasis& G) {
  return Json{{"ring", ring_json(G.ring())},
              {"basis", strings(G.elements())},
              {"size", G.size()},
              {"max_degree", G.max_degree()}};
}

Json hilbert_json(const HilbertSeries& H) {
  return Json{{"numerator", H.numerator},
              {"ambient", H.ambient},
              {"dimension", H.dimension},
              {"h_polynomial", H.h_polynomial},
              {"h_polynomial_text", tpoly(H.h_polynomial)},
              {"multiplicity", H.multiplicity()}};
}

Json classification_json(const ACIClassification& c) {
  Json j{{"tag", to_string(c.tag)},
         {"height", c.height},
         {"beta23", c.beta23},
         {"reason", c.reason}};
  if (c.tag == AciTag::OneLinearSyzygy) {
    j["forms"] = Json{{"x", c.x().to_string()}, {"z", c.z().to_string()}, {"w", c.w().to_string()}};
  }
  if (c.tag == AciTag::TwoLinearSyzygies) {
    Json rows = Json::array();
    for (const auto& row : c.matrix) rows.push_back(strings(row));
    j["matrix"] = rows;
  }
  j["quadrics"] = strings(c.quadrics);
  j["diagnostics"] = c.diagnostics;
  j["input"] = ideal_json(c.input);
  return j;
}

Json certificate_json(const LGCertificate& cert, const LiftReport& report) {
  Json ks = Json::array();
  for (const auto& k : report.k_polynomials) ks.push_back(k);
  return Json{{"source", to_string(cert.source)},
              {"ring", ring_json(cert.ring)},
              {"lifted", strings(cert.lifted.gens())},
              {"linear_forms", strings(cert.linear_forms)},
              {"images", strings(cert.images)},
              {"original", ideal_json(cert.original)},
              {"report",
               {{"gb_max_degree", report.gb_max_degree},
                {"gb_quadratic", report.gb_quadratic},
                {"telescope", report.telescope},
                {"recovers", report.recovers},
                {"k_polynomials", ks},
                {"ok", report.ok()}}}};
}

Json catalog_line(const CatalogEntry& e) {
  Json edges = Json::array();
  for (const auto& [u, v] : e.graph.edges()) edges.push_back({u, v});
  return Json{{"graph", edges}, {"betti", betti_json(e.betti)}, {"hpoly", e.hpoly}, {"aci", e.aci}};
}

MonomialOrder parse_order(const std::string& text, const std::vector<std::string>& names) {
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text == "lex") return MonomialOrder::lex();
  const std::string prefix = "block:";
  if (text.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("unknown order '" + text + "'; expected grevlex, lex or block:VARS");
  }
  std::string body = text.substr(prefix.size());
  OrderKind inner = OrderKind::grevlex;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string in = body.substr(slash + 1);
    if (in == "lex") {
      inner = OrderKind::lex;
    } else if (in != "grevlex") {
      throw std::invalid_argument("unknown inner order '" + in + "'");
    }
    body = body.substr(0, slash);
  }
  std::vector<int> vars;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string name = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("block order names unknown variable '" + name + "'");
    vars.push_back(static_cast<int>(it - names.begin()));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return MonomialOrder::block(vars, inner);
}

}  // namespace aci::format
