#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aci/edge_ideals.hpp"
#include "aci/groebner.hpp"
#include "aci/koszul_aci.hpp"
#include "aci/resolution.hpp"

namespace aci::format {

using Json = nlohmann::ordered_json;

enum class CellStyle { dot, dash };

/// Column i, row j holds beta_{i,i+j}; zero cells print as "·" or "--".
std::string betti_ascii(const BettiTable& B, CellStyle style = CellStyle::dot);

/// {"entries": [[i, j, beta_ij], ...], "pd": .., "reg": ..}
Json betti_json(const BettiTable& B);
/// Throws std::invalid_argument on a malformed document.
BettiTable betti_from_json(const Json& j);

/// "1+2t-2t^2", or "0" for the zero polynomial.
std::string tpoly(const std::vector<long long>& coeffs);

std::vector<std::string> strings(const std::vector<Polynomial>& ps);

/// {"names": [...], "characteristic": p, "order": "grevlex"}
Json ring_json(const RingPtr& ring);
/// Generators as strings together with their ring.
Json ideal_json(const Ideal& I);
/// Inverse of ideal_json.
Ideal ideal_from_json(const Json& j);

Json groebner_json(const GroebnerBasis& G);
Json hilbert_json(const HilbertSeries& H);
Json classification_json(const ACIClassification& c);
Json certificate_json(const LGCertificate& cert, const LiftReport& report);
Json catalog_line(const CatalogEntry& e);

/// grevlex | lex | block:v1,v2,... (block variables are the greater block,
/// compared by grevlex inside each block).
MonomialOrder parse_order(const std::string& text, const std::vector<std::string>& names);

}  // namespace aci::format
