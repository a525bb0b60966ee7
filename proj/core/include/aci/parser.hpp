#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aci/polynomial.hpp"

namespace aci {

/// Parses one polynomial over `ring`. Grammar:
///
///   poly   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-')* power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' poly ')'
///
/// Whitespace is insignificant; integer literals are reduced mod p.
Polynomial parse_polynomial(std::string_view source, const RingPtr& ring);

/// Contents of an input file:
///
///   ring F32003[x,y,z,w];       (or "ring Fp[...]" to take p from the caller)
///   ideal (x*y, x*w, z^2);
///
/// `#` starts a comment running to the end of the line.
struct Document {
  RingPtr ring;
  std::optional<Ideal> ideal;
};

Document parse_document(std::string_view text,
                        std::uint32_t default_characteristic = PrimeField::kDefaultCharacteristic);

/// Renders a ring/ideal pair in the input grammar; parse_document inverts it.
std::string format_document(const Ideal& ideal);

}  // namespace aci
