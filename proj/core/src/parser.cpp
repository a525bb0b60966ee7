#include "aci/parser.hpp"

#include <cctype>
#include <charconv>

#include "aci/errors.hpp"

namespace aci {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    if (!at_identifier()) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      advance();
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  /// Reads a nonnegative decimal literal, reducing it mod `modulus` when that
  /// is nonzero so arbitrarily long literals are accepted.
  std::uint64_t integer(std::uint64_t modulus = 0) {
    if (!at_digit()) fail("expected integer");
    std::uint64_t v = 0;
    bool overflow = false;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(src_[pos_] - '0');
      if (modulus != 0) {
        v = (v * 10 + d) % modulus;
      } else {
        if (v > (UINT64_MAX - d) / 10) overflow = true;
        v = v * 10 + d;
      }
      advance();
    }
    if (overflow) fail("integer literal too large");
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_space();
    std::string found = pos_ < src_.size() ? std::string("'") + src_[pos_] + "'" : "end of input";
    throw ParseError(msg + ", found " + found, line_, col_);
  }

  struct Position {
    std::size_t line, column;
  };

  Position position() {
    skip_space();
    return Position{line_, col_};
  }

  [[noreturn]] void fail_at(const Position& at, const std::string& msg) {
    throw ParseError(msg, at.line, at.column);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, RingPtr ring) : lex_(lex), ring_(std::move(ring)) {}

  Polynomial poly() {
    Polynomial acc = term();
    while (true) {
      if (lex_.accept('+')) {
        acc += term();
      } else if (lex_.accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

 private:
  Polynomial term() {
    Polynomial acc = unary();
    while (lex_.accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    bool negate = false;
    while (true) {
      if (lex_.accept('-')) {
        negate = !negate;
      } else if (!lex_.accept('+')) {
        break;
      }
    }
    Polynomial p = power();
    return negate ? -p : p;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!lex_.accept('^')) return base;
    auto at = lex_.position();
    std::uint64_t e = lex_.integer();
    if (e > static_cast<std::uint64_t>(kMaxExponent)) lex_.fail_at(at, "exponent too large");
    Polynomial r = Polynomial::constant(ring_, 1);
    for (std::uint64_t k = 0; k < e; ++k) r = r * base;
    return r;
  }

  Polynomial atom() {
    if (lex_.accept('(')) {
      Polynomial p = poly();
      lex_.expect(')');
      return p;
    }
    if (lex_.at_digit()) {
      std::uint64_t v = lex_.integer(ring_->field().characteristic());
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (lex_.at_identifier()) {
      auto at = lex_.position();
      std::string name = lex_.identifier();
      auto idx = ring_->index_of(name);
      if (!idx) lex_.fail_at(at, "unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    lex_.fail("expected a coefficient, variable or '('");
  }

  Lexer& lex_;
  RingPtr ring_;
};

std::uint32_t parse_field_name(Lexer& lex, const Lexer::Position& at, const std::string& name,
                               std::uint32_t default_characteristic) {
  // Accepted spellings: "Fp" (caller's characteristic) or "F<digits>".
  if (name == "Fp") return default_characteristic;
  if (name.size() >= 2 && name[0] == 'F') {
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
    if (ec == std::errc() && ptr == name.data() + name.size() && p < (1ull << 31) &&
        PrimeField::is_prime(p)) {
      return static_cast<std::uint32_t>(p);
    }
  }
  lex.fail_at(at, "expected a field 'Fp' or 'F<prime>', got '" + name + "'");
}

}  // namespace

Polynomial parse_polynomial(std::string_view source, const RingPtr& ring) {
  Lexer lex(source);
  PolyParser parser(lex, ring);
  Polynomial p = parser.poly();
  if (!lex.at_end()) lex.fail("unexpected trailing input");
  return p;
}

Document parse_document(std::string_view text, std::uint32_t default_characteristic) {
  Lexer lex(text);
  Document doc;
  std::string kw = lex.identifier();
  if (kw != "ring") lex.fail("expected 'ring'");
  auto field_at = lex.position();
  std::string field_name = lex.identifier();
  std::uint32_t p = parse_field_name(lex, field_at, field_name, default_characteristic);
  lex.expect('[');
  std::vector<std::string> names;
  do {
    names.push_back(lex.identifier());
  } while (lex.accept(','));
  lex.expect(']');
  lex.expect(';');
  try {
    doc.ring = Ring::make(names, PrimeField(p));
  } catch (const std::invalid_argument& e) {
    lex.fail(e.what());
  }

  if (lex.at_end()) return doc;
  kw = lex.identifier();
  if (kw != "ideal") lex.fail("expected 'ideal'");
  lex.expect('(');
  std::vector<Polynomial> gens;
  if (lex.peek() == ')') lex.fail("an ideal needs at least one generator");
  PolyParser parser(lex, doc.ring);
  do {
    gens.push_back(parser.poly());
  } while (lex.accept(','));
  lex.expect(')');
  lex.expect(';');
  if (!lex.at_end()) lex.fail("unexpected trailing input");
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) {
      throw ComputationError("ideal generators must be homogeneous: " + g.to_string());
    }
  }
  doc.ideal = Ideal(doc.ring, std::move(gens));
  return doc;
}

std::string format_document(const Ideal& ideal) {
  const Ring& r = *ideal.ring();
  std::string s = "ring F" + std::to_string(r.field().characteristic()) + "[";
  for (int i = 0; i < r.num_vars(); ++i) {
    if (i) s += ",";
    s += r.name(i);
  }
  s += "];\nideal (";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) s += ", ";
    s += ideal.gens()[i].to_string();
  }
  return s + ");\n";
}

}  // namespace aci
