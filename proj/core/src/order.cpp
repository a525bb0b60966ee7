#include "aci/order.hpp"

#include <stdexcept>

namespace aci {
namespace {

Monomial restrict_to(const Monomial& m, std::uint32_t mask) {
  std::array<int, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) {
    if (mask & (1u << i)) e[i] = m[i];
  }
  return Monomial::from_exponents(e);
}

int compare_inner(OrderKind inner, const Monomial& a, const Monomial& b) {
  return inner == OrderKind::lex ? MonomialOrder::compare_lex(a, b)
                                 : MonomialOrder::compare_grevlex(a, b);
}

}  // namespace

MonomialOrder MonomialOrder::block(const std::vector<int>& greater_vars, OrderKind inner) {
  if (inner == OrderKind::block) throw std::invalid_argument("block order needs grevlex or lex inside");
  MonomialOrder o(OrderKind::block);
  o.inner_ = inner;
  for (int v : greater_vars) {
    if (v < 0 || v >= kMaxVars) throw std::out_of_range("block variable index");
    o.mask_ |= (1u << v);
  }
  return o;
}

int MonomialOrder::compare_block(const Monomial& a, const Monomial& b) const {
  int c = compare_inner(inner_, restrict_to(a, mask_), restrict_to(b, mask_));
  if (c != 0) return c;
  return compare_inner(inner_, restrict_to(a, ~mask_), restrict_to(b, ~mask_));
}

std::string MonomialOrder::describe(const std::vector<std::string>& names) const {
  switch (kind_) {
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::block: {
      std::string s = "block:";
      bool first = true;
      for (int i = 0; i < kMaxVars; ++i) {
        if (!(mask_ & (1u << i))) continue;
        if (!first) s += ",";
        s += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
        first = false;
      }
      if (inner_ == OrderKind::lex) s += "/lex";
      return s;
    }
  }
  return "?";
}

MonomialOrder MonomialOrder::without_variable(int index) const {
  MonomialOrder o = *this;
  if (kind_ != OrderKind::block) return o;
  std::uint32_t low = mask_ & ((1u << index) - 1u);
  std::uint32_t high = index + 1 < 32 ? (mask_ >> (index + 1)) << index : 0u;
  o.mask_ = low | high;
  if (o.mask_ == 0) {
    o.kind_ = inner_;
  }
  return o;
}

}  // namespace aci
