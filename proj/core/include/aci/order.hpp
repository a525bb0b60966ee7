#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aci/monomial.hpp"

namespace aci {

enum class OrderKind { grevlex, lex, block };

/// A global multiplicative monomial order. Variables are ranked by their
/// position in the ring: variable 0 is the largest.
///
/// A block order compares the restriction to a designated "greater" block
/// first and the restriction to the remaining variables second, both with
/// the inner order (grevlex or lex). Any monomial with a nonconstant
/// greater-block part therefore exceeds every monomial in the other
/// variables, which is the elimination property used by lifting.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder block(const std::vector<int>& greater_vars,
                             OrderKind inner = OrderKind::grevlex);

  OrderKind kind() const { return kind_; }
  OrderKind inner() const { return inner_; }
  std::uint32_t block_mask() const { return mask_; }

  /// Returns -1, 0 or 1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::grevlex:
        return compare_grevlex(a, b);
      case OrderKind::lex:
        return compare_lex(a, b);
      case OrderKind::block:
        return compare_block(a, b);
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Human-readable form, e.g. "grevlex" or "block:y1,y2".
  std::string describe(const std::vector<std::string>& names) const;

  /// Same order after a variable is deleted and later indices shift down.
  MonomialOrder without_variable(int index) const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && inner_ == o.inner_ && mask_ == o.mask_;
  }

  static int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    int i = a.last_difference(b);
    if (i < 0) return 0;
    return a[i] < b[i] ? 1 : -1;
  }

  static int compare_lex(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

 private:
  explicit MonomialOrder(OrderKind k) : kind_(k), inner_(k) {}
  int compare_block(const Monomial& a, const Monomial& b) const;

  OrderKind kind_ = OrderKind::grevlex;
  OrderKind inner_ = OrderKind::grevlex;
  std::uint32_t mask_ = 0;
};

}  // namespace aci
