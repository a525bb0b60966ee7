#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aci/field.hpp"
#include "aci/order.hpp"

namespace aci {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Standard graded polynomial ring F_p[x_0, ..., x_{n-1}] together with the
/// monomial order its polynomials are sorted by.
class Ring {
 public:
  Ring(std::vector<std::string> names, PrimeField field,
       MonomialOrder order = MonomialOrder::grevlex());

  static RingPtr make(std::vector<std::string> names,
                      PrimeField field = PrimeField(),
                      MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const Ring>(std::move(names), field, order);
  }

  /// Ring with variables x1..xn (or another prefix).
  static RingPtr standard(int n, PrimeField field = PrimeField(),
                          const std::string& prefix = "x");

  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<int> index_of(const std::string& name) const;

  /// Same variables and field, different order.
  RingPtr with_order(const MonomialOrder& order) const {
    return make(names_, field_, order);
  }

  /// "F32003[x,y,z] grevlex"
  std::string describe() const;

  bool operator==(const Ring& o) const {
    return names_ == o.names_ && field_ == o.field_ && order_ == o.order_;
  }
  /// Same variables and field; order may differ.
  bool same_variables(const Ring& o) const {
    return names_ == o.names_ && field_ == o.field_;
  }

 private:
  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace aci
