#pragma once

#include <unordered_map>
#include <vector>

#include "aci/polynomial.hpp"

namespace aci {

/// Coordinates on the degree-d part S_d of a polynomial ring, with the
/// monomials of degree d in descending grevlex as the basis.
class GradedPiece {
 public:
  GradedPiece(int num_vars, int degree);

  int degree() const { return degree_; }
  std::size_t dimension() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t index_of(const Monomial& m) const { return index_.at(m); }

  /// Coefficient vector of a homogeneous polynomial of this degree.
  std::vector<std::uint32_t> coordinates(const Polynomial& f) const;
  Polynomial polynomial(const RingPtr& ring, const std::vector<std::uint32_t>& coords) const;

 private:
  int degree_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace aci
