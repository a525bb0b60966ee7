#include "aci/graded_space.hpp"

#include <stdexcept>

namespace aci {

GradedPiece::GradedPiece(int num_vars, int degree)
    : degree_(degree), monos_(monomials_of_degree(num_vars, degree)) {
  index_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
}

std::vector<std::uint32_t> GradedPiece::coordinates(const Polynomial& f) const {
  std::vector<std::uint32_t> v(monos_.size(), 0);
  for (const auto& t : f.terms()) {
    auto it = index_.find(t.mono);
    if (it == index_.end()) {
      throw std::invalid_argument("polynomial is not homogeneous of degree " +
                                  std::to_string(degree_));
    }
    v[it->second] = t.coeff;
  }
  return v;
}

Polynomial GradedPiece::polynomial(const RingPtr& ring,
                                   const std::vector<std::uint32_t>& coords) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) terms.push_back(Term{coords[i], monos_[i]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace aci
