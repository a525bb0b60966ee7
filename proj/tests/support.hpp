#pragma once

#include <random>
#include <string>
#include <vector>

#include "aci/parser.hpp"
#include "aci/polynomial.hpp"

namespace aci::testing {

inline RingPtr ring_of(std::vector<std::string> names,
                       MonomialOrder order = MonomialOrder::grevlex()) {
  return Ring::make(std::move(names), PrimeField(), order);
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return Ideal(r, std::move(ps));
}

/// Random homogeneous polynomial of degree d with about `terms` terms.
inline Polynomial random_form(const RingPtr& r, int d, int terms, std::mt19937_64& rng) {
  auto monos = monomials_of_degree(r->num_vars(), d);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    const auto& m = monos[rng() % monos.size()];
    ts.push_back(Term{static_cast<std::uint32_t>(rng() % r->field().characteristic()), m});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

/// Random sparse polynomial mixing degrees 0..max_deg.
inline Polynomial random_poly(const RingPtr& r, int max_deg, int terms, std::mt19937_64& rng) {
  Polynomial f(r);
  for (int k = 0; k < terms; ++k) {
    f += random_form(r, static_cast<int>(rng() % (max_deg + 1)), 1, rng);
  }
  return f;
}

}  // namespace aci::testing
