#pragma once

#include <map>
#include <vector>

#include "aci/polynomial.hpp"

namespace aci {

/// Minimal monomial generators of a monomial ideal (an antichain under
/// divisibility), sorted descending in grevlex.
class MonomialIdeal {
 public:
  MonomialIdeal(int num_vars, std::vector<Monomial> gens);

  int num_vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

  /// Krull dimension of S/M: size of the largest variable set avoiding the
  /// support of every generator; -1 when M contains 1.
  int dimension() const;

  /// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of S/M.
  std::vector<long long> k_polynomial() const;

 private:
  int n_;
  std::vector<Monomial> gens_;
};

/// Reduced Gröbner basis. The ring carries the order the basis is taken in.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int max_degree() const;
  bool is_unit() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  MonomialIdeal initial_ideal() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Reduced Gröbner basis of I with respect to `order`.
GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order);
/// Uses the order of I's ring.
GroebnerBasis buchberger(const Ideal& I);

MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& order);

/// (I : f) with minimal generators. Throws ComputationError if f = 0.
Ideal colon(const Ideal& I, const Polynomial& f);

/// dim S/I (-1 for the unit ideal).
int krull_dimension(const Ideal& I);
int height(const Ideal& I);

/// True iff f is a nonzerodivisor on S/J, i.e. (J : f) = J.
bool is_regular_on(const Polynomial& f, const Ideal& J);

/// True iff seq[0], seq[1], ... is a regular sequence on S/J.
bool is_regular_sequence(const std::vector<Polynomial>& seq, const Ideal& J);

bool ideal_contains(const Ideal& I, const Polynomial& f);
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideals_equal(const Ideal& I, const Ideal& J);

/// dim (I / S_+ I)_d for each degree d with a nonzero count.
std::map<int, int> minimal_generator_count(const Ideal& I);

/// A minimal generating set of I drawn from its given generators, in
/// increasing degree.
Ideal minimal_generators(const Ideal& I);

}  // namespace aci
