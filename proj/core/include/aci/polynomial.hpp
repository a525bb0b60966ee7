#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aci/monomial.hpp"
#include "aci/ring.hpp"

namespace aci {

struct Term {
  std::uint32_t coeff;
  Monomial mono;
};

/// Sparse polynomial over a Ring. Terms are kept strictly descending in the
/// ring's order with nonzero coefficients and no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, std::uint32_t coeff, const Monomial& m);
  /// Sorts and combines arbitrary terms (coefficients already reduced).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear_form(RingPtr ring, std::span<const std::uint32_t> coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  std::uint32_t lead_coeff() const { return terms_.front().coeff; }

  /// Largest total degree of a term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  /// Coefficient of a monomial (0 if absent).
  std::uint32_t coefficient(const Monomial& m) const;

  /// Coefficients of x_0..x_{n-1}; requires a homogeneous linear form (or zero).
  std::vector<std::uint32_t> linear_coefficients() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(std::uint32_t c, const Monomial& m) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// Same polynomial re-sorted in another ring with the same variables.
  Polynomial in_ring(const RingPtr& other) const;

  /// Substitutes images[i] for variable i; images live in the target ring.
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Homogeneous ideal given by a list of generators (zeros are dropped).
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  Ideal in_ring(const RingPtr& other) const;
  Ideal plus(const Ideal& o) const;
  Ideal plus(const Polynomial& f) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// All monomials of degree d in the first n variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace aci
