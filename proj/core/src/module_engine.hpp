#pragma once

// Internal vectors in a graded free module S^r with a monomial order that may
// be shifted per component (Schreyer orders) and blocked by component
// (position-over-term elimination). Shared by the ideal Gröbner code, colon
// ideals and the resolution frame builder.

#include <cstdint>
#include <vector>

#include "aci/field.hpp"
#include "aci/monomial.hpp"
#include "aci/order.hpp"

namespace aci::detail {

/// coeff * m * e_comp, stored with its total monomial tot = m * shift(comp).
struct MTerm {
  Monomial tot;
  std::uint32_t comp;
  std::uint32_t coeff;
};

using MVec = std::vector<MTerm>;

class ModuleOrder {
 public:
  ModuleOrder(MonomialOrder base, std::vector<Monomial> shifts, std::vector<int> blocks = {})
      : base_(base), shifts_(std::move(shifts)), blocks_(std::move(blocks)) {}

  /// Unshifted order on S^rank, ties broken by component.
  static ModuleOrder plain(MonomialOrder base, std::size_t rank) {
    return ModuleOrder(base, std::vector<Monomial>(rank));
  }

  std::size_t rank() const { return shifts_.size(); }
  const Monomial& shift(std::uint32_t comp) const { return shifts_[comp]; }
  const MonomialOrder& base() const { return base_; }

  int compare(const MTerm& a, const MTerm& b) const {
    if (!blocks_.empty() && blocks_[a.comp] != blocks_[b.comp]) {
      return blocks_[a.comp] > blocks_[b.comp] ? 1 : -1;
    }
    int c = base_.compare(a.tot, b.tot);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  /// Term m * e_comp with its shifted total monomial.
  MTerm make(std::uint32_t coeff, const Monomial& m, std::uint32_t comp) const {
    return MTerm{m * shifts_[comp], comp, coeff};
  }

  /// The unshifted monomial part of a term.
  Monomial monomial_of(const MTerm& t) const { return shifts_[t.comp].cofactor_in(t.tot); }

 private:
  MonomialOrder base_;
  std::vector<Monomial> shifts_;
  std::vector<int> blocks_;
};

/// Sorts and merges arbitrary terms into a normalized vector.
void normalize(MVec& v, const ModuleOrder& order, const PrimeField& F);

/// a[a_start..] + c * m * b[b_start..] (m multiplies the total monomials of b).
MVec add_multiple(const MVec& a, std::size_t a_start, std::uint32_t c, const Monomial& m,
                  const MVec& b, std::size_t b_start, const ModuleOrder& order,
                  const PrimeField& F);

void make_monic(MVec& v, const PrimeField& F);

/// Divisor lookup over a growing list of leading terms.
class LeadIndex {
 public:
  void add(const MTerm& lead) {
    leads_.push_back(lead);
    masks_.push_back(lead.tot.support());
    active_.push_back(true);
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  bool active(std::size_t i) const { return active_[i]; }
  std::size_t size() const { return leads_.size(); }
  const MTerm& lead(std::size_t i) const { return leads_[i]; }

  /// First active entry whose lead divides t in the same component, or -1.
  long find_divisor(const MTerm& t) const {
    std::uint32_t mask = t.tot.support();
    for (std::size_t i = 0; i < leads_.size(); ++i) {
      if (!active_[i] || leads_[i].comp != t.comp) continue;
      if ((masks_[i] & ~mask) != 0) continue;
      if (leads_[i].tot.divides(t.tot)) return static_cast<long>(i);
    }
    return -1;
  }

 private:
  std::vector<MTerm> leads_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
};

/// Reduces v by basis elements (indexed in `index`). With `full` every term is
/// reduced, otherwise stops at the first irreducible leading term. When
/// `quotients` is given, each step c * m * basis[i] subtracted is recorded as
/// the term (c, m * shift_of_basis(i)) in component i.
struct Quotient {
  std::uint32_t coeff;
  Monomial mono;
  std::size_t index;
};

MVec reduce(MVec v, const std::vector<MVec>& basis, const LeadIndex& index,
            const ModuleOrder& order, const PrimeField& F, bool full,
            std::vector<Quotient>* quotients = nullptr);

/// Reduced Gröbner basis of the submodule generated by homogeneous vectors
/// (degree = degree of each term's total monomial). Output elements are monic,
/// interreduced, sorted by increasing degree then increasing leading term.
std::vector<MVec> groebner_basis(std::vector<MVec> gens, const ModuleOrder& order,
                                 const PrimeField& F);

}  // namespace aci::detail
