#include "aci/groebner.hpp"

#include <algorithm>
#include <bit>

#include "aci/errors.hpp"
#include "aci/graded_space.hpp"
#include "aci/linalg.hpp"
#include "module_engine.hpp"

namespace aci {
namespace {

using detail::ModuleOrder;
using detail::MTerm;
using detail::MVec;

MVec to_vec(const Polynomial& f) {
  MVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(MTerm{t.mono, 0, t.coeff});
  return v;
}

Polynomial from_vec(const RingPtr& ring, const MVec& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.coeff, t.tot});
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::compare_grevlex(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::compare_grevlex(a, b) > 0;
  });
  return out;
}

// Smallest set of variables meeting every support, by branching on the
// variables of an unhit support of minimum size.
int min_hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, int size,
                    int best) {
  if (size >= best) return best;
  const std::uint32_t* pick = nullptr;
  int pick_bits = 33;
  for (const auto& s : supports) {
    if ((s & chosen) != 0) continue;
    int b = std::popcount(s);
    if (b < pick_bits) {
      pick_bits = b;
      pick = &s;
    }
  }
  if (!pick) return size;
  if (size + 1 >= best) return best;
  std::uint32_t s = *pick;
  while (s != 0) {
    std::uint32_t bit = s & (~s + 1);
    best = std::min(best, min_hitting_set(supports, chosen | bit, size + 1, best));
    s &= s - 1;
  }
  return best;
}

void k_poly_rec(std::vector<Monomial> gens, int shift, int sign, std::vector<long long>& acc) {
  // K(S/(M' + m)) = K(S/M') - t^deg(m) K(S/(M' : m)).
  auto add = [&](int deg, long long c) {
    if (static_cast<int>(acc.size()) <= deg) acc.resize(deg + 1, 0);
    acc[deg] += c;
  };
  while (true) {
    if (gens.empty()) {
      add(shift, sign);
      return;
    }
    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (!coprime(gens[i], gens[j])) {
          pairwise_coprime = false;
          break;
        }
      }
    }
    if (pairwise_coprime) {
      // Product of (1 - t^deg) over the generators.
      std::vector<long long> prod{1};
      for (const auto& m : gens) {
        std::vector<long long> next(prod.size() + m.degree(), 0);
        for (std::size_t k = 0; k < prod.size(); ++k) {
          next[k] += prod[k];
          next[k + m.degree()] -= prod[k];
        }
        prod = std::move(next);
      }
      for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] != 0) add(shift + static_cast<int>(k), sign * prod[k]);
      }
      return;
    }
    Monomial m = gens.back();
    gens.pop_back();
    std::vector<Monomial> quotient;
    quotient.reserve(gens.size());
    for (const auto& k : gens) quotient.push_back(gcd(k, m).cofactor_in(k));
    k_poly_rec(minimalize_monomials(std::move(quotient)), shift + m.degree(), -sign, acc);
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> gens)
    : n_(num_vars), gens_(minimalize_monomials(std::move(gens))) {}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

int MonomialIdeal::dimension() const {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens_) {
    if (g.is_one()) return -1;
    supports.push_back(g.support());
  }
  return n_ - min_hitting_set(supports, 0, 0, n_ + 1);
}

std::vector<long long> MonomialIdeal::k_polynomial() const {
  std::vector<long long> acc;
  k_poly_rec(gens_, 0, 1, acc);
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  for (auto& e : elements_) e = e.in_ring(ring_);
}

int GroebnerBasis::max_degree() const {
  int d = -1;
  for (const auto& e : elements_) d = std::max(d, e.degree());
  return d;
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  const PrimeField& F = ring_->field();
  Polynomial g = f.in_ring(ring_);
  std::vector<Term> rem;
  while (!g.is_zero()) {
    const Term lt = g.lead();
    const Polynomial* div = nullptr;
    for (const auto& e : elements_) {
      if (e.lead_monomial().divides(lt.mono)) {
        div = &e;
        break;
      }
    }
    if (!div) {
      rem.push_back(lt);
      g -= Polynomial::term(ring_, lt.coeff, lt.mono);
      continue;
    }
    std::uint32_t c = F.div(lt.coeff, div->lead_coeff());
    g -= div->times_term(c, div->lead_monomial().cofactor_in(lt.mono));
  }
  return Polynomial::from_terms(ring_, std::move(rem));
}

MonomialIdeal GroebnerBasis::initial_ideal() const {
  std::vector<Monomial> leads;
  for (const auto& e : elements_) leads.push_back(e.lead_monomial());
  return MonomialIdeal(ring_->num_vars(), std::move(leads));
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order) {
  RingPtr ring = I.ring()->order() == order ? I.ring() : I.ring()->with_order(order);
  std::vector<MVec> gens;
  for (const auto& g : I.gens()) gens.push_back(to_vec(g.in_ring(ring)));
  auto basis = detail::groebner_basis(std::move(gens), ModuleOrder::plain(order, 1), ring->field());
  std::vector<Polynomial> elements;
  for (const auto& v : basis) elements.push_back(from_vec(ring, v));
  return GroebnerBasis(ring, std::move(elements));
}

GroebnerBasis buchberger(const Ideal& I) { return buchberger(I, I.ring()->order()); }

MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& order) {
  return buchberger(I, order).initial_ideal();
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw ComputationError("colon by the zero polynomial");
  if (!f.is_homogeneous()) throw ComputationError("colon needs a homogeneous polynomial");
  const RingPtr& ring = I.ring();
  if (I.is_zero()) return Ideal(ring);
  Polynomial fr = f.in_ring(ring);

  // Submodule of S^2 generated by (g_i, 0) and (f, 1); component 0 is
  // eliminated, and the second coordinates of what survives generate (I : f).
  Monomial shift1 = Monomial::variable(0, fr.degree());
  ModuleOrder order(ring->order(), {Monomial(), shift1}, {1, 0});
  std::vector<MVec> gens;
  for (const auto& g : I.gens()) gens.push_back(to_vec(g));
  MVec fv = to_vec(fr);
  fv.push_back(MTerm{shift1, 1, 1});
  gens.push_back(std::move(fv));

  auto basis = detail::groebner_basis(std::move(gens), order, ring->field());
  std::vector<Polynomial> out;
  for (const auto& v : basis) {
    if (v.front().comp != 1) continue;
    std::vector<Term> terms;
    for (const auto& t : v) terms.push_back(Term{t.coeff, shift1.cofactor_in(t.tot)});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return minimal_generators(Ideal(ring, std::move(out)));
}

int krull_dimension(const Ideal& I) {
  if (I.is_zero()) return I.ring()->num_vars();
  return buchberger(I, MonomialOrder::grevlex()).initial_ideal().dimension();
}

int height(const Ideal& I) {
  int d = krull_dimension(I);
  return d < 0 ? I.ring()->num_vars() + 1 : I.ring()->num_vars() - d;
}

bool is_regular_on(const Polynomial& f, const Ideal& J) {
  if (f.is_zero()) return false;
  if (J.is_zero()) return true;
  Ideal q = colon(J, f);
  return ideal_contains(J, q);
}

bool is_regular_sequence(const std::vector<Polynomial>& seq, const Ideal& J) {
  Ideal cur = J;
  for (const auto& f : seq) {
    if (!is_regular_on(f, cur)) return false;
    cur = cur.plus(f);
  }
  return true;
}

bool ideal_contains(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  return buchberger(I).contains(f);
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) return true;
  if (I.is_zero()) return false;
  GroebnerBasis G = buchberger(I);
  for (const auto& g : J.gens()) {
    if (!G.contains(g)) return false;
  }
  return true;
}

bool ideals_equal(const Ideal& I, const Ideal& J) {
  return ideal_contains(I, J) && ideal_contains(J, I);
}

std::map<int, int> minimal_generator_count(const Ideal& I) {
  Ideal m = minimal_generators(I);
  std::map<int, int> out;
  for (const auto& g : m.gens()) ++out[g.degree()];
  return out;
}

Ideal minimal_generators(const Ideal& I) {
  const RingPtr& ring = I.ring();
  const int n = ring->num_vars();
  std::vector<Polynomial> gens = I.gens();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Polynomial> kept;
  std::size_t i = 0;
  while (i < gens.size()) {
    int d = gens[i].degree();
    GradedPiece piece(n, d);
    EchelonBasis span(piece.dimension(), ring->field());
    // (S_+ I)_d is spanned by monomial multiples of the kept lower-degree generators.
    for (const auto& k : kept) {
      int e = d - k.degree();
      if (e <= 0) continue;
      for (const auto& m : monomials_of_degree(n, e)) {
        span.add(piece.coordinates(k.times_term(1, m)));
      }
    }
    for (; i < gens.size() && gens[i].degree() == d; ++i) {
      if (span.add(piece.coordinates(gens[i]))) kept.push_back(gens[i]);
    }
  }
  return Ideal(ring, std::move(kept));
}

}  // namespace aci
