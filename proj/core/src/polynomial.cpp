#include "aci/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "aci/errors.hpp"

namespace aci {
namespace {

// Sorts descending by the ring order and merges equal monomials.
void normalize(const Ring& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  const auto& F = ring.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::uint32_t c = 0;
    std::size_t j = i;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c = F.add(c, terms[j].coeff);
      ++j;
    }
    if (c != 0) terms[out++] = Term{c, terms[i].mono};
    i = j;
  }
  terms.resize(out);
}

std::string monomial_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(ring);
  std::uint32_t v = ring->field().from_int(c);
  if (v != 0) p.terms_.push_back(Term{v, Monomial()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->num_vars()) throw std::out_of_range("variable index");
  Polynomial p(ring);
  p.terms_.push_back(Term{1, Monomial::variable(index)});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, std::uint32_t coeff, const Monomial& m) {
  Polynomial p(ring);
  coeff %= ring->field().characteristic();
  if (coeff != 0) p.terms_.push_back(Term{coeff, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(ring);
  for (auto& t : terms) t.coeff %= ring->field().characteristic();
  normalize(*ring, terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::linear_form(RingPtr ring, std::span<const std::uint32_t> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] % ring->field().characteristic() != 0) {
      terms.push_back(Term{coeffs[i], Monomial::variable(static_cast<int>(i))});
    }
  }
  return from_terms(std::move(ring), std::move(terms));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::uint32_t Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

std::vector<std::uint32_t> Polynomial::linear_coefficients() const {
  std::vector<std::uint32_t> out(ring_->num_vars(), 0);
  for (const auto& t : terms_) {
    if (t.mono.degree() != 1) throw ComputationError("not a linear form: " + to_string());
    for (int i = 0; i < ring_->num_vars(); ++i) {
      if (t.mono[i] == 1) out[i] = t.coeff;
    }
  }
  return out;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) {
    throw std::invalid_argument("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  const auto& F = ring_->field();
  for (auto& t : r.terms_) t.coeff = F.neg(t.coeff);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  const auto& order = ring_->order();
  const auto& F = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = order.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.push_back(Term{s, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].coeff, b.terms_[0].mono);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].coeff, a.terms_[0].mono);
  const auto& F = a.ring_->field();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back(Term{F.mul(s.coeff, t.coeff), s.mono * t.mono});
  }
  Polynomial r(a.ring_);
  normalize(*a.ring_, prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(std::uint32_t c, const Monomial& m) const {
  const auto& F = ring_->field();
  Polynomial r(ring_);
  c %= F.characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{F.mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
  if (same_ring(ring_, other)) {
    Polynomial r(*this);
    r.ring_ = other;
    return r;
  }
  if (!ring_->same_variables(*other)) {
    throw std::invalid_argument("cannot move a polynomial between rings with different variables");
  }
  return from_terms(other, terms_);
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->num_vars()) {
    throw std::invalid_argument("substitution needs one image per variable");
  }
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, 1).scaled(t.coeff);
    for (int i = 0; i < ring_->num_vars(); ++i) {
      for (int e = 0; e < t.mono[i]; ++e) prod = prod * images[i];
    }
    result += prod;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_->field();
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    std::int64_t c = F.to_symmetric(terms_[k].coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (k == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? "-" : "+";
    }
    std::string mono = monomial_string(*ring_, terms_[k].mono);
    if (mono.empty()) {
      s += std::to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += std::to_string(mag) + "*" + mono;
    }
  }
  return s;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_variables(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  if (same_ring(ring_, o.ring_)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
    }
    return true;
  }
  return *this == o.in_ring(ring_);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring_)) {
      if (!g.ring()->same_variables(*ring_)) {
        throw std::invalid_argument("ideal generator lives in a different ring");
      }
      g = g.in_ring(ring_);
    }
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw ComputationError("ideal generators must be homogeneous: " + g.to_string());
    }
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::in_ring(const RingPtr& other) const {
  std::vector<Polynomial> g;
  g.reserve(gens_.size());
  for (const auto& p : gens_) g.push_back(p.in_ring(other));
  return Ideal(other, std::move(g));
}

Ideal Ideal::plus(const Ideal& o) const {
  std::vector<Polynomial> g = gens_;
  for (const auto& p : o.gens_) g.push_back(p.in_ring(ring_));
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::plus(const Polynomial& f) const {
  std::vector<Polynomial> g = gens_;
  g.push_back(f.in_ring(ring_));
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || n <= 0) return out;
  std::array<int, kMaxVars> e{};
  // Enumerate compositions of d into n parts, first variable largest first.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      e[var] = remaining;
      out.push_back(Monomial::from_exponents(std::span<const int>(e.data(), n)));
      e[var] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::compare_grevlex(a, b) > 0;
  });
  return out;
}

}  // namespace aci
