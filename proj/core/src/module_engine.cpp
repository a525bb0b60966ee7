#include "module_engine.hpp"

#include <algorithm>
#include <climits>
#include <tuple>
#include <utility>

#include "aci/errors.hpp"

namespace aci::detail {

void normalize(MVec& v, const ModuleOrder& order, const PrimeField& F) {
  std::sort(v.begin(), v.end(),
            [&](const MTerm& a, const MTerm& b) { return order.compare(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::uint32_t c = 0;
    std::size_t j = i;
    while (j < v.size() && v[j].comp == v[i].comp && v[j].tot == v[i].tot) {
      c = F.add(c, v[j].coeff);
      ++j;
    }
    if (c != 0) {
      v[out] = v[i];
      v[out].coeff = c;
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

MVec add_multiple(const MVec& a, std::size_t a_start, std::uint32_t c, const Monomial& m,
                  const MVec& b, std::size_t b_start, const ModuleOrder& order,
                  const PrimeField& F) {
  MVec out;
  out.reserve(a.size() - a_start + b.size() - b_start);
  std::size_t i = a_start, j = b_start;
  while (i < a.size() && j < b.size()) {
    MTerm t{b[j].tot * m, b[j].comp, F.mul(b[j].coeff, c)};
    int cmp = order.compare(a[i], t);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(t);
      ++j;
    } else {
      std::uint32_t s = F.add(a[i].coeff, t.coeff);
      if (s != 0) {
        t.coeff = s;
        out.push_back(t);
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(MTerm{b[j].tot * m, b[j].comp, F.mul(b[j].coeff, c)});
  return out;
}

void make_monic(MVec& v, const PrimeField& F) {
  if (v.empty() || v.front().coeff == 1) return;
  std::uint32_t inv = F.inv(v.front().coeff);
  for (auto& t : v) t.coeff = F.mul(t.coeff, inv);
}

namespace {

// Sparse accumulator: open-addressing table of (total monomial, component)
// with coefficients, plus a max-heap of slot indices. Within one reduction
// every added term is smaller than the last popped one, so popped slots are
// never looked up again and need no erasure.
class Accumulator {
 public:
  Accumulator(const ModuleOrder& order, const PrimeField& F, std::size_t hint)
      : order_(order), F_(F) {
    std::size_t cap = 64;
    while (cap < 4 * hint) cap <<= 1;
    index_.assign(cap, kEmpty);
    slots_.reserve(cap / 2);
  }

  void add(const Monomial& tot, std::uint32_t comp, std::uint32_t c) {
    if (c == 0) return;
    std::size_t mask = index_.size() - 1;
    std::size_t h = (tot.hash() ^ (comp * 0x9E3779B9u)) & mask;
    while (true) {
      std::uint32_t s = index_[h];
      if (s == kEmpty) break;
      MTerm& t = slots_[s];
      if (t.comp == comp && t.tot == tot) {
        t.coeff = F_.add(t.coeff, c);
        return;
      }
      h = (h + 1) & mask;
    }
    auto s = static_cast<std::uint32_t>(slots_.size());
    index_[h] = s;
    slots_.push_back(MTerm{tot, comp, c});
    heap_.push_back(s);
    std::push_heap(heap_.begin(), heap_.end(), Less{this});
    if (2 * slots_.size() > index_.size()) grow();
  }

  /// Removes and returns the largest term with a nonzero coefficient.
  bool pop(MTerm& out) {
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), Less{this});
      std::uint32_t s = heap_.back();
      heap_.pop_back();
      if (slots_[s].coeff != 0) {
        out = slots_[s];
        return true;
      }
    }
    return false;
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  struct Less {
    const Accumulator* acc;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return acc->order_.compare(acc->slots_[a], acc->slots_[b]) < 0;
    }
  };

  void grow() {
    index_.assign(index_.size() * 2, kEmpty);
    std::size_t mask = index_.size() - 1;
    for (std::uint32_t s = 0; s < slots_.size(); ++s) {
      const MTerm& t = slots_[s];
      std::size_t h = (t.tot.hash() ^ (t.comp * 0x9E3779B9u)) & mask;
      while (index_[h] != kEmpty) h = (h + 1) & mask;
      index_[h] = s;
    }
  }

  const ModuleOrder& order_;
  const PrimeField& F_;
  std::vector<std::uint32_t> index_;
  MVec slots_;
  std::vector<std::uint32_t> heap_;
};

}  // namespace

MVec reduce(MVec v, const std::vector<MVec>& basis, const LeadIndex& index,
            const ModuleOrder& order, const PrimeField& F, bool full,
            std::vector<Quotient>* quotients) {
  if (v.empty()) return v;
  if (!full && index.find_divisor(v.front()) < 0) return v;
  Accumulator acc(order, F, v.size());
  for (const auto& t : v) acc.add(t.tot, t.comp, t.coeff);
  MVec done;
  MTerm t;
  while (acc.pop(t)) {
    long r = index.find_divisor(t);
    if (r < 0) {
      done.push_back(t);
      if (!full) {
        while (acc.pop(t)) done.push_back(t);
      }
      continue;
    }
    const MVec& g = basis[static_cast<std::size_t>(r)];
    Monomial m = g.front().tot.cofactor_in(t.tot);
    std::uint32_t c = F.div(t.coeff, g.front().coeff);
    if (quotients) quotients->push_back(Quotient{c, m, static_cast<std::size_t>(r)});
    const std::uint32_t neg = F.neg(c);
    for (std::size_t j = 1; j < g.size(); ++j) {
      acc.add(g[j].tot * m, g[j].comp, F.mul(g[j].coeff, neg));
    }
  }
  return done;
}

namespace {

struct Pair {
  std::size_t i, j;
  MTerm lcm;
};

bool coprime_leads(const MTerm& a, const MTerm& b, std::size_t rank) {
  return rank == 1 && coprime(a.tot, b.tot);
}

// Gebauer-Möller update after appending element h (index `h`) to the basis.
void update(std::vector<Pair>& pairs, LeadIndex& index, std::size_t h, std::size_t rank) {
  const MTerm lh = index.lead(h);
  std::vector<Pair> candidates;
  for (std::size_t g = 0; g < h; ++g) {
    if (!index.active(g) || index.lead(g).comp != lh.comp) continue;
    MTerm l{lcm(lh.tot, index.lead(g).tot), lh.comp, 1};
    candidates.push_back(Pair{g, h, l});
  }

  std::vector<Pair> kept;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    const Pair& p = candidates[a];
    bool keep = coprime_leads(lh, index.lead(p.i), rank);
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
        if (candidates[b].lcm.tot.divides(p.lcm.tot)) keep = false;
      }
      for (std::size_t b = 0; b < kept.size() && keep; ++b) {
        if (kept[b].lcm.tot.divides(p.lcm.tot)) keep = false;
      }
    }
    if (keep) kept.push_back(p);
  }

  std::vector<Pair> fresh;
  for (const auto& p : kept) {
    if (!coprime_leads(lh, index.lead(p.i), rank)) fresh.push_back(p);
  }

  std::vector<Pair> old;
  old.reserve(pairs.size());
  for (const auto& p : pairs) {
    bool drop = p.lcm.comp == lh.comp && lh.tot.divides(p.lcm.tot) &&
                !(lcm(index.lead(p.i).tot, lh.tot) == p.lcm.tot) &&
                !(lcm(index.lead(p.j).tot, lh.tot) == p.lcm.tot);
    if (!drop) old.push_back(p);
  }
  old.insert(old.end(), fresh.begin(), fresh.end());
  pairs = std::move(old);

  for (std::size_t g = 0; g < h; ++g) {
    if (index.active(g) && index.lead(g).comp == lh.comp && lh.tot.divides(index.lead(g).tot)) {
      index.deactivate(g);
    }
  }
}

MVec s_vector(const MVec& a, const MVec& b, const MTerm& l, const ModuleOrder& order,
              const PrimeField& F) {
  Monomial ma = a.front().tot.cofactor_in(l.tot);
  Monomial mb = b.front().tot.cofactor_in(l.tot);
  MVec sa;
  sa.reserve(a.size());
  std::uint32_t ca = F.inv(a.front().coeff);
  for (const auto& t : a) sa.push_back(MTerm{t.tot * ma, t.comp, F.mul(t.coeff, ca)});
  std::uint32_t cb = F.neg(F.inv(b.front().coeff));
  return add_multiple(sa, 1, cb, mb, b, 1, order, F);
}

}  // namespace

std::vector<MVec> groebner_basis(std::vector<MVec> gens, const ModuleOrder& order,
                                 const PrimeField& F) {
  for (auto& g : gens) normalize(g, order, F);
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const MVec& v) { return v.empty(); }),
             gens.end());
  std::stable_sort(gens.begin(), gens.end(), [](const MVec& a, const MVec& b) {
    return a.front().tot.degree() < b.front().tot.degree();
  });

  std::vector<MVec> basis;
  LeadIndex index;
  std::vector<Pair> pairs;
  std::size_t next_gen = 0;
  const std::size_t rank = order.rank();

  auto insert = [&](MVec v) {
    v = reduce(std::move(v), basis, index, order, F, false);
    if (v.empty()) return;
    make_monic(v, F);
    basis.push_back(std::move(v));
    index.add(basis.back().front());
    update(pairs, index, basis.size() - 1, rank);
  };

  while (next_gen < gens.size() || !pairs.empty()) {
    int d = INT_MAX;
    if (next_gen < gens.size()) d = gens[next_gen].front().tot.degree();
    for (const auto& p : pairs) d = std::min(d, p.lcm.tot.degree());

    std::vector<Pair> now;
    std::vector<Pair> later;
    for (auto& p : pairs) (p.lcm.tot.degree() == d ? now : later).push_back(p);
    pairs = std::move(later);
    std::sort(now.begin(), now.end(), [&](const Pair& a, const Pair& b) {
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });

    while (next_gen < gens.size() && gens[next_gen].front().tot.degree() == d) {
      insert(std::move(gens[next_gen++]));
    }
    for (const auto& p : now) {
      insert(s_vector(basis[p.i], basis[p.j], p.lcm, order, F));
    }
  }

  // Minimal basis, then tail-reduce each element against the others.
  std::vector<MVec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (index.active(i)) minimal.push_back(basis[i]);
  }
  std::vector<MVec> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    LeadIndex others;
    std::vector<MVec> other_vecs;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k == i) continue;
      other_vecs.push_back(minimal[k]);
      others.add(minimal[k].front());
    }
    MVec tail(minimal[i].begin() + 1, minimal[i].end());
    tail = reduce(std::move(tail), other_vecs, others, order, F, true);
    MVec r;
    r.reserve(tail.size() + 1);
    r.push_back(minimal[i].front());
    r.insert(r.end(), tail.begin(), tail.end());
    if (others.find_divisor(r.front()) >= 0) {
      throw InternalError("Gröbner basis is not minimal after interreduction");
    }
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MVec& a, const MVec& b) {
    int da = a.front().tot.degree(), db = b.front().tot.degree();
    if (da != db) return da < db;
    return order.compare(a.front(), b.front()) < 0;
  });
  return reduced;
}

}  // namespace aci::detail
