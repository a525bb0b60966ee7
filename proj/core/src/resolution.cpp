#include "aci/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aci/errors.hpp"
#include "aci/graded_space.hpp"
#include "aci/linalg.hpp"
#include "module_engine.hpp"

namespace aci {

using detail::ModuleOrder;
using detail::MTerm;
using detail::MVec;

BettiTable::BettiTable(std::map<std::pair<int, int>, long long> entries) {
  for (const auto& [k, v] : entries) add(k.first, k.second, v);
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long count) {
  if (count == 0) return;
  long long& slot = entries_[{i, j}];
  slot += count;
  if (slot < 0) throw InternalError("negative Betti number");
  if (slot == 0) entries_.erase({i, j});
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [k, v] : entries_) pd = std::max(pd, k.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [k, v] : entries_) reg = std::max(reg, k.second - k.first);
  return reg;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> t(static_cast<std::size_t>(projective_dimension() + 1), 0);
  for (const auto& [k, v] : entries_) t[k.first] += v;
  return t;
}

long long HilbertSeries::multiplicity() const {
  return std::accumulate(h_polynomial.begin(), h_polynomial.end(), 0LL);
}

std::vector<long long> divide_by_one_minus_t(std::vector<long long> num, int k) {
  for (int step = 0; step < k; ++step) {
    if (num.empty()) return num;
    // num = (1 - t) q  =>  q_i = num_i + q_{i-1}; remainder is the coefficient sum.
    std::vector<long long> q(num.size() - 1, 0);
    long long running = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      running += num[i];
      q[i] = running;
    }
    if (running + num.back() != 0) {
      throw InternalError("Hilbert numerator is not divisible by (1-t)^" + std::to_string(k));
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    num = std::move(q);
  }
  return num;
}

namespace {

struct Level {
  std::vector<MVec> elems;   // vectors in the previous free module
  std::vector<Monomial> tm;  // total leading monomial of each element
};

ModuleOrder order_for(const std::vector<Monomial>& shifts) {
  return ModuleOrder(MonomialOrder::grevlex(), shifts);
}

// Stable sort by decreasing exponent of variable v in the leading monomial.
void sort_level(Level& L, int v) {
  std::vector<std::size_t> idx(L.elems.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return L.tm[a][v] > L.tm[b][v]; });
  Level out;
  for (auto i : idx) {
    out.elems.push_back(std::move(L.elems[i]));
    out.tm.push_back(L.tm[i]);
  }
  L = std::move(out);
}

// Schreyer syzygies of the elements of `cur` (a Gröbner basis for the
// order induced by `prev_shifts`), keeping only pairs whose quotient monomial
// is a minimal generator for its component.
Level next_level(const Level& cur, const std::vector<Monomial>& prev_shifts, const PrimeField& F) {
  const ModuleOrder prev_order = order_for(prev_shifts);
  const ModuleOrder this_order = order_for(cur.tm);
  detail::LeadIndex index;
  for (const auto& e : cur.elems) index.add(e.front());

  Level out;
  const std::size_t n = cur.elems.size();
  for (std::size_t p = 0; p < n; ++p) {
    const MTerm& lp = cur.elems[p].front();
    std::vector<std::pair<Monomial, std::size_t>> cands;
    for (std::size_t q = p + 1; q < n; ++q) {
      const MTerm& lq = cur.elems[q].front();
      if (lq.comp != lp.comp) continue;
      cands.emplace_back(lp.tot.cofactor_in(lcm(lp.tot, lq.tot)), q);
    }
    std::vector<std::pair<Monomial, std::size_t>> minimal;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
        if (a == b) continue;
        if (cands[b].first.divides(cands[a].first) &&
            (!(cands[b].first == cands[a].first) || b < a)) {
          redundant = true;
        }
      }
      if (!redundant) minimal.push_back(cands[a]);
    }
    for (const auto& [mp, q] : minimal) {
      const MVec& vp = cur.elems[p];
      const MVec& vq = cur.elems[q];
      Monomial L = mp * lp.tot;
      Monomial mq = vq.front().tot.cofactor_in(L);
      std::uint32_t cp = F.inv(vp.front().coeff);
      std::uint32_t cq = F.inv(vq.front().coeff);
      MVec s;
      s.reserve(vp.size());
      for (const auto& t : vp) s.push_back(MTerm{t.tot * mp, t.comp, F.mul(t.coeff, cp)});
      s = detail::add_multiple(s, 1, F.neg(cq), mq, vq, 1, prev_order, F);
      std::vector<detail::Quotient> quots;
      MVec rem = detail::reduce(std::move(s), cur.elems, index, prev_order, F, false, &quots);
      if (!rem.empty()) throw InternalError("Schreyer S-vector did not reduce to zero");

      MVec syz;
      syz.reserve(quots.size() + 2);
      syz.push_back(MTerm{mp * cur.tm[p], static_cast<std::uint32_t>(p), cp});
      syz.push_back(MTerm{mq * cur.tm[q], static_cast<std::uint32_t>(q), F.neg(cq)});
      for (const auto& qt : quots) {
        syz.push_back(MTerm{qt.mono * cur.tm[qt.index], static_cast<std::uint32_t>(qt.index),
                            F.neg(qt.coeff)});
      }
      detail::normalize(syz, this_order, F);
      if (syz.empty() || syz.front().comp != p || !(syz.front().tot == L)) {
        throw InternalError("Schreyer syzygy has an unexpected leading term");
      }
      detail::make_monic(syz, F);
      out.tm.push_back(syz.front().tot);
      out.elems.push_back(std::move(syz));
    }
  }
  return out;
}

Polynomial entry_polynomial(const RingPtr& ring, const MVec& v, std::uint32_t comp,
                            const Monomial& shift) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back(Term{t.coeff, shift.cofactor_in(t.tot)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<MVec> grevlex_basis(const Ideal& I, const RingPtr& ring) {
  std::vector<MVec> gens;
  for (const auto& g : I.gens()) {
    MVec v;
    Polynomial h = g.in_ring(ring);
    for (const auto& t : h.terms()) v.push_back(MTerm{t.mono, 0, t.coeff});
    gens.push_back(std::move(v));
  }
  return detail::groebner_basis(std::move(gens), ModuleOrder::plain(MonomialOrder::grevlex(), 1),
                                ring->field());
}

struct Frame {
  RingPtr ring;
  std::vector<Level> levels;
};

// Sets trailing variables to zero while no leading monomial of the grevlex
// basis involves them. Each such variable is a nonzerodivisor on S/I, so the
// result has the same graded Betti numbers and K-polynomial.
std::vector<MVec> cut_trailing(std::vector<MVec> basis, int n, int& kept) {
  kept = n;
  while (kept > 1) {
    const int v = kept - 1;
    bool used = false;
    for (const auto& g : basis) used = used || g.front().tot[v] != 0;
    if (used) break;
    for (auto& g : basis) {
      std::erase_if(g, [v](const MTerm& t) { return t.tot[v] != 0; });
    }
    kept = v;
  }
  return basis;
}

Frame build_frame(const Ideal& I, bool cut = false) {
  Frame fr;
  fr.ring = I.ring()->order() == MonomialOrder::grevlex()
                ? I.ring()
                : I.ring()->with_order(MonomialOrder::grevlex());
  const PrimeField& F = fr.ring->field();
  int n = fr.ring->num_vars();
  auto& levels = fr.levels;

  std::vector<MVec> basis = grevlex_basis(I, fr.ring);
  if (cut) basis = cut_trailing(std::move(basis), n, n);
  Level first;
  for (auto& v : basis) {
    first.tm.push_back(v.front().tot);
    first.elems.push_back(std::move(v));
  }
  if (!first.elems.empty()) {
    sort_level(first, 0);
    levels.push_back(std::move(first));
  }
  const std::vector<Monomial> shifts0{Monomial()};
  while (!levels.empty()) {
    const Level& cur = levels.back();
    const auto& prev_shifts = levels.size() == 1 ? shifts0 : levels[levels.size() - 2].tm;
    Level nxt = next_level(cur, prev_shifts, F);
    if (nxt.elems.empty()) break;
    sort_level(nxt, static_cast<int>(levels.size()) % n);
    levels.push_back(std::move(nxt));
  }
  return fr;
}

// beta_{i,j} = f_{i,j} - rank(d_i)_j - rank(d_{i+1})_j, where (d_i)_j is the
// scalar block of d_i between generators of degree j.
BettiTable frame_betti(const Frame& fr) {
  const PrimeField& F = fr.ring->field();
  const std::size_t len = fr.levels.size();
  std::vector<std::map<int, long long>> ranks(len + 2);
  for (std::size_t k = 0; k < len; ++k) {
    const Level& L = fr.levels[k];
    if (k == 0) continue;  // d_1 has no scalar entries for a proper ideal
    const auto& prev = fr.levels[k - 1].tm;
    std::map<int, std::vector<std::size_t>> cols_by_deg, rows_by_deg;
    for (std::size_t c = 0; c < L.tm.size(); ++c) cols_by_deg[L.tm[c].degree()].push_back(c);
    for (std::size_t r = 0; r < prev.size(); ++r) rows_by_deg[prev[r].degree()].push_back(r);
    for (const auto& [deg, cols] : cols_by_deg) {
      auto it = rows_by_deg.find(deg);
      if (it == rows_by_deg.end()) continue;
      const auto& rows = it->second;
      std::vector<long> row_pos(prev.size(), -1);
      for (std::size_t a = 0; a < rows.size(); ++a) row_pos[rows[a]] = static_cast<long>(a);
      Matrix m(cols.size(), rows.size());
      bool any = false;
      for (std::size_t a = 0; a < cols.size(); ++a) {
        for (const auto& t : L.elems[cols[a]]) {
          long rp = row_pos[t.comp];
          if (rp >= 0 && t.tot == prev[t.comp]) {
            m.at(a, static_cast<std::size_t>(rp)) = t.coeff;
            any = true;
          }
        }
      }
      if (any) ranks[k + 1][deg] = static_cast<long long>(rank(std::move(m), F));
    }
  }
  BettiTable B;
  B.add(0, 0, 1);
  for (std::size_t k = 0; k < len; ++k) {
    const int i = static_cast<int>(k) + 1;
    std::map<int, long long> f;
    for (const auto& t : fr.levels[k].tm) ++f[t.degree()];
    for (const auto& [deg, count] : f) {
      long long b = count;
      if (auto it = ranks[i].find(deg); it != ranks[i].end()) b -= it->second;
      if (auto it = ranks[i + 1].find(deg); it != ranks[i + 1].end()) b -= it->second;
      if (b < 0) throw InternalError("negative Betti number from frame ranks");
      if (b > 0) B.add(i, deg, b);
    }
  }
  return B;
}

std::vector<long long> frame_numerator(const Frame& fr) {
  std::vector<long long> num{1};
  for (std::size_t k = 0; k < fr.levels.size(); ++k) {
    const long long sign = k % 2 == 0 ? -1 : 1;
    for (const auto& t : fr.levels[k].tm) {
      auto d = static_cast<std::size_t>(t.degree());
      if (num.size() <= d) num.resize(d + 1, 0);
      num[d] += sign;
    }
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return num;
}

HilbertSeries series_from(const Ideal& I, std::vector<long long> numerator) {
  HilbertSeries H;
  H.ambient = I.ring()->num_vars();
  H.numerator = std::move(numerator);
  H.dimension = krull_dimension(I);
  H.h_polynomial = divide_by_one_minus_t(H.numerator, H.ambient - std::max(H.dimension, 0));
  return H;
}

}  // namespace

GradedComplex schreyer_resolution(const Ideal& I) {
  Frame fr = build_frame(I);
  const RingPtr& ring = fr.ring;
  const auto& levels = fr.levels;
  const std::vector<Monomial> shifts0{Monomial()};

  std::vector<GradedFreeModule> modules{{0}};
  std::vector<PolyMatrix> maps;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const Level& L = levels[k];
    const auto& prev_shifts = k == 0 ? shifts0 : levels[k - 1].tm;
    GradedFreeModule mod;
    for (const auto& t : L.tm) mod.push_back(t.degree());
    modules.push_back(std::move(mod));
    PolyMatrix d(ring, prev_shifts.size(), L.elems.size());
    for (std::size_t c = 0; c < L.elems.size(); ++c) {
      std::vector<std::uint32_t> comps;
      for (const auto& t : L.elems[c]) comps.push_back(t.comp);
      std::sort(comps.begin(), comps.end());
      comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
      for (auto r : comps) d.at(r, c) = entry_polynomial(ring, L.elems[c], r, prev_shifts[r]);
    }
    maps.push_back(std::move(d));
  }
  return GradedComplex(ring, std::move(modules), std::move(maps));
}

GradedComplex minimal_free_resolution(const Ideal& I) { return minimize(schreyer_resolution(I)); }

BettiTable betti_table(const GradedComplex& C) {
  if (!C.is_minimal()) throw ComputationError("Betti table requested for a non-minimal complex");
  BettiTable B;
  for (int i = 0; i <= C.length(); ++i) {
    for (int d : C.module(i)) B.add(i, d, 1);
  }
  return B;
}

BettiTable betti_table(const Ideal& I) { return frame_betti(build_frame(I, true)); }

HilbertSeries hilbert_series(const Ideal& I) {
  return series_from(I, frame_numerator(build_frame(I, true)));
}

ResolutionSummary summarize_resolution(const Ideal& I) {
  Frame fr = build_frame(I, true);
  return ResolutionSummary{frame_betti(fr), series_from(I, frame_numerator(fr))};
}

long long multiplicity(const Ideal& I) { return hilbert_series(I).multiplicity(); }

SyzygyModule syzygies(const RingPtr& ring, const GradedFreeModule& target,
                      const std::vector<std::vector<Polynomial>>& columns) {
  const std::size_t t = target.size();
  const std::size_t k = columns.size();
  SyzygyModule out;
  for (const auto& col : columns) {
    if (col.size() != t) throw std::invalid_argument("column length differs from target rank");
    int deg = 0;
    for (std::size_t r = 0; r < t; ++r) {
      if (col[r].is_zero()) continue;
      if (!col[r].is_homogeneous()) throw ComputationError("syzygies need homogeneous columns");
      deg = col[r].degree() + target[r];
      break;
    }
    for (std::size_t r = 0; r < t; ++r) {
      if (!col[r].is_zero() && col[r].degree() + target[r] != deg) {
        throw ComputationError("syzygies need homogeneous columns");
      }
    }
    out.ambient.push_back(deg);
  }

  // Vectors (column_j, e_j) in target + S^k; the target block is eliminated.
  int lo = 0;
  for (int d : target) lo = std::min(lo, d);
  for (int d : out.ambient) lo = std::min(lo, d);
  std::vector<Monomial> shifts;
  std::vector<int> blocks;
  for (int d : target) {
    shifts.push_back(Monomial::variable(0, d - lo));
    blocks.push_back(1);
  }
  for (int d : out.ambient) {
    shifts.push_back(Monomial::variable(0, d - lo));
    blocks.push_back(0);
  }
  RingPtr gr = ring->with_order(MonomialOrder::grevlex());
  ModuleOrder order(MonomialOrder::grevlex(), shifts, blocks);
  std::vector<MVec> gens;
  for (std::size_t j = 0; j < k; ++j) {
    MVec v;
    for (std::size_t r = 0; r < t; ++r) {
      for (const auto& term : columns[j][r].terms()) {
        v.push_back(order.make(term.coeff, term.mono, static_cast<std::uint32_t>(r)));
      }
    }
    v.push_back(order.make(1, Monomial(), static_cast<std::uint32_t>(t + j)));
    gens.push_back(std::move(v));
  }
  auto basis = detail::groebner_basis(std::move(gens), order, ring->field());

  std::vector<std::vector<Polynomial>> raw;
  std::vector<int> raw_deg;
  for (const auto& v : basis) {
    if (v.front().comp < t) continue;
    std::vector<Polynomial> vec;
    for (std::size_t j = 0; j < k; ++j) {
      vec.push_back(entry_polynomial(gr, v, static_cast<std::uint32_t>(t + j), shifts[t + j])
                        .in_ring(ring));
    }
    raw.push_back(std::move(vec));
    raw_deg.push_back(v.front().tot.degree() + lo);
  }

  // Keep a minimal subset: degree by degree, drop vectors in the span of the
  // monomial multiples of those already kept.
  std::vector<std::size_t> idx(raw.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return raw_deg[a] < raw_deg[b]; });
  const int n = ring->num_vars();
  std::size_t pos = 0;
  while (pos < idx.size()) {
    int d = raw_deg[idx[pos]];
    std::vector<GradedPiece> pieces;
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t j = 0; j < k; ++j) {
      pieces.emplace_back(n, std::max(d - out.ambient[j], -1));
      offset.push_back(total);
      total += d - out.ambient[j] >= 0 ? pieces.back().dimension() : 0;
    }
    auto coords = [&](const std::vector<Polynomial>& vec) {
      std::vector<std::uint32_t> c(total, 0);
      for (std::size_t j = 0; j < k; ++j) {
        if (vec[j].is_zero()) continue;
        auto part = pieces[j].coordinates(vec[j]);
        std::copy(part.begin(), part.end(), c.begin() + static_cast<std::ptrdiff_t>(offset[j]));
      }
      return c;
    };
    EchelonBasis span(total, ring->field());
    for (std::size_t g = 0; g < out.generators.size(); ++g) {
      int e = d - out.degrees[g];
      if (e <= 0) continue;
      for (const auto& m : monomials_of_degree(n, e)) {
        std::vector<Polynomial> shifted;
        for (const auto& p : out.generators[g]) shifted.push_back(p.times_term(1, m));
        span.add(coords(shifted));
      }
    }
    for (; pos < idx.size() && raw_deg[idx[pos]] == d; ++pos) {
      if (span.add(coords(raw[idx[pos]]))) {
        out.generators.push_back(raw[idx[pos]]);
        out.degrees.push_back(d);
      }
    }
  }
  return out;
}

}  // namespace aci
