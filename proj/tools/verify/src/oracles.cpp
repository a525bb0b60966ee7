#include "aci_verify/oracles.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace aci::verify {

namespace {

using Vec = std::vector<std::uint32_t>;

// Semi-echelon rows over F_p: each row is zero at the pivots of earlier rows
// and has a 1 at its own pivot.
class Echelon {
 public:
  Echelon(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_pivot(std::size_t c) const { return pivot_of_col_.count(c) > 0; }

  void reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t piv = pivots_[r];
      const std::uint64_t c = v[piv];
      if (c == 0) continue;
      const std::uint64_t f = p_ - c;
      const Vec& row = rows_[r];
      for (std::size_t k = piv; k < cols_; ++k) {
        if (row[k] != 0) v[k] = static_cast<std::uint32_t>((v[k] + f * row[k]) % p_);
      }
    }
  }

  bool insert(Vec v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < cols_ && v[piv] == 0) ++piv;
    if (piv == cols_) return false;
    const std::uint64_t inv = power(v[piv], p_ - 2);
    for (std::size_t k = piv; k < cols_; ++k) v[k] = static_cast<std::uint32_t>(v[k] * inv % p_);
    pivot_of_col_[piv] = rows_.size();
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  std::uint64_t power(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }

  std::size_t cols_;
  std::uint64_t p_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::unordered_map<std::size_t, std::size_t> pivot_of_col_;
};

struct Piece {
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;

  Piece(int n, int d) : monos(d < 0 ? std::vector<Monomial>{} : monomials_of_degree(n, d)) {
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  }

  Vec coords(const Polynomial& f) const {
    Vec v(monos.size(), 0);
    for (const auto& t : f.terms()) v[index.at(t.mono)] = t.coeff;
    return v;
  }
};

void require_homogeneous(const Ideal& I) {
  for (const auto& f : I.gens()) {
    if (!f.is_zero() && !f.is_homogeneous()) {
      throw std::invalid_argument("oracle needs homogeneous generators, got " + f.to_string());
    }
  }
}

// Span of { m f : f a generator, deg m = d - deg f } inside S_d.
Echelon ideal_piece(const Ideal& I, const Piece& P, int d) {
  const int n = I.ring()->num_vars();
  Echelon E(P.monos.size(), I.ring()->field().characteristic());
  for (const auto& f : I.gens()) {
    if (f.is_zero() || f.degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - f.degree())) E.insert(P.coords(f.times_term(1, m)));
  }
  return E;
}

// (S/I)_d with the non-pivot monomials as basis.
struct Quotient {
  Piece piece;
  Echelon ideal;
  std::vector<std::size_t> basis;           // monomial indices
  std::vector<long> position;               // monomial index -> basis slot or -1

  Quotient(const Ideal& I, int d)
      : piece(I.ring()->num_vars(), d), ideal(ideal_piece(I, piece, d)) {
    position.assign(piece.monos.size(), -1);
    for (std::size_t c = 0; c < piece.monos.size(); ++c) {
      if (!ideal.is_pivot(c)) {
        position[c] = static_cast<long>(basis.size());
        basis.push_back(c);
      }
    }
  }

  std::size_t dim() const { return basis.size(); }

  /// Class of a monomial, as coordinates on the basis.
  const Vec& class_of(const Monomial& m) const {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Vec v(piece.monos.size(), 0);
    v[piece.index.at(m)] = 1;
    ideal.reduce(v);
    Vec out(basis.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] = v[basis[k]];
    return cache.emplace(m, std::move(out)).first->second;
  }

  mutable std::unordered_map<Monomial, Vec, MonomialHash> cache;
};

std::vector<unsigned> subsets_of_size(int n, int k) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) == k) out.push_back(s);
  }
  return out;
}

}  // namespace

BettiTable koszul_tor_table(const Ideal& I, int max_degree) {
  require_homogeneous(I);
  const int n = I.ring()->num_vars();
  const std::uint32_t p = I.ring()->field().characteristic();
  std::vector<Quotient> A;
  for (int d = 0; d <= max_degree; ++d) A.emplace_back(I, d);

  BettiTable B;
  for (int j = 0; j <= max_degree; ++j) {
    // rank_d[i] = rank of K_{i,j} -> K_{i-1,j}.
    std::vector<std::size_t> dims(n + 2, 0), ranks(n + 2, 0);
    std::vector<std::vector<unsigned>> subsets(n + 1);
    for (int i = 0; i <= n; ++i) {
      subsets[i] = subsets_of_size(n, i);
      if (j - i >= 0) dims[i] = subsets[i].size() * A[j - i].dim();
    }
    for (int i = 1; i <= n && j - i >= 0; ++i) {
      const Quotient& src = A[j - i];
      const Quotient& dst = A[j - i + 1];
      if (src.dim() == 0 || dst.dim() == 0) continue;
      std::unordered_map<unsigned, std::size_t> target_slot;
      for (std::size_t s = 0; s < subsets[i - 1].size(); ++s) target_slot[subsets[i - 1][s]] = s;
      Echelon E(dims[i - 1], p);
      for (unsigned S : subsets[i]) {
        for (std::size_t b = 0; b < src.dim(); ++b) {
          const Monomial& m = src.piece.monos[src.basis[b]];
          Vec img(dims[i - 1], 0);
          int sign_pos = 0;
          for (int a = 0; a < n; ++a) {
            if (!(S & (1u << a))) continue;
            const std::uint32_t sign = sign_pos % 2 == 0 ? 1 : p - 1;
            ++sign_pos;
            const std::size_t block = target_slot.at(S & ~(1u << a)) * dst.dim();
            const Vec& cls = dst.class_of(m * Monomial::variable(a));
            for (std::size_t k = 0; k < cls.size(); ++k) {
              if (cls[k] == 0) continue;
              img[block + k] = static_cast<std::uint32_t>(
                  (img[block + k] + static_cast<std::uint64_t>(sign) * cls[k]) % p);
            }
          }
          E.insert(std::move(img));
        }
      }
      ranks[i] = E.rank();
    }
    for (int i = 0; i <= n; ++i) {
      const long long b = static_cast<long long>(dims[i]) - static_cast<long long>(ranks[i]) -
                          static_cast<long long>(ranks[i + 1]);
      if (b > 0) B.add(i, j, b);
    }
  }
  return B;
}

std::vector<std::size_t> ideal_dims(const Ideal& I, int max_degree) {
  require_homogeneous(I);
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    Piece P(I.ring()->num_vars(), d);
    out.push_back(ideal_piece(I, P, d).rank());
  }
  return out;
}

std::vector<std::size_t> colon_dims(const Ideal& I, const Polynomial& f, int max_degree) {
  require_homogeneous(I);
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("colon oracle needs a nonzero form");
  const int n = I.ring()->num_vars();
  const std::uint32_t p = I.ring()->field().characteristic();
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    Quotient Q(I, d + f.degree());
    Echelon image(Q.dim(), p);
    const auto monos = monomials_of_degree(n, d);
    for (const auto& m : monos) {
      Vec v(Q.dim(), 0);
      for (const auto& t : f.terms()) {
        const Vec& cls = Q.class_of(t.mono * m);
        for (std::size_t k = 0; k < cls.size(); ++k) {
          v[k] = static_cast<std::uint32_t>((v[k] + static_cast<std::uint64_t>(t.coeff) * cls[k]) % p);
        }
      }
      image.insert(std::move(v));
    }
    out.push_back(monos.size() - image.rank());
  }
  return out;
}

std::map<int, long long> labeled_orbit_census(int edges) {
  if (edges < 1 || edges > 5) throw std::invalid_argument("orbit census supports 1 to 5 edges");
  const int v = 2 * edges;
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> slot_of(v, std::vector<int>(v, -1));
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      slot_of[a][b] = slot_of[b][a] = static_cast<int>(slots.size());
      slots.emplace_back(a, b);
    }
  }
  const int m = static_cast<int>(slots.size());

  // Generators of the symmetric group: a transposition and a full cycle.
  std::vector<std::vector<int>> gens;
  for (int which = 0; which < 2; ++which) {
    std::vector<int> perm(v);
    for (int i = 0; i < v; ++i) perm[i] = which == 0 ? (i < 2 ? 1 - i : i) : (i + 1) % v;
    std::vector<int> on_slots(m);
    for (int s = 0; s < m; ++s) on_slots[s] = slot_of[perm[slots[s].first]][perm[slots[s].second]];
    gens.push_back(std::move(on_slots));
  }

  std::vector<std::vector<std::uint64_t>> binom(m + 1, std::vector<std::uint64_t>(edges + 1, 0));
  for (int a = 0; a <= m; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= edges && b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
  }
  auto rank = [&](std::uint64_t mask) {
    std::uint64_t r = 0;
    int k = 1;
    while (mask) {
      int c = __builtin_ctzll(mask);
      r += binom[c][k++];
      mask &= mask - 1;
    }
    return r;
  };
  auto act = [&](const std::vector<int>& g, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask) {
      int c = __builtin_ctzll(mask);
      out |= 1ull << g[c];
      mask &= mask - 1;
    }
    return out;
  };
  auto used_vertices = [&](std::uint64_t mask) {
    unsigned seen = 0;
    while (mask) {
      int c = __builtin_ctzll(mask);
      seen |= (1u << slots[c].first) | (1u << slots[c].second);
      mask &= mask - 1;
    }
    return __builtin_popcount(seen);
  };

  std::vector<bool> visited(binom[m][edges], false);
  std::map<int, long long> census;
  const std::uint64_t last = ((1ull << edges) - 1) << (m - edges);
  for (std::uint64_t mask = (1ull << edges) - 1;;) {
    if (!visited[rank(mask)]) {
      ++census[used_vertices(mask)];
      std::deque<std::uint64_t> queue{mask};
      visited[rank(mask)] = true;
      while (!queue.empty()) {
        std::uint64_t cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
          std::uint64_t nxt = act(g, cur);
          auto r = rank(nxt);
          if (!visited[r]) {
            visited[r] = true;
            queue.push_back(nxt);
          }
        }
      }
    }
    if (mask == last) break;
    // Next mask with the same popcount.
    std::uint64_t c = mask & -mask, r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return census;
}

}  // namespace aci::verify
