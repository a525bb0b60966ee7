#include "aci/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "aci/errors.hpp"

namespace aci {

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not compose");
  PolyMatrix out(ring_, rows_, o.cols_);
  for (std::size_t j = 0; j < o.cols_; ++j) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& b = o.at(k, j);
      if (b.is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Polynomial& a = at(i, k);
        if (!a.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

GradedComplex::GradedComplex(RingPtr ring, std::vector<GradedFreeModule> modules,
                             std::vector<PolyMatrix> maps)
    : ring_(std::move(ring)), modules_(std::move(modules)), maps_(std::move(maps)) {
  if (modules_.empty()) modules_.push_back({});
  if (maps_.size() + 1 != modules_.size()) {
    throw std::invalid_argument("a complex of length L needs L+1 modules");
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].rows() != modules_[i].size() || maps_[i].cols() != modules_[i + 1].size()) {
      throw std::invalid_argument("differential " + std::to_string(i + 1) +
                                  " does not match module ranks");
    }
  }
}

bool GradedComplex::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps_.size(); ++i) {
    if (!(maps_[i] * maps_[i + 1]).is_zero()) return false;
  }
  return true;
}

bool GradedComplex::degrees_consistent() const {
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto& m = maps_[i];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto& e = m.at(r, c);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous() || e.degree() != modules_[i + 1][c] - modules_[i][r]) return false;
      }
    }
  }
  return true;
}

bool GradedComplex::is_minimal() const {
  for (const auto& m : maps_) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto& e = m.at(r, c);
        if (!e.is_zero() && e.is_constant()) return false;
      }
    }
  }
  return true;
}

std::vector<long long> GradedComplex::euler_numerator() const {
  std::vector<long long> num;
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    for (int d : modules_[i]) {
      if (d < 0) throw InternalError("negative generator degree in a resolution");
      if (static_cast<int>(num.size()) <= d) num.resize(d + 1, 0);
      num[d] += (i % 2 == 0) ? 1 : -1;
    }
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

namespace {

// Subsets of {0..m-1} of size k in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < m; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Exterior-algebra style complex on m symbols: basis of level k is the
// k-subsets, d(e_S) = sum_pos (-1)^pos coeff(S, s_pos) e_{S - s_pos}.
template <typename Coeff, typename Degree>
GradedComplex subset_complex(const RingPtr& ring, int m, Coeff coeff, Degree degree) {
  std::vector<std::vector<std::vector<int>>> levels;
  for (int k = 0; k <= m; ++k) levels.push_back(subsets(m, k));
  std::vector<GradedFreeModule> modules;
  for (const auto& level : levels) {
    GradedFreeModule mod;
    for (const auto& s : level) mod.push_back(degree(s));
    modules.push_back(std::move(mod));
  }
  std::vector<PolyMatrix> maps;
  for (int k = 1; k <= m; ++k) {
    const auto& src = levels[k];
    const auto& dst = levels[k - 1];
    PolyMatrix d(ring, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (int pos = 0; pos < k; ++pos) {
        std::vector<int> face = src[c];
        face.erase(face.begin() + pos);
        std::size_t r = static_cast<std::size_t>(
            std::lower_bound(dst.begin(), dst.end(), face) - dst.begin());
        Polynomial e = coeff(src[c], src[c][pos], face);
        d.at(r, c) = (pos % 2 == 0) ? e : -e;
      }
    }
    maps.push_back(std::move(d));
  }
  return GradedComplex(ring, std::move(modules), std::move(maps));
}

}  // namespace

GradedComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& f) {
  for (const auto& p : f) {
    if (p.is_zero() || !p.is_homogeneous()) {
      throw ComputationError("Koszul complex needs nonzero homogeneous forms");
    }
  }
  return subset_complex(
      ring, static_cast<int>(f.size()),
      [&](const std::vector<int>&, int s, const std::vector<int>&) { return f[s].in_ring(ring); },
      [&](const std::vector<int>& S) {
        int d = 0;
        for (int s : S) d += f[s].degree();
        return d;
      });
}

GradedComplex taylor_complex(const RingPtr& ring, const MonomialIdeal& M) {
  const auto& gens = M.gens();
  auto lcm_of = [&](const std::vector<int>& S) {
    Monomial l;
    for (int s : S) l = lcm(l, gens[s]);
    return l;
  };
  return subset_complex(
      ring, static_cast<int>(gens.size()),
      [&](const std::vector<int>& S, int, const std::vector<int>& face) {
        return Polynomial::term(ring, 1, lcm_of(face).cofactor_in(lcm_of(S)));
      },
      [&](const std::vector<int>& S) { return lcm_of(S).degree(); });
}

GradedComplex tensor(const GradedComplex& F, const GradedComplex& G) {
  const RingPtr& ring = F.ring();
  const int LF = F.length(), LG = G.length();
  const int L = LF + LG;
  // Offsets of the block F_i (x) G_{n-i} inside level n.
  std::vector<std::vector<std::size_t>> offset(L + 1, std::vector<std::size_t>(LF + 1, 0));
  std::vector<GradedFreeModule> modules(L + 1);
  for (int n = 0; n <= L; ++n) {
    for (int i = 0; i <= LF; ++i) {
      int j = n - i;
      offset[n][i] = modules[n].size();
      if (j < 0 || j > LG) continue;
      for (int a : F.module(i)) {
        for (int b : G.module(j)) modules[n].push_back(a + b);
      }
    }
  }
  std::vector<PolyMatrix> maps;
  for (int n = 1; n <= L; ++n) {
    PolyMatrix d(ring, modules[n - 1].size(), modules[n].size());
    for (int i = 0; i <= LF; ++i) {
      int j = n - i;
      if (j < 0 || j > LG) continue;
      const std::size_t gb = G.module(j).size();
      for (std::size_t a = 0; a < F.module(i).size(); ++a) {
        for (std::size_t b = 0; b < gb; ++b) {
          std::size_t col = offset[n][i] + a * gb + b;
          if (i >= 1) {
            // da (x) b lands in F_{i-1} (x) G_j.
            const auto& dF = F.differential(i);
            for (std::size_t r = 0; r < dF.rows(); ++r) {
              if (dF.at(r, a).is_zero()) continue;
              d.at(offset[n - 1][i - 1] + r * gb + b, col) += dF.at(r, a).in_ring(ring);
            }
          }
          if (j >= 1) {
            // (-1)^i a (x) db lands in F_i (x) G_{j-1}.
            const auto& dG = G.differential(j);
            const std::size_t gb1 = G.module(j - 1).size();
            for (std::size_t r = 0; r < dG.rows(); ++r) {
              if (dG.at(r, b).is_zero()) continue;
              Polynomial e = dG.at(r, b).in_ring(ring);
              if (i % 2 == 1) e = -e;
              d.at(offset[n - 1][i] + a * gb1 + r, col) += e;
            }
          }
        }
      }
    }
    maps.push_back(std::move(d));
  }
  return GradedComplex(ring, std::move(modules), std::move(maps));
}

GradedComplex tensor_with_koszul(const GradedComplex& F, const std::vector<Polynomial>& q) {
  return tensor(F, koszul_complex(F.ring(), q));
}

GradedComplex minimize(const GradedComplex& C) {
  const RingPtr& ring = C.ring();
  const PrimeField& F = ring->field();
  const int L = C.length();
  std::vector<PolyMatrix> maps;
  for (int i = 1; i <= L; ++i) maps.push_back(C.differential(i));
  std::vector<std::vector<bool>> alive(L + 1);
  for (int i = 0; i <= L; ++i) alive[i].assign(C.module(i).size(), true);

  for (int k = 1; k <= L; ++k) {
    PolyMatrix& d = maps[k - 1];
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (!alive[k][c]) continue;
      std::size_t r = d.rows();
      for (std::size_t i = 0; i < d.rows(); ++i) {
        if (alive[k - 1][i] && !d.at(i, c).is_zero() && d.at(i, c).is_constant()) {
          r = i;
          break;
        }
      }
      if (r == d.rows()) continue;
      // d' = d - col_c * row_r / u on the surviving entries.
      std::uint32_t inv_u = F.inv(d.at(r, c).lead_coeff());
      std::vector<std::size_t> col_support, row_support;
      for (std::size_t i = 0; i < d.rows(); ++i) {
        if (alive[k - 1][i] && i != r && !d.at(i, c).is_zero()) col_support.push_back(i);
      }
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (alive[k][j] && j != c && !d.at(r, j).is_zero()) row_support.push_back(j);
      }
      for (std::size_t j : row_support) {
        Polynomial factor = d.at(r, j).scaled(inv_u);
        for (std::size_t i : col_support) d.at(i, j) -= d.at(i, c) * factor;
      }
      alive[k][c] = false;
      alive[k - 1][r] = false;
      // Revisit earlier columns: new units may have appeared.
      c = static_cast<std::size_t>(-1);
    }
  }

  std::vector<GradedFreeModule> modules(L + 1);
  std::vector<std::vector<std::size_t>> keep(L + 1);
  for (int i = 0; i <= L; ++i) {
    for (std::size_t j = 0; j < alive[i].size(); ++j) {
      if (alive[i][j]) {
        keep[i].push_back(j);
        modules[i].push_back(C.module(i)[j]);
      }
    }
  }
  int top = L;
  while (top > 0 && modules[top].empty()) --top;
  std::vector<PolyMatrix> out;
  for (int k = 1; k <= top; ++k) {
    PolyMatrix m(ring, keep[k - 1].size(), keep[k].size());
    for (std::size_t c = 0; c < keep[k].size(); ++c) {
      for (std::size_t r = 0; r < keep[k - 1].size(); ++r) {
        m.at(r, c) = maps[k - 1].at(keep[k - 1][r], keep[k][c]);
      }
    }
    out.push_back(std::move(m));
  }
  modules.resize(top + 1);
  return GradedComplex(ring, std::move(modules), std::move(out));
}

}  // namespace aci
