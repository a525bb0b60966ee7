#include "aci/linalg.hpp"

#include <stdexcept>

namespace aci {

void Matrix::append_row(const std::vector<std::uint32_t>& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& F) {
  const std::uint64_t p = F.characteristic();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t sel = R;
    for (std::size_t i = r; i < R; ++i) {
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == R) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < C; ++k) std::swap(m.at(sel, k), m.at(r, k));
    }
    std::uint32_t* prow = m.row(r);
    std::uint32_t inv = F.inv(prow[c]);
    for (std::size_t k = c; k < C; ++k) prow[k] = F.mul(prow[k], inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint32_t* row = m.row(i);
      std::uint64_t f = row[c];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      for (std::size_t k = c; k < C; ++k) {
        if (prow[k] != 0) row[k] = static_cast<std::uint32_t>((row[k] + nf * prow[k]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& F) { return row_reduce(m, F).size(); }

std::vector<std::vector<std::uint32_t>> kernel(Matrix m, const PrimeField& F) {
  auto pivots = row_reduce(m, F);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(C, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint32_t> EchelonBasis::reduce(std::vector<std::uint32_t> v) const {
  const std::uint64_t p = F_.characteristic();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint64_t f = v[pivot_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    std::uint64_t nf = p - f;
    for (std::size_t c = 0; c < n_; ++c) {
      if (row[c] != 0) v[c] = static_cast<std::uint32_t>((v[c] + nf * row[c]) % p);
    }
  }
  return v;
}

bool EchelonBasis::add(std::vector<std::uint32_t> v) {
  if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
  v = reduce(std::move(v));
  std::size_t piv = n_;
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c] != 0) {
      piv = c;
      break;
    }
  }
  if (piv == n_) return false;
  std::uint32_t inv = F_.inv(v[piv]);
  for (auto& x : v) x = F_.mul(x, inv);
  rows_.push_back(std::move(v));
  pivot_.push_back(piv);
  return true;
}

bool EchelonBasis::contains(std::vector<std::uint32_t> v) const {
  v = reduce(std::move(v));
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace aci
