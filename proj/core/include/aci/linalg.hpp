#pragma once

#include <cstdint>
#include <vector>

#include "aci/field.hpp"

namespace aci {

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  void append_row(const std::vector<std::uint32_t>& values);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form computed in place. Returns the pivot column of
/// each nonzero row; rows beyond the rank are zero afterwards.
std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& F);

std::size_t rank(Matrix m, const PrimeField& F);

/// Basis of {v : m v = 0}, one vector per free column, in increasing order of
/// the free column (each basis vector has a 1 there).
std::vector<std::vector<std::uint32_t>> kernel(Matrix m, const PrimeField& F);

/// Incrementally built row-echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t n, const PrimeField& F) : n_(n), F_(F) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

  /// Adds v to the spanning set; returns true iff v was independent.
  bool add(std::vector<std::uint32_t> v);
  /// True iff v lies in the span.
  bool contains(std::vector<std::uint32_t> v) const;
  /// v minus its projection along the pivot columns.
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;

 private:
  std::size_t n_;
  PrimeField F_;
  std::vector<std::vector<std::uint32_t>> rows_;  // monic at pivot_
  std::vector<std::size_t> pivot_;
};

}  // namespace aci
