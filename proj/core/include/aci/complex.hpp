#pragma once

#include <string>
#include <vector>

#include "aci/groebner.hpp"
#include "aci/polynomial.hpp"

namespace aci {

/// Dense matrix of polynomials (column j is the image of basis vector j).
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[c * rows_ + r]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[c * rows_ + r]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool is_zero() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// A graded free module is its list of generator degrees (twists).
using GradedFreeModule = std::vector<int>;

/// 0 <- F_0 <- F_1 <- ... <- F_L with homogeneous differentials;
/// differential(i) maps F_i to F_{i-1} for 1 <= i <= L.
class GradedComplex {
 public:
  GradedComplex(RingPtr ring, std::vector<GradedFreeModule> modules, std::vector<PolyMatrix> maps);

  const RingPtr& ring() const { return ring_; }
  int length() const { return static_cast<int>(maps_.size()); }
  const GradedFreeModule& module(int i) const { return modules_.at(i); }
  const std::vector<GradedFreeModule>& modules() const { return modules_; }
  const PolyMatrix& differential(int i) const { return maps_.at(i - 1); }

  /// Every composite d_i d_{i+1} vanishes.
  bool is_complex() const;
  /// Entry (r, c) of d_i is zero or homogeneous of degree deg F_i[c] - deg F_{i-1}[r].
  bool degrees_consistent() const;
  /// No differential has a nonzero constant entry.
  bool is_minimal() const;

  /// Sum of (-1)^i t^j over generators of degree j of F_i.
  std::vector<long long> euler_numerator() const;

 private:
  RingPtr ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<PolyMatrix> maps_;
};

/// Koszul complex on homogeneous forms f_1..f_m (basis of K_i: i-subsets in
/// lexicographic order).
GradedComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& f);

/// Taylor complex on the minimal generators of a monomial ideal, ordered as
/// given by M.gens().
GradedComplex taylor_complex(const RingPtr& ring, const MonomialIdeal& M);

/// Total complex of F (x) G with d(a (x) b) = da (x) b + (-1)^i a (x) db.
GradedComplex tensor(const GradedComplex& F, const GradedComplex& G);

GradedComplex tensor_with_koszul(const GradedComplex& F, const std::vector<Polynomial>& q);

/// Strips unit entries until the complex is minimal. The result is homotopy
/// equivalent to C and has the same Euler numerator.
GradedComplex minimize(const GradedComplex& C);

}  // namespace aci
