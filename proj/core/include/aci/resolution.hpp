#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aci/complex.hpp"

namespace aci {

/// Graded Betti numbers beta_{i,j}; only positive counts are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, long long> entries);

  long long at(int i, int j) const;
  void add(int i, int j, long long count);
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Largest homological index present (-1 when empty).
  int projective_dimension() const;
  /// Largest j - i present.
  int regularity() const;
  /// beta_i = sum_j beta_{i,j}, for i = 0..pd.
  std::vector<long long> totals() const;

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// H(t) = numerator / (1-t)^ambient = h(t) / (1-t)^dimension.
struct HilbertSeries {
  std::vector<long long> numerator;
  int ambient = 0;
  int dimension = 0;
  std::vector<long long> h_polynomial;

  long long multiplicity() const;
};

/// Kernel generators of the map S(-d_1) + ... + S(-d_k) -> F given by the
/// columns (each column has one entry per generator of F). Column degrees
/// are inferred from the entries.
struct SyzygyModule {
  GradedFreeModule ambient;            // twists of the source S^k
  std::vector<std::vector<Polynomial>> generators;  // vectors of length k
  std::vector<int> degrees;            // degree of each generator
};

SyzygyModule syzygies(const RingPtr& ring, const GradedFreeModule& target,
                      const std::vector<std::vector<Polynomial>>& columns);

/// Non-minimal Schreyer resolution of S/I computed from a grevlex Gröbner
/// basis; exact and homogeneous.
GradedComplex schreyer_resolution(const Ideal& I);

/// Minimal graded free resolution of S/I.
GradedComplex minimal_free_resolution(const Ideal& I);

/// Betti table of a minimal complex; throws ComputationError otherwise.
BettiTable betti_table(const GradedComplex& C);

/// Betti table of S/I.
BettiTable betti_table(const Ideal& I);

HilbertSeries hilbert_series(const Ideal& I);
long long multiplicity(const Ideal& I);

struct ResolutionSummary {
  BettiTable betti;
  HilbertSeries hilbert;
};

/// Betti table and Hilbert series of S/I from a single resolution.
ResolutionSummary summarize_resolution(const Ideal& I);

/// Exact division of a polynomial with integer coefficients by (1-t)^k;
/// throws InternalError on a nonzero remainder.
std::vector<long long> divide_by_one_minus_t(std::vector<long long> num, int k);

}  // namespace aci
