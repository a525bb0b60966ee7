#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aci/resolution.hpp"

namespace aci {

/// Retries allowed per randomized slot: 64, or TOOL_RETRY_BUDGET when set.
int retry_budget();

/// Coefficient vector (l_1, ..., l_m) of linear forms with sum l_i q_i = 0.
struct LinearSyzygy {
  std::vector<Polynomial> coefficients;
};

/// Basis of the linear syzygies of independent quadrics, from the kernel of
/// (S_1)^m -> S_3. Throws ComputationError on dependent or non-quadratic input.
std::vector<LinearSyzygy> linear_syzygies(const std::vector<Polynomial>& quadrics);
int beta23(const std::vector<Polynomial>& quadrics);

/// Minimally generated by height + 1 quadrics.
bool is_quadratic_aci(const Ideal& I);

/// q_2, ..., q_{g+1} form a regular sequence and q_1 completes a minimal
/// generating set of I.
struct RegularSplit {
  Polynomial extra;
  std::vector<Polynomial> regular;
};

RegularSplit extract_regular_subsequence(const Ideal& I, std::uint64_t seed);

enum class AciTag { CompleteIntersection, OneLinearSyzygy, TwoLinearSyzygies, Unstructured };
enum class FamilyCase { one, two };

std::string to_string(AciTag tag);

struct ACIClassification {
  AciTag tag = AciTag::Unstructured;
  Ideal input;
  int height = 0;
  int beta23 = 0;
  /// OneLinearSyzygy: {x, z, w}.
  std::vector<Polynomial> forms;
  /// TwoLinearSyzygies: 3 rows of 2 linear forms.
  std::vector<std::vector<Polynomial>> matrix;
  /// q_3.. (case one) or q_4.. (case two); all generators for a complete intersection.
  std::vector<Polynomial> quadrics;
  std::string reason;
  std::vector<std::string> diagnostics;

  const Polynomial& x() const { return forms.at(0); }
  const Polynomial& z() const { return forms.at(1); }
  const Polynomial& w() const { return forms.at(2); }
  bool structured() const {
    return tag == AciTag::OneLinearSyzygy || tag == AciTag::TwoLinearSyzygies;
  }
  /// The ideal generated by the extracted structure.
  Ideal reassemble() const;
};

/// Signed 2x2 minors of a 3x2 matrix (row deleted: 0, 1, 2).
std::vector<Polynomial> maximal_minors(const std::vector<std::vector<Polynomial>>& M);

ACIClassification classify(const Ideal& I);

BettiTable predicted_betti(int g, FamilyCase c);
long long predicted_multiplicity(int g, FamilyCase c);

/// Ring x1..x_n over F_p for the family generators.
RingPtr family_ring(int n_vars, std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);

/// (xz, zw, q_3, ..., q_{g+1}) with q_i regular on S/(xz, zw).
Ideal generate_family_one(int g, std::uint64_t seed, int n_vars = 0,
                          std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);
/// I_2(M) + (q_4, ..., q_{g+1}) with ht I_2(M) = 2 and q_i regular on S/I_2(M).
Ideal generate_family_two(int g, std::uint64_t seed, int n_vars = 0,
                          std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);
Ideal generate_family(FamilyCase c, int g, std::uint64_t seed, int n_vars = 0,
                      std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);

/// g+1 quadrics of height g, drawn from a mix of structured sources.
Ideal random_quadratic_aci(int g, std::uint64_t seed, int n_vars = 0,
                           std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);

struct LGCertificate {
  AciTag source = AciTag::Unstructured;
  Ideal original;
  /// Lifted ring; its order is the one the quadratic basis is taken in.
  RingPtr ring;
  Ideal lifted;
  /// Linear forms whose quotient recovers the original ideal.
  std::vector<Polynomial> linear_forms;
  /// Image of each lifted variable in the original ring.
  std::vector<Polynomial> images;
};

struct LiftReport {
  int gb_max_degree = 0;
  bool gb_quadratic = false;
  bool telescope = false;
  bool recovers = false;
  /// K-polynomials of A, A/(l_1), A/(l_1, l_2), ...
  std::vector<std::vector<long long>> k_polynomials;

  bool ok() const { return gb_quadratic && telescope && recovers; }
};

LGCertificate lg_lift(const ACIClassification& c);
LiftReport verify_lift(const LGCertificate& cert);

struct BoundCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all() const;
  const BoundCheck* find(const std::string& name) const;
};

/// The monomial ideal with the Hilbert function predicted for each family
/// shape, in the first g+1 variables of `ring`.
MonomialIdeal egh_witness(int num_vars, int g, FamilyCase c);

/// Betti-number bounds for S/I. The totals bound runs for monomial ideals
/// and structured classifications; family-specific checks need the latter.
BoundReport bound_suite(const Ideal& I, const BettiTable& B,
                        const ACIClassification* c = nullptr);

}  // namespace aci
