#include "aci/koszul_aci.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "aci/errors.hpp"
#include "aci/graded_space.hpp"
#include "aci/groebner.hpp"
#include "aci/linalg.hpp"

namespace aci {

int retry_budget() {
  if (const char* env = std::getenv("TOOL_RETRY_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
  }
  return 64;
}

std::string to_string(AciTag tag) {
  switch (tag) {
    case AciTag::CompleteIntersection:
      return "CompleteIntersection";
    case AciTag::OneLinearSyzygy:
      return "OneLinearSyzygy";
    case AciTag::TwoLinearSyzygies:
      return "TwoLinearSyzygies";
    case AciTag::Unstructured:
      return "Unstructured";
  }
  return "Unstructured";
}

namespace {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, int g, int stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint32_t random_scalar(const PrimeField& F, Rng& rng) {
  return static_cast<std::uint32_t>(rng() % F.characteristic());
}

Polynomial random_linear(const RingPtr& ring, Rng& rng) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(ring->num_vars()));
  for (auto& v : c) v = random_scalar(ring->field(), rng);
  return Polynomial::linear_form(ring, c);
}

Polynomial random_quadric(const RingPtr& ring, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring->num_vars(), 2)) {
    terms.push_back(Term{random_scalar(ring->field(), rng), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial combination(const std::vector<std::uint32_t>& c, const std::vector<Polynomial>& q) {
  Polynomial f(q.front().ring());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (c[i] != 0) f += q[i].scaled(c[i]);
  }
  return f;
}

Polynomial random_combination(const std::vector<Polynomial>& q, Rng& rng) {
  std::vector<std::uint32_t> c(q.size());
  for (auto& v : c) v = random_scalar(q.front().ring()->field(), rng);
  return combination(c, q);
}

// Rank of forms of a common degree d.
std::size_t span_rank(const std::vector<Polynomial>& forms, int d) {
  if (forms.empty()) return 0;
  const RingPtr& ring = forms.front().ring();
  GradedPiece piece(ring->num_vars(), d);
  EchelonBasis span(piece.dimension(), ring->field());
  for (const auto& f : forms) {
    if (!f.is_zero()) span.add(piece.coordinates(f));
  }
  return span.dimension();
}

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Row-reduced basis of the span of the given vectors.
std::vector<std::vector<std::uint32_t>> basis_of(const std::vector<std::vector<std::uint32_t>>& vs,
                                                 std::size_t dim, const PrimeField& F) {
  Matrix M(vs.size(), dim);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) M.at(r, c) = vs[r][c];
  }
  auto pivots = row_reduce(M, F);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.emplace_back(M.row(r), M.row(r) + dim);
  return out;
}

// l with z * l = f, for a linear form z and a quadric f.
std::optional<Polynomial> divide_by_linear(const Polynomial& f, const Polynomial& z) {
  const RingPtr& ring = z.ring();
  const int n = ring->num_vars();
  const PrimeField& F = ring->field();
  GradedPiece S2(n, 2);
  Matrix M(S2.dimension(), static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    auto col = S2.coordinates(z * Polynomial::variable(ring, k));
    for (std::size_t r = 0; r < col.size(); ++r) M.at(r, k) = col[r];
  }
  auto rhs = S2.coordinates(f);
  for (std::size_t r = 0; r < rhs.size(); ++r) M.at(r, n) = F.neg(rhs[r]);
  for (const auto& v : kernel(M, F)) {
    if (v[n] == 0) continue;
    std::uint32_t s = F.inv(v[n]);
    std::vector<std::uint32_t> c(v.begin(), v.begin() + n);
    for (auto& x : c) x = F.mul(x, s);
    return Polynomial::linear_form(ring, c);
  }
  return std::nullopt;
}

struct KoszulRelation {
  std::vector<Polynomial> multipliers;          // one linear form per linear syzygy
  std::vector<std::vector<std::uint32_t>> a;    // antisymmetric m x m scalars
};

// Solutions of sum_s z_s u_s = sum_{i<j} a_ij (q_j e_i - q_i e_j) in degree 4.
std::vector<KoszulRelation> koszul_relations(const std::vector<Polynomial>& q,
                                             const std::vector<LinearSyzygy>& U) {
  const RingPtr& ring = q.front().ring();
  const PrimeField& F = ring->field();
  const int n = ring->num_vars();
  const std::size_t m = q.size();
  const std::size_t b = U.size();
  GradedPiece S2(n, 2);
  const std::size_t d2 = S2.dimension();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  const std::size_t z_unknowns = b * static_cast<std::size_t>(n);
  Matrix M(m * d2, z_unknowns + pairs.size());
  for (std::size_t s = 0; s < b; ++s) {
    for (int k = 0; k < n; ++k) {
      std::size_t col = s * n + k;
      for (std::size_t i = 0; i < m; ++i) {
        const Polynomial& l = U[s].coefficients[i];
        if (l.is_zero()) continue;
        auto c = S2.coordinates(l * Polynomial::variable(ring, k));
        for (std::size_t r = 0; r < d2; ++r) M.at(i * d2 + r, col) = c[r];
      }
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    auto qi = S2.coordinates(q[i]);
    auto qj = S2.coordinates(q[j]);
    for (std::size_t r = 0; r < d2; ++r) {
      M.at(i * d2 + r, z_unknowns + p) = F.neg(qj[r]);
      M.at(j * d2 + r, z_unknowns + p) = qi[r];
    }
  }
  std::vector<KoszulRelation> out;
  for (const auto& v : kernel(M, F)) {
    KoszulRelation rel;
    for (std::size_t s = 0; s < b; ++s) {
      std::vector<std::uint32_t> c(v.begin() + static_cast<std::ptrdiff_t>(s * n),
                                   v.begin() + static_cast<std::ptrdiff_t>((s + 1) * n));
      rel.multipliers.push_back(Polynomial::linear_form(ring, c));
    }
    rel.a.assign(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      rel.a[i][j] = v[z_unknowns + p];
      rel.a[j][i] = F.neg(v[z_unknowns + p]);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

// Quadrics completing `base` to a basis of span(q), each regular modulo J
// and its predecessors. The given generators are tried before random
// combinations.
std::optional<std::vector<Polynomial>> regular_complement(const std::vector<Polynomial>& q,
                                                          const std::vector<Polynomial>& base,
                                                          const Ideal& J, Rng& rng) {
  const std::size_t base_rank = span_rank(base, 2);
  const std::size_t need = q.size() - base_rank;
  std::vector<Polynomial> chosen;
  Ideal cur = J;
  std::size_t next_given = 0;
  const int budget = retry_budget();
  while (chosen.size() < need) {
    bool found = false;
    for (int attempt = 0; attempt < budget && !found; ++attempt) {
      Polynomial f = next_given < q.size() ? q[next_given++] : random_combination(q, rng);
      auto all = concat(concat(base, chosen), {f});
      if (span_rank(all, 2) != base_rank + chosen.size() + 1) continue;
      if (!is_regular_on(f, cur)) continue;
      chosen.push_back(f);
      cur = cur.plus(f);
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return chosen;
}

ACIClassification unstructured(ACIClassification c, std::string reason) {
  c.tag = AciTag::Unstructured;
  c.reason = std::move(reason);
  c.forms.clear();
  c.matrix.clear();
  c.quadrics.clear();
  return c;
}

std::vector<std::uint32_t> image_of(const std::vector<std::vector<std::uint32_t>>& a,
                                    std::size_t col) {
  std::vector<std::uint32_t> v;
  for (const auto& row : a) v.push_back(row[col]);
  return v;
}

ACIClassification extract_one(ACIClassification c, const std::vector<Polynomial>& q,
                              const std::vector<KoszulRelation>& rels) {
  const RingPtr& ring = q.front().ring();
  const PrimeField& F = ring->field();
  const KoszulRelation& rel = rels.front();
  const Polynomial& z = rel.multipliers[0];
  std::vector<std::vector<std::uint32_t>> cols;
  for (std::size_t j = 0; j < q.size(); ++j) cols.push_back(image_of(rel.a, j));
  auto W = basis_of(cols, q.size(), F);
  if (W.size() != 2) {
    return unstructured(std::move(c), "the Koszul relation has rank " + std::to_string(W.size()) +
                                          ", expected 2");
  }
  c.diagnostics.push_back("z*l lies in the Koszul span with z = " + z.to_string());
  Polynomial f1 = combination(W[0], q), f2 = combination(W[1], q);
  auto x = divide_by_linear(f1, z);
  auto w = divide_by_linear(f2, z);
  if (!x || !w) return unstructured(std::move(c), "the rank-2 part is not divisible by z");
  if (span_rank({*x, *w}, 1) != 2) return unstructured(std::move(c), "x and w are dependent");

  Ideal base(ring, {*x * z, z * *w});
  Rng rng = make_rng(0, c.height, 11);
  auto rest = regular_complement(q, {f1, f2}, base, rng);
  if (!rest) {
    return unstructured(std::move(c), "no complement regular on S/(xz, zw) within the retry budget");
  }
  // Replace w by w + t x until zw, q_3, ... is S-regular; the ideal (xz, zw) is unchanged.
  bool adjusted = false;
  Polynomial w_adj = *w;
  for (int attempt = 0; attempt < retry_budget() && !adjusted; ++attempt) {
    Polynomial cand = attempt == 0 ? *w : *w + x->scaled(random_scalar(F, rng));
    if (is_regular_sequence(concat({z * cand}, *rest), Ideal(ring))) {
      w_adj = cand;
      adjusted = true;
    }
  }
  if (!adjusted) c.diagnostics.push_back("zw, q_3, ... is not S-regular for any tried w");
  c.forms = {*x, z, w_adj};
  c.quadrics = *rest;
  if (!is_regular_sequence(c.quadrics, Ideal(ring, {c.x() * c.z(), c.z() * c.w()}))) {
    return unstructured(std::move(c), "q_3, ... is not regular on S/(xz, zw)");
  }
  if (!ideals_equal(c.reassemble(), c.input)) {
    return unstructured(std::move(c), "the extracted structure does not regenerate I");
  }
  c.tag = AciTag::OneLinearSyzygy;
  c.reason = "I = (xz, zw, q_3, ...) with q_3, ... regular on S/(xz, zw)";
  return c;
}

ACIClassification extract_two(ACIClassification c, const std::vector<Polynomial>& q,
                              const std::vector<KoszulRelation>& rels) {
  const RingPtr& ring = q.front().ring();
  const PrimeField& F = ring->field();
  std::vector<std::vector<std::uint32_t>> cols;
  for (const auto& rel : rels) {
    for (std::size_t j = 0; j < q.size(); ++j) cols.push_back(image_of(rel.a, j));
  }
  auto W = basis_of(cols, q.size(), F);
  if (W.size() != 3) {
    return unstructured(std::move(c), "the Koszul relations span " + std::to_string(W.size()) +
                                          " generators, expected 3");
  }
  c.diagnostics.push_back(std::to_string(rels.size()) + " Koszul relations in S_1 * U");
  std::vector<Polynomial> f;
  for (const auto& v : W) f.push_back(combination(v, q));
  auto U = linear_syzygies(f);
  if (U.size() != 2) {
    return unstructured(std::move(c), "the three-generator part has " + std::to_string(U.size()) +
                                          " linear syzygies, expected 2");
  }
  std::vector<std::vector<Polynomial>> M(3);
  for (std::size_t r = 0; r < 3; ++r) M[r] = {U[0].coefficients[r], U[1].coefficients[r]};
  auto minors = maximal_minors(M);
  if (span_rank(minors, 2) != 3 || span_rank(concat(minors, f), 2) != 3) {
    return unstructured(std::move(c), "the three-generator part is not I_2(M)");
  }
  Ideal I2(ring, minors);
  if (height(I2) != 2) return unstructured(std::move(c), "ht I_2(M) is not 2");
  Rng rng = make_rng(0, c.height, 12);
  auto rest = regular_complement(q, f, I2, rng);
  if (!rest) {
    return unstructured(std::move(c), "no complement regular on S/I_2(M) within the retry budget");
  }
  c.matrix = M;
  c.quadrics = *rest;
  if (!is_regular_sequence(c.quadrics, I2)) {
    return unstructured(std::move(c), "q_4, ... is not regular on S/I_2(M)");
  }
  if (!ideals_equal(c.reassemble(), c.input)) {
    return unstructured(std::move(c), "the extracted structure does not regenerate I");
  }
  c.tag = AciTag::TwoLinearSyzygies;
  c.reason = "I = I_2(M) + (q_4, ...) with ht I_2(M) = 2 and q_4, ... regular on S/I_2(M)";
  return c;
}

}  // namespace

std::vector<LinearSyzygy> linear_syzygies(const std::vector<Polynomial>& quadrics) {
  if (quadrics.empty()) return {};
  const RingPtr& ring = quadrics.front().ring();
  for (const auto& f : quadrics) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != 2) {
      throw ComputationError("linear syzygies need nonzero quadrics, got " + f.to_string());
    }
  }
  if (span_rank(quadrics, 2) != quadrics.size()) {
    throw ComputationError("quadrics are linearly dependent");
  }
  const int n = ring->num_vars();
  const std::size_t m = quadrics.size();
  GradedPiece S3(n, 3);
  Matrix M(S3.dimension(), m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (int k = 0; k < n; ++k) {
      auto c = S3.coordinates(quadrics[i] * Polynomial::variable(ring, k));
      for (std::size_t r = 0; r < c.size(); ++r) M.at(r, i * n + k) = c[r];
    }
  }
  std::vector<LinearSyzygy> out;
  for (const auto& v : kernel(M, ring->field())) {
    LinearSyzygy s;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::uint32_t> c(v.begin() + static_cast<std::ptrdiff_t>(i * n),
                                   v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      s.coefficients.push_back(Polynomial::linear_form(ring, c));
    }
    out.push_back(std::move(s));
  }
  return out;
}

int beta23(const std::vector<Polynomial>& quadrics) {
  return static_cast<int>(linear_syzygies(quadrics).size());
}

bool is_quadratic_aci(const Ideal& I) {
  if (I.is_zero()) return false;
  Ideal mg = minimal_generators(I);
  for (const auto& f : mg.gens()) {
    if (f.degree() != 2) return false;
  }
  return static_cast<int>(mg.size()) == height(I) + 1;
}

RegularSplit extract_regular_subsequence(const Ideal& I, std::uint64_t seed) {
  if (!is_quadratic_aci(I)) throw ComputationError("input is not a quadratic almost complete intersection");
  const auto q = minimal_generators(I).gens();
  const RingPtr& ring = I.ring();
  const std::size_t g = q.size() - 1;
  Rng rng = make_rng(seed, static_cast<int>(g), 3);
  const int budget = retry_budget();
  std::vector<Polynomial> regular;
  Ideal cur(ring);
  while (regular.size() < g) {
    bool found = false;
    for (int attempt = 0; attempt < budget && !found; ++attempt) {
      Polynomial f = random_combination(q, rng);
      auto all = concat(regular, {f});
      if (span_rank(all, 2) != all.size() || !is_regular_on(f, cur)) continue;
      regular.push_back(f);
      cur = cur.plus(f);
      found = true;
    }
    if (!found) {
      throw ComputationError("retry budget exhausted while extending a regular sequence; the input "
                             "is probably not an almost complete intersection");
    }
  }
  for (int attempt = 0; attempt < budget; ++attempt) {
    Polynomial f = random_combination(q, rng);
    if (span_rank(concat(regular, {f}), 2) == q.size()) return RegularSplit{f, regular};
  }
  throw ComputationError("retry budget exhausted while completing the generating set");
}

std::vector<Polynomial> maximal_minors(const std::vector<std::vector<Polynomial>>& M) {
  if (M.size() != 3 || M[0].size() != 2 || M[1].size() != 2 || M[2].size() != 2) {
    throw std::invalid_argument("maximal_minors expects a 3x2 matrix");
  }
  auto det = [&](int r, int s) { return M[r][0] * M[s][1] - M[s][0] * M[r][1]; };
  return {det(1, 2), -det(0, 2), det(0, 1)};
}

Ideal ACIClassification::reassemble() const {
  const RingPtr& ring = input.ring();
  std::vector<Polynomial> gens;
  switch (tag) {
    case AciTag::OneLinearSyzygy:
      gens = {x() * z(), z() * w()};
      break;
    case AciTag::TwoLinearSyzygies:
      gens = maximal_minors(matrix);
      break;
    case AciTag::CompleteIntersection:
      break;
    case AciTag::Unstructured:
      return input;
  }
  gens.insert(gens.end(), quadrics.begin(), quadrics.end());
  return Ideal(ring, gens);
}

ACIClassification classify(const Ideal& I) {
  if (I.is_zero()) throw ComputationError("the zero ideal is not an almost complete intersection");
  ACIClassification c;
  c.input = I;
  Ideal mg = minimal_generators(I);
  for (const auto& f : mg.gens()) {
    if (f.degree() != 2) {
      throw ComputationError("not a quadratic ideal: minimal generator " + f.to_string());
    }
  }
  const auto& q = mg.gens();
  c.height = height(I);
  const int m = static_cast<int>(q.size());
  if (m == c.height) {
    c.tag = AciTag::CompleteIntersection;
    c.quadrics = q;
    c.reason = "the quadrics form a regular sequence";
    return c;
  }
  if (m != c.height + 1) {
    throw ComputationError("not an almost complete intersection: height " +
                           std::to_string(c.height) + " with " + std::to_string(m) +
                           " minimal generators");
  }
  auto U = linear_syzygies(q);
  c.beta23 = static_cast<int>(U.size());
  c.diagnostics.push_back("beta_{2,3} = " + std::to_string(c.beta23));
  if (c.beta23 >= 3) {
    throw InternalError("beta_{2,3} = " + std::to_string(c.beta23) +
                        " exceeds 2 for a quadratic almost complete intersection");
  }
  if (c.beta23 == 0) return unstructured(std::move(c), "no linear syzygy, so S/I is not Koszul");
  auto rels = koszul_relations(q, U);
  if (rels.empty()) {
    return unstructured(std::move(c),
                        "no linear multiple of the linear syzygies lies in the Koszul span");
  }
  return c.beta23 == 1 ? extract_one(std::move(c), q, rels) : extract_two(std::move(c), q, rels);
}

BettiTable predicted_betti(int g, FamilyCase c) {
  if (g < 1 || (c == FamilyCase::two && g < 2)) {
    throw std::invalid_argument("no family of this shape at g = " + std::to_string(g));
  }
  BettiTable B;
  B.add(0, 0, 1);
  for (int i = 1; i <= g + 1; ++i) {
    if (c == FamilyCase::one) {
      B.add(i, 2 * i, (g + i) * binom(g - 1, i - 1) / i);
      B.add(i, 2 * i - 1, binom(g - 1, i - 2));
    } else {
      B.add(i, 2 * i, 3 * binom(g - 2, i - 1) + binom(g - 2, i));
      B.add(i, 2 * i - 1, 2 * binom(g - 2, i - 2));
    }
  }
  return B;
}

long long predicted_multiplicity(int g, FamilyCase c) {
  if (g < 1 || (c == FamilyCase::two && g < 2)) {
    throw std::invalid_argument("no family of this shape at g = " + std::to_string(g));
  }
  return c == FamilyCase::one ? (1LL << (g - 1)) : 3 * (1LL << (g - 2));
}

RingPtr family_ring(int n_vars, std::uint32_t characteristic) {
  return Ring::standard(n_vars, PrimeField(characteristic));
}

namespace {

// Appends quadrics regular modulo J and its predecessors until `count` are added.
std::optional<Ideal> extend_regular(Ideal J, int count, Rng& rng) {
  const int budget = retry_budget();
  for (int k = 0; k < count; ++k) {
    bool found = false;
    for (int attempt = 0; attempt < budget && !found; ++attempt) {
      Polynomial f = random_quadric(J.ring(), rng);
      if (!is_regular_on(f, J)) continue;
      J = J.plus(f);
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return J;
}

std::optional<Ideal> try_family_one(const RingPtr& ring, int g, Rng& rng) {
  Polynomial x = random_linear(ring, rng), z = random_linear(ring, rng),
             w = random_linear(ring, rng);
  if (span_rank({x, z, w}, 1) != 3) return std::nullopt;
  auto I = extend_regular(Ideal(ring, {x * z, z * w}), g - 1, rng);
  if (!I || span_rank(I->gens(), 2) != static_cast<std::size_t>(g + 1) || height(*I) != g) {
    return std::nullopt;
  }
  return I;
}

std::optional<Ideal> try_family_two(const RingPtr& ring, int g, Rng& rng) {
  std::vector<std::vector<Polynomial>> M(3);
  for (auto& row : M) row = {random_linear(ring, rng), random_linear(ring, rng)};
  auto minors = maximal_minors(M);
  if (span_rank(minors, 2) != 3) return std::nullopt;
  Ideal I2(ring, minors);
  if (height(I2) != 2) return std::nullopt;
  auto I = extend_regular(I2, g - 2, rng);
  if (!I || span_rank(I->gens(), 2) != static_cast<std::size_t>(g + 1) || height(*I) != g) {
    return std::nullopt;
  }
  return I;
}

// g+1 random quadrics inside P*S_1 + span(extra) for a prime P of height g.
std::optional<Ideal> try_inside_prime(const RingPtr& ring, int g, bool with_quadric, Rng& rng) {
  const int linear = with_quadric ? g - 1 : g;
  std::vector<Polynomial> ls;
  for (int i = 0; i < linear; ++i) ls.push_back(random_linear(ring, rng));
  if (linear > 0 && span_rank(ls, 1) != static_cast<std::size_t>(linear)) return std::nullopt;
  Polynomial Q = random_quadric(ring, rng);
  std::vector<Polynomial> gens;
  for (int k = 0; k <= g; ++k) {
    Polynomial f(ring);
    for (const auto& l : ls) f += l * random_linear(ring, rng);
    if (with_quadric) f += Q.scaled(random_scalar(ring->field(), rng));
    gens.push_back(f);
  }
  for (const auto& f : gens) {
    if (f.is_zero()) return std::nullopt;
  }
  if (span_rank(gens, 2) != gens.size()) return std::nullopt;
  Ideal I(ring, gens);
  if (height(I) != g) return std::nullopt;
  return I;
}

int default_vars(int g, int n_vars) { return n_vars > 0 ? n_vars : g + 2; }

}  // namespace

Ideal generate_family_one(int g, std::uint64_t seed, int n_vars, std::uint32_t characteristic) {
  const int n = default_vars(g, n_vars);
  if (g < 1 || n < g + 1 || n < 3) {
    throw std::invalid_argument("family one needs g >= 1 and at least max(g+1, 3) variables");
  }
  RingPtr ring = family_ring(n, characteristic);
  Rng rng = make_rng(seed, g, 1);
  for (int attempt = 0; attempt < retry_budget(); ++attempt) {
    if (auto I = try_family_one(ring, g, rng)) return *I;
  }
  throw ComputationError("retry budget exhausted generating family one");
}

Ideal generate_family_two(int g, std::uint64_t seed, int n_vars, std::uint32_t characteristic) {
  const int n = default_vars(g, n_vars);
  if (g < 2 || n < g + 1 || n < 3) {
    throw std::invalid_argument("family two needs g >= 2 and at least g+1 variables");
  }
  RingPtr ring = family_ring(n, characteristic);
  Rng rng = make_rng(seed, g, 2);
  for (int attempt = 0; attempt < retry_budget(); ++attempt) {
    if (auto I = try_family_two(ring, g, rng)) return *I;
  }
  throw ComputationError("retry budget exhausted generating family two");
}

Ideal generate_family(FamilyCase c, int g, std::uint64_t seed, int n_vars,
                      std::uint32_t characteristic) {
  return c == FamilyCase::one ? generate_family_one(g, seed, n_vars, characteristic)
                              : generate_family_two(g, seed, n_vars, characteristic);
}

Ideal random_quadratic_aci(int g, std::uint64_t seed, int n_vars, std::uint32_t characteristic) {
  const int n = default_vars(g, n_vars);
  if (g < 1 || n < g + 1) throw std::invalid_argument("random ACI needs g >= 1 and n >= g+1");
  RingPtr ring = family_ring(n, characteristic);
  Rng rng = make_rng(seed, g, 4);
  for (int attempt = 0; attempt < retry_budget(); ++attempt) {
    std::optional<Ideal> I;
    switch (rng() % 4) {
      case 0:
        if (n >= 3) I = try_family_one(ring, g, rng);
        break;
      case 1:
        if (g >= 2 && n >= 3) I = try_family_two(ring, g, rng);
        break;
      case 2:
        I = try_inside_prime(ring, g, false, rng);
        break;
      default:
        I = try_inside_prime(ring, g, true, rng);
        break;
    }
    if (I) return *I;
  }
  throw ComputationError("retry budget exhausted generating a quadratic almost complete intersection");
}

namespace {

// Names "base1", "base2", ... not clashing with `taken`; the stem grows until free.
std::string fresh_stem(std::string stem, const std::vector<std::string>& taken,
                       const std::vector<std::string>& suffixes) {
  auto clashes = [&](const std::string& s) {
    for (const auto& suf : suffixes) {
      if (std::find(taken.begin(), taken.end(), s + suf) != taken.end()) return true;
    }
    return false;
  };
  while (clashes(stem)) stem += stem.back();
  return stem;
}

Polynomial embed(const Polynomial& f, const RingPtr& target, int offset) {
  std::vector<Polynomial> images;
  for (int i = 0; i < f.ring()->num_vars(); ++i) images.push_back(Polynomial::variable(target, offset + i));
  return f.substitute(target, images);
}

}  // namespace

LGCertificate lg_lift(const ACIClassification& c) {
  if (!c.structured()) {
    throw ComputationError("only OneLinearSyzygy and TwoLinearSyzygies classifications lift");
  }
  const RingPtr& S = c.input.ring();
  const auto& names = S->names();
  const int n = S->num_vars();
  LGCertificate cert;
  cert.source = c.tag;
  cert.original = c.input;

  if (c.tag == AciTag::OneLinearSyzygy) {
    const int g = c.height;
    std::vector<std::string> suffixes;
    for (int i = 1; i <= g + 1; ++i) suffixes.push_back(std::to_string(i));
    std::string y = fresh_stem("y", names, suffixes);
    std::vector<std::string> all;
    std::vector<int> block;
    for (int i = 1; i <= g + 1; ++i) {
      all.push_back(y + std::to_string(i));
      block.push_back(i - 1);
    }
    all.insert(all.end(), names.begin(), names.end());
    const int off = g + 1;
    cert.ring = Ring::make(all, S->field(), MonomialOrder::block(block, OrderKind::grevlex));
    auto Y = [&](int i) { return Polynomial::variable(cert.ring, i - 1); };
    Polynomial z = embed(c.z(), cert.ring, off);
    std::vector<Polynomial> gens{Y(1) * z, Y(2) * z};
    for (int i = 3; i <= g + 1; ++i) gens.push_back(Y(i) * Y(i) + embed(c.quadrics[i - 3], cert.ring, off));
    cert.lifted = Ideal(cert.ring, gens);
    cert.linear_forms = {Y(1) - embed(c.x(), cert.ring, off), Y(2) - embed(c.w(), cert.ring, off)};
    for (int i = 3; i <= g + 1; ++i) cert.linear_forms.push_back(Y(i));
    cert.images = {c.x(), c.w()};
    for (int i = 3; i <= g + 1; ++i) cert.images.push_back(Polynomial(S));
  } else {
    const int g = c.height;
    std::vector<std::string> ysuf;
    for (int i = 4; i <= g + 1; ++i) ysuf.push_back(std::to_string(i));
    const std::vector<std::string> xsuf{"12", "11", "22", "21", "32", "31"};
    std::string y = fresh_stem("y", names, ysuf);
    std::string x = fresh_stem("x", names, xsuf);
    std::vector<std::string> all;
    for (const auto& s : ysuf) all.push_back(y + s);
    for (const auto& s : xsuf) all.push_back(x + s);
    all.insert(all.end(), names.begin(), names.end());
    const int ny = static_cast<int>(ysuf.size());
    const int off = ny + 6;
    cert.ring = Ring::make(all, S->field(), MonomialOrder::lex());
    // Position of X_{r,c} (1-based) in the variable list.
    auto X = [&](int r, int col) {
      int k = 0;
      for (; k < 6; ++k) {
        if (xsuf[k] == std::to_string(r) + std::to_string(col)) break;
      }
      return ny + k;
    };
    std::vector<std::vector<Polynomial>> Xm(3);
    for (int r = 1; r <= 3; ++r) {
      Xm[r - 1] = {Polynomial::variable(cert.ring, X(r, 1)), Polynomial::variable(cert.ring, X(r, 2))};
    }
    std::vector<Polynomial> gens = maximal_minors(Xm);
    for (int i = 0; i < ny; ++i) {
      Polynomial yi = Polynomial::variable(cert.ring, i);
      gens.push_back(yi * yi + embed(c.quadrics[i], cert.ring, off));
    }
    cert.lifted = Ideal(cert.ring, gens);
    cert.images.assign(static_cast<std::size_t>(off), Polynomial(S));
    for (int k = 0; k < 6; ++k) {
      int r = xsuf[k][0] - '1', col = xsuf[k][1] - '1';
      cert.images[ny + k] = c.matrix[r][col];
      cert.linear_forms.push_back(Polynomial::variable(cert.ring, ny + k) -
                                  embed(c.matrix[r][col], cert.ring, off));
    }
    for (int i = 0; i < ny; ++i) cert.linear_forms.push_back(Polynomial::variable(cert.ring, i));
  }
  for (int i = 0; i < n; ++i) cert.images.push_back(Polynomial::variable(S, i));
  return cert;
}

LiftReport verify_lift(const LGCertificate& cert) {
  LiftReport rep;
  auto G = buchberger(cert.lifted);
  rep.gb_max_degree = G.max_degree();
  rep.gb_quadratic = rep.gb_max_degree <= 2;

  RingPtr gr = cert.ring->with_order(MonomialOrder::grevlex());
  Ideal cur = cert.lifted.in_ring(gr);
  rep.k_polynomials.push_back(initial_ideal(cur, MonomialOrder::grevlex()).k_polynomial());
  rep.telescope = true;
  for (const auto& l : cert.linear_forms) {
    cur = cur.plus(l.in_ring(gr));
    auto K = initial_ideal(cur, MonomialOrder::grevlex()).k_polynomial();
    const auto& prev = rep.k_polynomials.back();
    std::vector<long long> expected(prev.size() + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      expected[i] += prev[i];
      expected[i + 1] -= prev[i];
    }
    while (!expected.empty() && expected.back() == 0) expected.pop_back();
    if (K != expected) rep.telescope = false;
    rep.k_polynomials.push_back(std::move(K));
  }

  const RingPtr& S = cert.original.ring();
  rep.recovers = static_cast<int>(cert.images.size()) == cert.ring->num_vars();
  if (rep.recovers) {
    for (const auto& l : cert.linear_forms) {
      if (!l.substitute(S, cert.images).is_zero()) rep.recovers = false;
    }
    std::vector<Polynomial> down;
    for (const auto& f : cert.lifted.gens()) down.push_back(f.substitute(S, cert.images));
    if (!ideals_equal(Ideal(S, down), cert.original)) rep.recovers = false;
  }
  return rep;
}

bool BoundReport::all() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

const BoundCheck* BoundReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

MonomialIdeal egh_witness(int num_vars, int g, FamilyCase c) {
  if (g < 1 || (c == FamilyCase::two && g < 2) || num_vars < g + 1) {
    throw std::invalid_argument("witness needs g+1 variables");
  }
  std::vector<Monomial> gens;
  for (int i = 0; i < g; ++i) gens.push_back(Monomial::variable(i, 2));
  if (c == FamilyCase::one) {
    gens.push_back(Monomial::variable(g - 1, 1) * Monomial::variable(g, 1));
  } else {
    gens.push_back(Monomial::variable(g - 2, 1) * Monomial::variable(g - 1, 1));
  }
  return MonomialIdeal(num_vars, gens);
}

BoundReport bound_suite(const Ideal& I, const BettiTable& B, const ACIClassification* c) {
  BoundReport rep;
  const long long mu = static_cast<long long>(minimal_generators(I).size());
  const auto totals = B.totals();
  auto list = [](const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };

  const bool monomial = std::all_of(I.gens().begin(), I.gens().end(),
                                    [](const Polynomial& f) { return f.terms().size() == 1; });
  if (monomial || (c != nullptr && c->structured())) {
    BoundCheck taylor{"total<=binom(mu,i)", true, "totals " + list(totals)};
    for (std::size_t i = 0; i < totals.size(); ++i) {
      if (totals[i] > binom(mu, static_cast<long long>(i))) taylor.holds = false;
    }
    rep.checks.push_back(taylor);
    rep.checks.push_back({"pd<=mu", B.projective_dimension() <= mu,
                          "pd " + std::to_string(B.projective_dimension()) + ", mu " +
                              std::to_string(mu)});
  }
  if (c == nullptr || !c->structured()) return rep;

  const int g = c->height;
  BoundCheck sub{"subdiagonal", true, ""};
  for (const auto& [k, v] : B.entries()) {
    if (k.second > 2 * k.first) {
      sub.holds = false;
      sub.detail = "beta_{" + std::to_string(k.first) + "," + std::to_string(k.second) + "} = " +
                   std::to_string(v);
    }
  }
  rep.checks.push_back(sub);

  BoundCheck strand{"linear-strand<=binom(mu,i)", true, ""};
  BoundCheck diag{"diagonal<=binom(mu,i)", true, ""};
  for (int i = 2; i <= mu; ++i) {
    if (B.at(i, i + 1) > binom(mu, i)) strand.holds = false;
    if (B.at(i, 2 * i) > binom(mu, i)) diag.holds = false;
  }
  rep.checks.push_back(strand);
  rep.checks.push_back(diag);

  BoundCheck lower{"total>=binom(c,i)+binom(c-1,i-1)", true, "totals " + list(totals)};
  for (int i = 0; i <= g + 1; ++i) {
    long long have = i < static_cast<int>(totals.size()) ? totals[i] : 0;
    if (have < binom(g, i) + binom(g - 1, i - 1)) lower.holds = false;
  }
  rep.checks.push_back(lower);

  const int n = I.ring()->num_vars();
  FamilyCase shape = c->tag == AciTag::OneLinearSyzygy ? FamilyCase::one : FamilyCase::two;
  BoundCheck egh{"egh-witness", false, ""};
  if (n >= g + 1) {
    std::vector<long long> num;
    for (const auto& [k, v] : B.entries()) {
      if (static_cast<int>(num.size()) <= k.second) num.resize(k.second + 1, 0);
      num[k.second] += (k.first % 2 == 0) ? v : -v;
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    auto witness = egh_witness(n, g, shape).k_polynomial();
    egh.holds = num == witness;
    egh.detail = "numerator " + list(num) + " vs witness " + list(witness);
  } else {
    egh.detail = "fewer than g+1 variables";
  }
  rep.checks.push_back(egh);
  return rep;
}

}  // namespace aci
