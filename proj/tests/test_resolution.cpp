#include <gtest/gtest.h>

#include <random>

#include "aci/errors.hpp"
#include "aci/graded_space.hpp"
#include "aci/linalg.hpp"
#include "aci/resolution.hpp"
#include "support.hpp"

namespace aci {
namespace {

using testing::ideal_of;
using testing::P;
using testing::random_form;
using testing::ring_of;

using Table = std::map<std::pair<int, int>, long long>;

std::vector<std::vector<Polynomial>> columns_of(const Ideal& I) {
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : I.gens()) cols.push_back({g});
  return cols;
}

// dim of the degree-d kernel of (a_1..a_k) -> sum a_j f_j, by plain linear algebra.
std::size_t kernel_dim_oracle(const Ideal& I, int d) {
  const int n = I.ring()->num_vars();
  GradedPiece target(n, d);
  std::vector<std::vector<std::uint32_t>> images;
  for (const auto& f : I.gens()) {
    if (d < f.degree()) continue;
    for (const auto& m : monomials_of_degree(n, d - f.degree())) {
      images.push_back(target.coordinates(f.times_term(1, m)));
    }
  }
  Matrix M(images.size(), target.dimension());
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < target.dimension(); ++j) M.at(i, j) = images[i][j];
  }
  return images.size() - rank(M, I.ring()->field());
}

// dim of the degree-d part of the submodule generated by `syz`.
std::size_t generated_dim(const Ideal& I, const SyzygyModule& syz, int d) {
  const int n = I.ring()->num_vars();
  std::vector<GradedPiece> pieces;
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (const auto& f : I.gens()) {
    pieces.emplace_back(n, d - f.degree());
    offset.push_back(total);
    total += d >= f.degree() ? pieces.back().dimension() : 0;
  }
  EchelonBasis span(total, I.ring()->field());
  for (std::size_t g = 0; g < syz.generators.size(); ++g) {
    if (syz.degrees[g] > d) continue;
    for (const auto& m : monomials_of_degree(n, d - syz.degrees[g])) {
      std::vector<std::uint32_t> v(total, 0);
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        const auto& e = syz.generators[g][j];
        if (e.is_zero()) continue;
        auto c = pieces[j].coordinates(e.times_term(1, m));
        std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(offset[j]));
      }
      span.add(std::move(v));
    }
  }
  return span.dimension();
}

bool kills(const Ideal& I, const SyzygyModule& syz) {
  for (const auto& v : syz.generators) {
    Polynomial s(I.ring());
    for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * I.gens()[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

TEST(Syzygies, TwoMonomials) {
  auto r = ring_of({"x", "y", "z"});
  auto I = ideal_of(r, {"x*y", "y*z"});
  auto syz = syzygies(r, {0}, columns_of(I));
  ASSERT_EQ(syz.generators.size(), 1u);
  EXPECT_EQ(syz.degrees[0], 3);
  // The generator is a scalar multiple of (z, -x).
  auto g = syz.generators[0];
  auto c = g[0].lead_coeff();
  EXPECT_EQ(g[0], P(r, "z").scaled(c));
  EXPECT_EQ(g[1], P(r, "-x").scaled(c));
  for (int d = 2; d <= 4; ++d) EXPECT_EQ(generated_dim(I, syz, d), kernel_dim_oracle(I, d));
}

TEST(Syzygies, RegularSequenceGivesKoszulRelations) {
  auto r = ring_of({"a", "b", "c", "d"});
  auto I = ideal_of(r, {"a^2+b*c", "b^2-c*d", "c^2+a*d"});
  auto syz = syzygies(r, {0}, columns_of(I));
  EXPECT_TRUE(kills(I, syz));
  ASSERT_EQ(syz.generators.size(), 3u);
  for (int d : syz.degrees) EXPECT_EQ(d, 4);
  for (int d = 2; d <= 5; ++d) EXPECT_EQ(generated_dim(I, syz, d), kernel_dim_oracle(I, d));
}

TEST(Syzygies, ExampleIdealHasFourLinearSyzygies) {
  auto r = ring_of({"x", "y", "z", "w"});
  auto I = ideal_of(r, {"x*y", "x*w", "(x-y)*z", "z^2", "x^2+z*w"});
  auto syz = syzygies(r, {0}, columns_of(I));
  EXPECT_TRUE(kills(I, syz));
  EXPECT_EQ(std::count(syz.degrees.begin(), syz.degrees.end(), 3), 4);
  EXPECT_EQ(syz.generators.size(), 8u);
  for (int d = 2; d <= 5; ++d) EXPECT_EQ(generated_dim(I, syz, d), kernel_dim_oracle(I, d));
}

TEST(Syzygies, RandomIdealsAgreeWithOracle) {
  std::mt19937_64 rng(7);
  auto r = ring_of({"a", "b", "c", "d"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    int k = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < k; ++j) gens.push_back(random_form(r, 1 + static_cast<int>(rng() % 2), 3, rng));
    Ideal I(r, gens);
    if (I.size() < 2) continue;
    auto syz = syzygies(r, {0}, columns_of(I));
    EXPECT_TRUE(kills(I, syz));
    for (int d = 1; d <= 5; ++d) {
      EXPECT_EQ(generated_dim(I, syz, d), kernel_dim_oracle(I, d)) << "trial " << trial;
    }
  }
}

TEST(Resolution, SingleQuadric) {
  auto r = ring_of({"x", "y"});
  auto C = minimal_free_resolution(ideal_of(r, {"x^2+y^2"}));
  EXPECT_EQ(C.modules(), (std::vector<GradedFreeModule>{{0}, {2}}));
}

TEST(Resolution, HilbertBurchShape) {
  auto r = ring_of({"x", "z", "w"});
  auto C = minimal_free_resolution(ideal_of(r, {"x*z", "z*w"}));
  EXPECT_EQ(C.modules(), (std::vector<GradedFreeModule>{{0}, {2, 2}, {3}}));
  EXPECT_TRUE(C.is_complex());
}

TEST(Resolution, ExampleIdealTable) {
  auto r = ring_of({"x", "y", "z", "w"});
  auto I = ideal_of(r, {"x*y", "x*w", "(x-y)*z", "z^2", "x^2+z*w"});
  auto C = minimal_free_resolution(I);
  EXPECT_TRUE(C.is_complex());
  EXPECT_TRUE(C.degrees_consistent());
  EXPECT_EQ(betti_table(C).entries(),
            (Table{{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 4}, {{2, 4}, 4}, {{3, 5}, 6}, {{4, 6}, 2}}));
  auto B = betti_table(C);
  EXPECT_EQ(B.projective_dimension(), 4);
  EXPECT_EQ(B.regularity(), 2);
  EXPECT_EQ(B.totals(), (std::vector<long long>{1, 5, 8, 6, 2}));
}

TEST(Resolution, FirstFamilyAtTwo) {
  auto r = ring_of({"x", "z", "w", "a", "b"});
  auto B = betti_table(ideal_of(r, {"x*z", "z*w", "x^2+a*b"}));
  EXPECT_EQ(B.at(2, 3), 1);
  EXPECT_EQ(B.at(2, 4), 2);
  EXPECT_EQ(B.at(3, 5), 1);
}

TEST(Resolution, BettiTableRejectsNonMinimal) {
  auto r = ring_of({"x", "y", "z"});
  auto C = schreyer_resolution(ideal_of(r, {"x*y", "x^2", "y*z^2-x*z^2"}));
  auto M = minimize(C);
  EXPECT_TRUE(M.is_minimal());
  EXPECT_EQ(M.euler_numerator(), C.euler_numerator());
  if (!C.is_minimal()) EXPECT_THROW(betti_table(C), ComputationError);
}

TEST(Resolution, RandomComplexesAreExactShapes) {
  std::mt19937_64 rng(11);
  auto r = ring_of({"a", "b", "c", "d"});
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) gens.push_back(random_form(r, 1 + static_cast<int>(rng() % 3), 2, rng));
    Ideal I(r, gens);
    if (I.size() == 0) continue;
    auto C = schreyer_resolution(I);
    EXPECT_TRUE(C.is_complex());
    EXPECT_TRUE(C.degrees_consistent());
    auto M = minimize(C);
    EXPECT_TRUE(M.is_complex());
    EXPECT_TRUE(M.is_minimal());
    EXPECT_EQ(M.euler_numerator(), C.euler_numerator());
    EXPECT_LE(M.length(), r->num_vars());
  }
}

TEST(Resolution, FrameRanksAgreeWithMinimization) {
  std::mt19937_64 rng(29);
  auto r = ring_of({"a", "b", "c", "d", "e"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) gens.push_back(random_form(r, 1 + static_cast<int>(rng() % 3), 3, rng));
    Ideal I(r, gens);
    if (I.size() == 0) continue;
    auto summary = summarize_resolution(I);
    EXPECT_EQ(summary.betti, betti_table(minimal_free_resolution(I)));
    EXPECT_EQ(summary.betti, betti_table(I));
    EXPECT_EQ(summary.hilbert.h_polynomial, hilbert_series(I).h_polynomial);
  }
}

TEST(Resolution, TrailingNonzerodivisorsKeepTheTable) {
  // d and e never appear in a leading monomial here.
  auto r = ring_of({"a", "b", "c", "d", "e"});
  Ideal I = ideal_of(r, {"a^2+b*d", "a*b+c*e", "b^2"});
  EXPECT_EQ(betti_table(I), betti_table(minimal_free_resolution(I)));
  EXPECT_EQ(summarize_resolution(I).hilbert.numerator, schreyer_resolution(I).euler_numerator());
}

TEST(Complexes, KoszulOnTwoQuadrics) {
  auto r = ring_of({"x", "y", "z"});
  auto K = koszul_complex(r, {P(r, "x^2"), P(r, "y^2+x*z")});
  EXPECT_EQ(K.modules(), (std::vector<GradedFreeModule>{{0}, {2, 2}, {4}}));
  EXPECT_TRUE(K.is_complex());
  EXPECT_EQ(betti_table(K).entries(), (Table{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}}));
}

TEST(Complexes, KoszulRanksAreBinomial) {
  auto r = ring_of({"a", "b", "c", "d"});
  auto K = koszul_complex(r, {P(r, "a^2"), P(r, "b^2"), P(r, "c^2"), P(r, "d^2")});
  auto B = betti_table(K);
  const long long binom[] = {1, 4, 6, 4, 1};
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(B.at(i, 2 * i), binom[i]);
  EXPECT_TRUE(K.is_complex());
}

TEST(Complexes, TaylorOnTwoMonomials) {
  auto r = ring_of({"x", "y", "z"});
  MonomialIdeal M(3, {P(r, "x*y").lead_monomial(), P(r, "y*z").lead_monomial()});
  auto T = taylor_complex(r, M);
  EXPECT_EQ(T.modules(), (std::vector<GradedFreeModule>{{0}, {2, 2}, {3}}));
  EXPECT_TRUE(T.is_complex());
}

TEST(Complexes, TaylorOfCoprimeQuadricsIsKoszul) {
  auto r = ring_of({"x", "y", "z"});
  std::vector<Polynomial> q{P(r, "x^2"), P(r, "y^2"), P(r, "z^2")};
  std::vector<Monomial> ms;
  for (const auto& f : q) ms.push_back(f.lead_monomial());
  MonomialIdeal M(3, ms);
  std::vector<Polynomial> ordered;
  for (const auto& m : M.gens()) ordered.push_back(Polynomial::term(r, 1, m));
  auto T = taylor_complex(r, M);
  auto K = koszul_complex(r, ordered);
  ASSERT_EQ(T.modules(), K.modules());
  for (int i = 1; i <= T.length(); ++i) {
    const auto& a = T.differential(i);
    const auto& b = K.differential(i);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (std::size_t row = 0; row < a.rows(); ++row) EXPECT_EQ(a.at(row, c), b.at(row, c));
    }
  }
}

TEST(Complexes, TaylorPathMinimizesToTwoSyzygies) {
  auto r = ring_of({"x", "y", "z", "w"});
  MonomialIdeal M(4, {P(r, "x*y").lead_monomial(), P(r, "y*z").lead_monomial(),
                      P(r, "z*w").lead_monomial()});
  auto T = taylor_complex(r, M);
  EXPECT_TRUE(T.is_complex());
  auto B = betti_table(minimize(T));
  EXPECT_EQ(B.totals(), (std::vector<long long>{1, 3, 2}));
  auto direct = betti_table(ideal_of(r, {"x*y", "y*z", "z*w"}));
  EXPECT_EQ(B, direct);
}

TEST(Complexes, TaylorBoundsMonomialIdeals) {
  std::mt19937_64 rng(5);
  auto r = ring_of({"a", "b", "c", "d"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Monomial> ms;
    for (int j = 0; j < 4; ++j) ms.push_back(random_form(r, 2, 1, rng).lead_monomial());
    MonomialIdeal M(4, ms);
    auto B = betti_table(minimize(taylor_complex(r, M)));
    auto t = B.totals();
    const long long g = static_cast<long long>(M.gens().size());
    long long binom = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_LE(t[i], binom);
      binom = binom * (g - static_cast<long long>(i)) / static_cast<long long>(i + 1);
    }
  }
}

TEST(Complexes, TensorWithKoszulIsMinimalForRegularElement) {
  auto r = ring_of({"x", "z", "w", "a", "b"});
  auto F = minimal_free_resolution(ideal_of(r, {"x*z", "z*w"}));
  auto T = tensor_with_koszul(F, {P(r, "x^2+a*b")});
  EXPECT_TRUE(T.is_complex());
  EXPECT_TRUE(T.degrees_consistent());
  EXPECT_TRUE(T.is_minimal());
  EXPECT_EQ(betti_table(T).entries(),
            (Table{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 1}, {{2, 4}, 2}, {{3, 5}, 1}}));
}

TEST(Complexes, TensorOfDeterminantalWithKoszul) {
  auto r = ring_of({"x11", "x12", "x21", "x22", "x31", "x32", "c"});
  auto F = minimal_free_resolution(ideal_of(
      r, {"x11*x22-x12*x21", "x11*x32-x12*x31", "x21*x32-x22*x31"}));
  auto T = tensor_with_koszul(F, {P(r, "c^2")});
  EXPECT_TRUE(T.is_complex());
  EXPECT_TRUE(T.is_minimal());
  EXPECT_EQ(betti_table(T).totals(), (std::vector<long long>{1, 4, 5, 2}));
}

TEST(Complexes, TensorWithEmptyKoszulIsIdentity) {
  auto r = ring_of({"x", "z", "w"});
  auto F = minimal_free_resolution(ideal_of(r, {"x*z", "z*w"}));
  auto T = tensor_with_koszul(F, {});
  EXPECT_EQ(T.modules(), F.modules());
  EXPECT_EQ(betti_table(T), betti_table(F));
}

TEST(Complexes, MinimizeKeepsMinimalComplex) {
  auto r = ring_of({"x", "y", "z"});
  auto K = koszul_complex(r, {P(r, "x^2"), P(r, "y*z")});
  auto M = minimize(K);
  EXPECT_EQ(M.modules(), K.modules());
}

TEST(Hilbert, ExampleIdeal) {
  auto r = ring_of({"x", "y", "z", "w"});
  auto H = hilbert_series(ideal_of(r, {"x*y", "x*w", "(x-y)*z", "z^2", "x^2+z*w"}));
  EXPECT_EQ(H.dimension, 2);
  EXPECT_EQ(H.h_polynomial, (std::vector<long long>{1, 2, -2, -2, 2}));
  EXPECT_EQ(H.multiplicity(), 1);
}

TEST(Hilbert, WholeRing) {
  auto r = ring_of({"x", "y", "z"});
  auto H = hilbert_series(Ideal(r, {}));
  EXPECT_EQ(H.dimension, 3);
  EXPECT_EQ(H.h_polynomial, (std::vector<long long>{1}));
}

TEST(Hilbert, SharedVariableQuadrics) {
  auto r = ring_of({"x", "z", "w"});
  auto I = ideal_of(r, {"x*z", "z*w"});
  auto H = hilbert_series(I);
  EXPECT_EQ(H.h_polynomial, (std::vector<long long>{1, 1, -1}));
  EXPECT_EQ(multiplicity(I), 1);
}

TEST(Hilbert, DeterminantalMultiplicity) {
  auto r = ring_of({"x11", "x12", "x21", "x22", "x31", "x32"});
  auto I = ideal_of(r, {"x11*x22-x12*x21", "x11*x32-x12*x31", "x21*x32-x22*x31"});
  EXPECT_EQ(multiplicity(I), 3);
}

TEST(Hilbert, FirstFamilyAtThree) {
  auto r = ring_of({"x", "z", "w", "a", "b", "c", "d"});
  EXPECT_EQ(multiplicity(ideal_of(r, {"x*z", "z*w", "x^2+a*b", "w^2+c*d"})), 4);
}

TEST(Hilbert, NumeratorIndependentOfPresentation) {
  auto r = ring_of({"x", "y", "z"});
  auto a = hilbert_series(ideal_of(r, {"x*y", "y*z"}));
  auto b = hilbert_series(ideal_of(r, {"x*y", "y*z", "x*y*z", "x^2*y"}));
  EXPECT_EQ(a.numerator, b.numerator);
}

TEST(Hilbert, DivisionByOneMinusT) {
  EXPECT_EQ(divide_by_one_minus_t({1, -2, 1}, 2), (std::vector<long long>{1}));
  EXPECT_EQ(divide_by_one_minus_t({1, 0, -1}, 1), (std::vector<long long>{1, 1}));
  EXPECT_THROW(divide_by_one_minus_t({1, 1}, 1), InternalError);
}

}  // namespace
}  // namespace aci
