// Copyright 2026 The Ergo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ergo/entangle.hpp"
#include "ergo/passive.hpp"
#include "ergo/tripartite.hpp"
#include "oracles.hpp"

namespace ergo {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Expected {
  double a, b, c;
};

void expect_signature(const GapSignature& g, const Expected& e, double tol = 1e-9) {
  EXPECT_NEAR(g.gap_a_bc, e.a, tol);
  EXPECT_NEAR(g.gap_b_ac, e.b, tol);
  EXPECT_NEAR(g.gap_c_ab, e.c, tol);
}

// Ordered W weights; `heavy` selects l1 >= 1/2 or l1 <= 1/2.
std::array<double, 3> w_weights(Rng& rng, bool heavy) {
  for (;;) {
    auto p = random_spectrum(3, rng).probs();
    if (heavy == (p[0] >= 0.5)) return {p[0], p[1], p[2]};
  }
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

TEST(Constructors, Examples) {
  const auto ghz = make_ghz(0.5, 0.0);
  EXPECT_NEAR(ghz.amplitudes()(0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(ghz.amplitudes()(7).real(), 1 / std::sqrt(2.0), 1e-15);
  const auto w = make_w(1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0);
  for (int i : {1, 2, 4}) EXPECT_NEAR(std::abs(w.amplitudes()(i)), 1 / std::sqrt(3.0), 1e-15);
  const auto prod = make_bisep(0.0, Pair::AB);
  EXPECT_NEAR(prod.amplitudes().cwiseAbs().maxCoeff(), 1.0, 1e-15);
  EXPECT_NEAR(prod.amplitudes().cwiseAbs().sum(), 1.0, 1e-15);
  EXPECT_NEAR(gap_signature(prod).gap_a_bc + gap_signature(prod).gap_b_ac + gap_signature(prod).gap_c_ab, 0.0, 1e-15);
}

TEST(Constructors, RejectInvalidWeights) {
  EXPECT_THROW(make_ghz(0.3, 0.0), ValidationError);
  EXPECT_THROW(make_ghz(1.2, 0.0), ValidationError);
  EXPECT_THROW(make_w(0.2, 0.5, 0.3, 0, 0), ValidationError);
  EXPECT_THROW(make_w(0.5, 0.3, 0.3, 0, 0), ValidationError);
  EXPECT_THROW(make_bisep(0.7, Pair::BC), ValidationError);
  LocalBases bad = computational_bases();
  bad[1] *= 2.0;
  EXPECT_THROW(make_ghz(0.6, 0.0, bad), ValidationError);
}

TEST(GapTable, GhzRow) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const double lmax = uniform(rng, 0.5, 1.0);
    const auto psi = make_ghz(lmax, uniform(rng, 0, 2 * kPi), random_local_bases(rng));
    const double g = 2 * (1 - lmax);
    expect_signature(gap_signature(psi), {g, g, g});
  }
}

TEST(GapTable, HeavyWRow) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto [l1, l2, l3] = w_weights(rng, true);
    const auto psi = make_w(l1, l2, l3, uniform(rng, 0, 2 * kPi), uniform(rng, 0, 2 * kPi), random_local_bases(rng));
    expect_signature(gap_signature(psi), {2 * l3, 2 * l2, 2 * (l2 + l3)});
  }
}

TEST(GapTable, LightWRow) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto [l1, l2, l3] = w_weights(rng, false);
    const auto psi = make_w(l1, l2, l3, uniform(rng, 0, 2 * kPi), uniform(rng, 0, 2 * kPi), random_local_bases(rng));
    expect_signature(gap_signature(psi), {2 * l3, 2 * l2, 2 * l1});
  }
}

TEST(GapTable, WRowsAgreeAtBoundary) {
  const auto psi = make_w(0.5, 0.3, 0.2, 0, 0);
  expect_signature(gap_signature(psi), {0.4, 0.6, 1.0});
}

TEST(GapTable, BiseparableRows) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const double p = uniform(rng, 0.0, 0.5);
    const auto bases = random_local_bases(rng);
    expect_signature(gap_signature(make_bisep(p, Pair::AB, bases)), {2 * p, 2 * p, 0});
    expect_signature(gap_signature(make_bisep(p, Pair::AC, bases)), {2 * p, 0, 2 * p});
    expect_signature(gap_signature(make_bisep(p, Pair::BC, bases)), {0, 2 * p, 2 * p});
  }
}

TEST(GapTable, ProductRow) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) expect_signature(gap_signature(make_product(random_local_bases(rng))), {0, 0, 0});
}

TEST(CutGap, MatchesTwiceMinorSchmidtWeight) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const auto psi = random_pure({2, 2, 2}, rng);
    const auto rho = DensityMatrix::from_pure(psi).matrix();
    const auto ra = oracle::trace_out_second(rho, 2, 4);
    const double lmin = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(ra).eigenvalues()(0);
    EXPECT_NEAR(cut_gap(psi, Cut::A_BC), 2 * lmin, 1e-10);
  }
}

TEST(Monogamy, QubitEquality) {
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const auto m = monogamy_decompose(random_pure({2, 2, 2}, rng));
    EXPECT_NEAR(m.lhs, m.gap_ab + m.gap_ac, 1e-9);
  }
}

TEST(Monogamy, HigherDimensionalInequality) {
  Rng rng(8);
  for (const Dims& dims : {Dims{3, 3, 3}, Dims{2, 3, 4}}) {
    for (int t = 0; t < 200; ++t) {
      const auto m = monogamy_decompose(random_pure(dims, rng));
      EXPECT_LE(m.lhs, m.gap_ab + m.gap_ac + 1e-9);
    }
  }
}

TEST(Monogamy, BalancedWConcentratesOnAB) {
  const auto m = monogamy_decompose(make_w(0.5, 0.5, 0.0, 0, 0));
  EXPECT_NEAR(m.gap_ac, 0.0, 1e-12);
  EXPECT_NEAR(m.lhs, m.gap_ab, 1e-12);
}

TEST(Monogamy, MarginalPassiveEnergyOrdering) {
  Rng rng(9);
  for (const Dims& dims : {Dims{2, 2, 2}, Dims{3, 3, 3}, Dims{2, 3, 4}}) {
    for (int t = 0; t < 200; ++t) {
      const auto psi = random_pure(dims, rng);
      const std::array<std::size_t, 1> a{0};
      const std::array<std::size_t, 2> bc{1, 2};
      const auto ha = Hamiltonian::ladder(dims[0]);
      const auto hbc = Hamiltonian::local_sum(Hamiltonian::ladder(dims[1]), Hamiltonian::ladder(dims[2]));
      const double ea = passive_energy(partial_trace(psi, a).spectrum(), ha);
      const double ebc = passive_energy(partial_trace(psi, bc).spectrum(), hbc);
      EXPECT_GE(ea, ebc - 1e-10);
      if (dims == Dims{2, 2, 2}) EXPECT_NEAR(ea, ebc, 1e-10);
    }
  }
}

TEST(DephasedGap, PrintedValues) {
  EXPECT_NEAR(dephased_gap(make_w(1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0), computational_bases()), 1.0 / 3, 1e-10);
  EXPECT_NEAR(dephased_gap(make_ghz(2.0 / 3, 0.0), computational_bases()), 2.0 / 3, 1e-10);
  const std::vector<double> product_diag{1, 0, 0, 0, 0, 0, 0, 0};
  const std::array<std::size_t, 3> dims{2, 2, 2};
  EXPECT_EQ(dephased_gap(product_diag, dims), 0.0);
}

TEST(DephasedGap, FollowsDeclaredLocalBases) {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const auto bases = random_local_bases(rng);
    EXPECT_NEAR(dephased_gap(make_w(1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, bases), bases), 1.0 / 3, 1e-10);
    EXPECT_NEAR(dephased_gap(make_ghz(2.0 / 3, 1.0, bases), bases), 2.0 / 3, 1e-10);
  }
}

TEST(DephasedGap, DiagonalDensityInput) {
  std::vector<double> p(8, 0.0);
  p[1] = p[2] = p[4] = 1.0 / 3;
  const auto rho = DensityMatrix::diagonal(p, {2, 2, 2});
  EXPECT_NEAR(dephased_gap(rho, computational_bases()), 1.0 / 3, 1e-12);
  const DensityMatrix coherent = DensityMatrix::from_pure(make_ghz(0.5, 0.0)).with_dims({2, 2, 2});
  EXPECT_THROW(dephased_gap(coherent, computational_bases()), ValidationError);
}

TEST(DephasedGap, MatchesDirectPassiveEnergies) {
  // Sum of local passive energies minus the global one, for random diagonals.
  Rng rng(11);
  const std::array<std::size_t, 3> dims{2, 2, 2};
  for (int t = 0; t < 50; ++t) {
    const auto p = random_spectrum(8, rng).probs();
    std::vector<double> joint(p);
    std::shuffle(joint.begin(), joint.end(), rng);
    std::vector<double> e(8);
    for (int i = 0; i < 8; ++i) e[i] = (i >> 2 & 1) + (i >> 1 & 1) + (i & 1);
    double local = 0;
    for (int party = 0; party < 3; ++party) {
      double up = 0;
      for (int i = 0; i < 8; ++i)
        if (i >> (2 - party) & 1) up += joint[i];
      local += std::min(up, 1 - up);
    }
    EXPECT_NEAR(dephased_gap(joint, dims), local - oracle::brute_passive_energy(joint, e), 1e-12);
  }
}

TEST(Classify, TableFamilies) {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const auto bases = random_local_bases(rng);
    const auto [l1, l2, l3] = w_weights(rng, t % 2 == 0);
    if (std::abs(l2 - l3) > 1e-3 && std::abs(l1 - l2) > 1e-3 && l3 > 1e-3) {
      EXPECT_EQ(classify(make_w(l1, l2, l3, 0.3, 0.7, bases)).label, ClassLabel::W);
    }
    const double p = uniform(rng, 0.05, 0.5);
    EXPECT_EQ(classify(make_bisep(p, Pair::AB, bases)).label, ClassLabel::BisepAB_C);
    EXPECT_EQ(classify(make_bisep(p, Pair::AC, bases)).label, ClassLabel::BisepAC_B);
    EXPECT_EQ(classify(make_bisep(p, Pair::BC, bases)).label, ClassLabel::BisepBC_A);
    EXPECT_EQ(classify(make_product(bases)).label, ClassLabel::Product);
    const double lmax = uniform(rng, 0.55, 0.95);
    EXPECT_EQ(classify(make_ghz(lmax, 0.4, bases)).label, ClassLabel::GHZ);
  }
}

TEST(Classify, DephasedGapSeparatesEqualSignatures) {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto bases = random_local_bases(rng);
    const auto w = classify(make_w(1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, bases));
    const auto g = classify(make_ghz(2.0 / 3, 0.0, bases));
    expect_signature(w.signature, {2.0 / 3, 2.0 / 3, 2.0 / 3});
    expect_signature(g.signature, {2.0 / 3, 2.0 / 3, 2.0 / 3});
    EXPECT_EQ(w.label, ClassLabel::W);
    EXPECT_EQ(g.label, ClassLabel::GHZ);
    ASSERT_TRUE(w.dephased_gap && g.dephased_gap);
    EXPECT_NEAR(*w.dephased_gap, 1.0 / 3, 1e-9);
    EXPECT_NEAR(*g.dephased_gap, 2.0 / 3, 1e-9);
    EXPECT_FALSE(w.rule.empty());
  }
}

TEST(Classify, MaximallyMixedMarginalsNeedDeclaredBases) {
  Rng rng(14);
  const auto bases = random_local_bases(rng);
  const auto psi = make_ghz(0.5, 0.0, bases);
  EXPECT_EQ(classify(psi).label, ClassLabel::AmbiguousGHZorW);
  EXPECT_EQ(classify(psi, kGapZeroTol, bases).label, ClassLabel::GHZ);
}

TEST(Classify, OutsideCanonicalFamiliesIsAmbiguous) {
  Rng rng(15);
  int ambiguous = 0;
  for (int t = 0; t < 20; ++t) ambiguous += classify(random_pure({2, 2, 2}, rng)).label == ClassLabel::AmbiguousGHZorW;
  EXPECT_EQ(ambiguous, 20);
  EXPECT_EQ(to_string(ClassLabel::BisepBC_A), "BisepBC_A");
}

}  // namespace
}  // namespace ergo
