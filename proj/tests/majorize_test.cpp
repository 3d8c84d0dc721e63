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

#include "ergo/majorize.hpp"
#include "ergo/passive.hpp"
#include "oracles.hpp"

namespace ergo {
namespace {

TEST(Majorizes, PureStateDominatesEverything) {
  Rng rng(1);
  const std::vector<double> pure{1, 0, 0};
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(majorizes(pure, random_spectrum(3, rng).probs()));
}

TEST(Majorizes, IncomparableEnergyExample) {
  const std::vector<double> p{0.7, 0.15, 0.15}, q{0.49, 0.49, 0.02};
  EXPECT_FALSE(majorizes(p, q));
  EXPECT_FALSE(majorizes(q, p));
}

TEST(Majorizes, PadsShorterVector) {
  const std::vector<double> p{0.5, 0.5}, q{1.0 / 3, 1.0 / 3, 1.0 / 3};
  EXPECT_TRUE(majorizes(p, q));
  EXPECT_FALSE(majorizes(q, p));
}

TEST(Majorizes, UnsortedInputIsSortedFirst) {
  EXPECT_TRUE(majorizes(std::vector<double>{0.2, 0.8}, std::vector<double>{0.4, 0.6}));
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(Spectrum({0.55, 0.275, 0.125, 0.05}), Spectrum({0.35, 0.35, 0.3, 0.0})),
            Comparability::Incomparable);
  EXPECT_EQ(compare(Spectrum({0.6, 0.4}), Spectrum({0.6, 0.4})), Comparability::Equal);
  EXPECT_EQ(compare(Spectrum({0.8, 0.2}), Spectrum({0.6, 0.4})), Comparability::FirstMajorizes);
  EXPECT_EQ(compare(Spectrum({0.6, 0.4}), Spectrum({0.8, 0.2})), Comparability::SecondMajorizes);
  EXPECT_EQ(compare(Spectrum({0.6, 0.4}), Spectrum({0.6, 0.4, 0.0})), Comparability::Equal);
  EXPECT_EQ(to_string(Comparability::Incomparable), "Incomparable");
}

TEST(MajorizationProperties, AgreesWithConvexFunctionCriterion) {
  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 2 + t % 5;
    const auto p = random_spectrum(d, rng).probs();
    const auto q = t % 2 ? oracle::doubly_stochastic_image(p, rng) : random_spectrum(d, rng).probs();
    EXPECT_EQ(majorizes(p, q), oracle::majorizes_by_convexity(p, q)) << t;
  }
}

TEST(MajorizationProperties, Reflexive) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_spectrum(2 + t % 6, rng);
    EXPECT_EQ(compare(p, p), Comparability::Equal);
  }
}

TEST(MajorizationProperties, Transitive) {
  Rng rng(4);
  int chains = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = 2 + t % 5;
    const auto p = random_spectrum(d, rng).probs();
    const auto q = oracle::doubly_stochastic_image(p, rng);
    const auto r = oracle::doubly_stochastic_image(q, rng);
    ASSERT_TRUE(majorizes(p, q) && majorizes(q, r));
    EXPECT_TRUE(majorizes(p, r));
    ++chains;
  }
  EXPECT_EQ(chains, 500);
}

TEST(MajorizationProperties, RenyiEntropiesAreSchurConcave) {
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto p = random_spectrum(2 + t % 5, rng);
    const Spectrum q(oracle::doubly_stochastic_image(p.probs(), rng));
    ASSERT_TRUE(majorizes(p, q));
    for (double a : {0.0, 0.5, 1.0, 2.0, kInfinity}) {
      EXPECT_LE(renyi_entropy(p, a), renyi_entropy(q, a) + 1e-9) << "alpha=" << a;
    }
  }
}

TEST(MajorizationSlack, SignMatchesRelation) {
  EXPECT_GE(majorization_slack(std::vector<double>{0.8, 0.2}, std::vector<double>{0.6, 0.4}), 0.0);
  EXPECT_LT(majorization_slack(std::vector<double>{0.6, 0.4}, std::vector<double>{0.8, 0.2}), 0.0);
}

}  // namespace
}  // namespace ergo
