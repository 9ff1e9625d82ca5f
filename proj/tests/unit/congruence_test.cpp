// Copyright 2026 The alggraph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>

#include <gtest/gtest.h>

#include "alggraph/congruence.hpp"
#include "alggraph/error.hpp"
#include "alggraph/random.hpp"
#include "support.hpp"

namespace alggraph {
  namespace {

    using testing::named;
    using testing::relation;

    TEST(Partition, NormalisesBlockIds) {
      Partition p({3, 3, 7, 3});
      EXPECT_EQ(p.block_ids(), (std::vector<std::size_t>{0, 0, 1, 0}));
      EXPECT_EQ(p.number_of_blocks(), 2u);
      EXPECT_EQ(p.block_of(1), (std::vector<Elem>{0, 1, 3}));
    }

    TEST(Partition, JoinAndMeet) {
      Partition a({0, 0, 1, 2}), b({0, 1, 1, 2});
      EXPECT_EQ(a.join(b), Partition({0, 0, 0, 1}));
      EXPECT_EQ(a.meet(b), Partition::equality(4));
      EXPECT_TRUE(a.meet(b).refines(a));
      EXPECT_TRUE(a.refines(a.join(b)));
      EXPECT_FALSE(a.refines(b));
    }

    TEST(Tolerance, ClosureIsTransitive) {
      Tolerance t(4);
      t.relate(0, 1);
      t.relate(1, 2);
      EXPECT_TRUE(t.related(1, 0));
      EXPECT_FALSE(t.related(0, 2));
      EXPECT_EQ(t.closure(), Partition({0, 0, 0, 1}));
    }

    using Pairs = std::vector<std::pair<Elem, Elem>>;

    TEST(Cg, EmptyGivesEquality) {
      EXPECT_EQ(cg(named("c3"), Pairs{}), Partition::equality(3));
    }

    TEST(Cg, TwoElementsCollapse) {
      EXPECT_EQ(cg(named("z2"), Pairs{{0, 1}}), Partition::full(2));
    }

    TEST(Cg, ChainBottomPair) {
      EXPECT_EQ(cg(named("c3"), Pairs{{0, 1}}), Partition({0, 0, 1}));
    }

    TEST(Cg, ChainOuterPairCollapsesEverything) {
      // 0 ~ 2 gives 0 v 1 = 1 ~ 2 v 1 = 2.
      EXPECT_EQ(cg(named("c3"), Pairs{{0, 2}}), Partition::full(3));
    }

    TEST(Cg, AgreesWithFixpointOnRandomAlgebras) {
      RandomSource rng(21);
      for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = rng.between(2, 4);
        auto        a = random_algebra(rng, n, {2, 3}, "r");
        std::vector<std::pair<Elem, Elem>> pairs;
        std::size_t                        k = rng.between(0, 2);
        for (std::size_t i = 0; i < k; ++i) {
          pairs.emplace_back(static_cast<Elem>(rng.below(n)), static_cast<Elem>(rng.below(n)));
        }
        EXPECT_EQ(cg(a, pairs), testing::naive_cg(a, pairs));
      }
    }

    TEST(Congruences, AffineTwoElementIsSimple) {
      auto z = named("z2");
      auto c = all_congruences(z);
      EXPECT_EQ(c.size(), 2u);
      EXPECT_TRUE(is_simple(z));
    }

    TEST(Congruences, ChainHasFour) {
      auto c = all_congruences(named("c3"));
      std::vector<Partition> expected{Partition::equality(3), Partition({0, 0, 1}),
                                      Partition({0, 1, 1}), Partition::full(3)};
      std::sort(c.begin(), c.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(c, expected);
      EXPECT_FALSE(is_simple(named("c3")));
    }

    TEST(Congruences, ChainCoatoms) {
      auto m = maximal_congruences(named("c3"));
      std::sort(m.begin(), m.end());
      std::vector<Partition> expected{Partition({0, 0, 1}), Partition({0, 1, 1})};
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(m, expected);
    }

    TEST(Congruences, OneElementIsDegenerate) {
      FiniteAlgebra one("one", 1, {OpTable{"f", 2, {0}}});
      EXPECT_EQ(all_congruences(one).size(), 1u);
      EXPECT_FALSE(is_simple(one));
      EXPECT_TRUE(is_degenerate(one));
      EXPECT_TRUE(maximal_congruences(one).empty());
    }

    TEST(Congruences, AgreeWithPartitionScanOnRandomAlgebras) {
      RandomSource rng(31);
      for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = rng.between(1, 4);
        auto        a = random_algebra(rng, n, {2}, "r");
        auto        c = all_congruences(a);
        auto        e = testing::naive_congruences(a);
        std::sort(c.begin(), c.end());
        std::sort(e.begin(), e.end());
        EXPECT_EQ(c, e);
        for (auto const& p : c) {
          EXPECT_TRUE(is_congruence(a, p));
          EXPECT_FALSE(compatibility_witness(a, p).has_value());
        }
      }
    }

    TEST(Congruences, SortedByDecreasingBlockCount) {
      auto c = all_congruences(named("c3"));
      for (std::size_t i = 1; i < c.size(); ++i) {
        EXPECT_GE(c[i - 1].number_of_blocks(), c[i].number_of_blocks());
      }
    }

    TEST(CompatibilityWitness, ReportsViolation) {
      auto a = named("c3");
      auto w = compatibility_witness(a, Partition({0, 1, 0}));
      ASSERT_TRUE(w.has_value());
      Partition p({0, 1, 0});
      EXPECT_FALSE(p.same(a.apply(w->op, w->left), a.apply(w->op, w->right)));
    }

    TEST(Link, IdentityGraphIsNotLinked) {
      auto m = named("m2");
      auto r = relation({m, m}, {{0, 0}, {1, 1}});
      EXPECT_EQ(link_congruence(r, 0), Partition::equality(2));
      EXPECT_FALSE(is_linked(r));
    }

    TEST(Link, FullSquareIsLinked) {
      auto m = named("m2");
      auto r = relation({m, m}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
      EXPECT_TRUE(is_linked(r));
    }

    TEST(Link, SemilatticeOrderIsLinked) {
      auto s = named("s2");
      auto r = relation({s, s}, {{0, 0}, {0, 1}, {1, 1}});
      EXPECT_TRUE(link_tolerance(r, 0).related(0, 1));
      EXPECT_EQ(link_congruence(r, 0), Partition::full(2));
      EXPECT_EQ(link_congruence(r, 1), Partition::full(2));
      EXPECT_TRUE(is_linked(r));
    }

    TEST(Link, NonSubdirectIsRejected) {
      auto s = named("s2");
      auto r = relation({s, s}, {{1, 0}, {1, 1}});
      EXPECT_THROW(link_tolerance(r, 0), Error);
    }

    TEST(Link, ImageAndPreimage) {
      auto s = named("s2");
      auto r = relation({s, s}, {{0, 0}, {0, 1}, {1, 1}});
      EXPECT_EQ(image(r, ElementSet(2, {1})), ElementSet(2, {1}));
      EXPECT_EQ(preimage(r, ElementSet(2, {0})), ElementSet(2, {0}));
    }

  }  // namespace
}  // namespace alggraph
