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

#include <gtest/gtest.h>

#include "alggraph/edges.hpp"
#include "alggraph/error.hpp"
#include "alggraph/random.hpp"
#include "support.hpp"

namespace alggraph {
  namespace {

    using testing::named;

    TEST(ClassifyPair, TwoElementAlgebras) {
      EXPECT_EQ(classify_pair(named("s2"), 0, 1).type, EdgeType::semilattice);
      EXPECT_EQ(classify_pair(named("m2"), 0, 1).type, EdgeType::majority);
      EXPECT_EQ(classify_pair(named("z2"), 0, 1).type, EdgeType::affine);
      EXPECT_EQ(classify_pair(named("proj2"), 0, 1).type, EdgeType::unary);
    }

    TEST(ClassifyPair, SemilatticeWitnessIsEqualityAndJoin) {
      auto rec = classify_pair(named("s2"), 0, 1);
      ASSERT_EQ(rec.witnesses.size(), 1u);
      auto const& w = rec.witnesses[0];
      EXPECT_TRUE(w.theta.is_equality());
      ASSERT_TRUE(w.term.has_value());
      EXPECT_EQ(w.term->table(named("s2")), (std::vector<Elem>{0, 1, 1, 1}));
      EXPECT_FALSE(rec.mixed);
    }

    TEST(ClassifyPair, MajorityWitnessTermIsMajority) {
      auto m   = named("m2");
      auto rec = classify_pair(m, 0, 1);
      ASSERT_FALSE(rec.witnesses.empty());
      auto t = rec.witnesses[0].term->table(m);
      EXPECT_EQ(t, m.op(0).table);
    }

    TEST(ClassifyPair, SameElementIsAPreconditionError) {
      EXPECT_THROW(classify_pair(named("s2"), 1, 1), Error);
    }

    TEST(ClassifyPair, ChainEdgesAreSemilattice) {
      auto c = named("c3");
      for (Elem a = 0; a < 3; ++a) {
        for (Elem b = a + 1; b < 3; ++b) {
          auto rec = classify_pair(c, a, b);
          EXPECT_EQ(rec.type, EdgeType::semilattice);
          EXPECT_EQ(testing::member_set(rec.subalgebra), (std::set<Elem>{a, b}));
        }
      }
    }

    TEST(ClassifyPair, MixedTypesAreFlagged) {
      // In m2t x m2t the pair (0,1),(1,2) generates {(0,1),(0,2),(1,2)}. The
      // first projection kernel gives a majority quotient, the second a
      // semilattice one.
      auto m = named("m2t");
      auto p = direct_product(m, m, 100000);
      auto rec = classify_pair(p, 0 * 3 + 1, 1 * 3 + 2);
      EXPECT_TRUE(rec.mixed);
      EXPECT_EQ(rec.type, EdgeType::semilattice);
      bool majority = false;
      for (auto const& w : rec.witnesses) {
        majority = majority || w.type == EdgeType::majority;
      }
      EXPECT_TRUE(majority);
    }

    TEST(EdgeGraph, TwoElementCounts) {
      auto s = edge_graph(named("s2"));
      ASSERT_EQ(s.size(), 1u);
      EXPECT_EQ(s[0].type, EdgeType::semilattice);
      EXPECT_TRUE(omits_type1(named("s2")));
      auto z = edge_graph(named("z2"));
      ASSERT_EQ(z.size(), 1u);
      EXPECT_EQ(z[0].type, EdgeType::affine);
      EXPECT_TRUE(omits_type1(named("z2")));
      EXPECT_FALSE(omits_type1(named("proj2")));
    }

    TEST(EdgeGraph, ListsEveryUnorderedPair) {
      auto e = edge_graph(named("rps3"));
      ASSERT_EQ(e.size(), 3u);
      for (auto const& r : e) {
        EXPECT_LT(r.a, r.b);
        EXPECT_EQ(r.type, EdgeType::semilattice);
      }
    }

    TEST(Smooth, CorpusAlgebrasAreSmooth) {
      for (std::string name : {"s2", "m2", "z2", "c3", "rps3", "m2t", "z2t"}) {
        EXPECT_TRUE(is_smooth(named(name)).smooth) << name;
      }
    }

    TEST(Smooth, ViolationsAreGenuine) {
      // Random search for non-smooth algebras; each reported violation must
      // be an operation leaving the union of the two classes.
      RandomSource rng(7);
      int          found = 0;
      for (int trial = 0; trial < 300 && found < 20; ++trial) {
        auto a   = random_algebra(rng, 3, {2}, "r");
        auto rep = is_smooth(a);
        if (rep.smooth) {
          EXPECT_TRUE(rep.violations.empty());
          continue;
        }
        ++found;
        ASSERT_FALSE(rep.violations.empty());
        for (auto const& v : rep.violations) {
          for (Elem x : v.args) {
            EXPECT_TRUE(v.classes.contains(x));
          }
          EXPECT_FALSE(v.classes.contains(a.apply(v.op, v.args)));
        }
      }
      EXPECT_GT(found, 0);
    }

    TEST(Abelian, AffineYesSemilatticeNo) {
      EXPECT_TRUE(is_abelian(named("z2"), 1000000));
      EXPECT_FALSE(is_abelian(named("s2"), 1000000));
      EXPECT_FALSE(is_abelian(named("m2"), 1000000));
    }

    TEST(Maltsev, FoundOnlyWhereItExists) {
      auto z = named("z2");
      auto t = maltsev_term(z, 100000);
      ASSERT_TRUE(t.has_value());
      auto table = t->table(z);
      EXPECT_EQ(table, testing::tabulate(2, 3, [](std::vector<Elem> const& p) {
                  return static_cast<Elem>(p[0] ^ p[1] ^ p[2]);
                }));
      EXPECT_FALSE(maltsev_term(named("s2"), 100000).has_value());
    }

    TEST(EdgeTypeNames, RoundTrip) {
      for (auto t : {EdgeType::semilattice, EdgeType::majority, EdgeType::affine, EdgeType::unary}) {
        EXPECT_EQ(edge_type_from_string(to_string(t)), t);
      }
    }

  }  // namespace
}  // namespace alggraph
