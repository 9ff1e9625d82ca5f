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

#include "alggraph/graph.hpp"
#include "alggraph/random.hpp"
#include "alggraph/verify.hpp"
#include "support.hpp"

namespace alggraph {
  namespace {

    using testing::named;

    GraphAnalysis graphs_of(FiniteAlgebra const& a) {
      ClassContext k({a});
      return analyze(Realization::of_base(a, 0), k, Mode::exact);
    }

    std::vector<std::vector<bool>> reach_matrix(Digraph const& g) {
      std::size_t                    n = g.size;
      std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
      for (std::size_t v = 0; v < n; ++v) {
        r[v][v] = true;
        for (Elem w : g.out[v]) {
          r[v][w] = true;
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (r[i][k] && r[k][j]) {
              r[i][j] = true;
            }
          }
        }
      }
      return r;
    }

    TEST(Graphs, Semilattice) {
      auto g = graphs_of(named("s2"));
      EXPECT_EQ(g.max, ElementSet(2, {1}));
      EXPECT_EQ(g.amax, ElementSet(2, {1}));
      EXPECT_EQ(g.umax, ElementSet(2, {1}));
      EXPECT_EQ(testing::member_set(g.ft(0)), (std::set<Elem>{0, 1}));
      EXPECT_EQ(testing::member_set(g.ft(1)), (std::set<Elem>{1}));
    }

    TEST(Graphs, Affine) {
      auto g = graphs_of(named("z2"));
      EXPECT_EQ(g.amax, ElementSet(2, {0, 1}));
      EXPECT_EQ(g.scc_as.count(), 1u);
      // No s-edges: two singleton s-components, both maximal.
      EXPECT_EQ(g.scc_s.count(), 2u);
      EXPECT_EQ(g.scc_s.number_of_maximal(), 2u);
      EXPECT_EQ(g.max, ElementSet(2, {0, 1}));
    }

    TEST(Graphs, Majority) {
      auto g = graphs_of(named("m2"));
      EXPECT_EQ(g.umax, ElementSet(2, {0, 1}));
      EXPECT_EQ(g.scc_asm.count(), 1u);
      EXPECT_EQ(g.scc_as.count(), 2u);
      EXPECT_EQ(g.scc_as.number_of_maximal(), 2u);
      EXPECT_EQ(g.amax, ElementSet(2, {0, 1}));
    }

    TEST(Graphs, ChainTopIsMaximal) {
      auto g = graphs_of(named("c3"));
      EXPECT_EQ(g.max, ElementSet(3, {2}));
      auto p = g.path(PathKind::s, 0, 2);
      ASSERT_TRUE(p.has_value());
      EXPECT_EQ(p->front(), 0u);
      EXPECT_EQ(p->back(), 2u);
      EXPECT_FALSE(g.path(PathKind::s, 2, 0).has_value());
      EXPECT_TRUE(g.weakly_connected());
    }

    TEST(Graphs, RockPaperScissorsIsOneComponent) {
      auto g = graphs_of(named("rps3"));
      EXPECT_EQ(g.scc_s.count(), 1u);
      EXPECT_EQ(g.max, ElementSet::full(3));
    }

    TEST(Scc, AgreesWithReachabilityOnRandomDigraphs) {
      RandomSource rng(23);
      for (int trial = 0; trial < 300; ++trial) {
        Digraph g;
        g.size = rng.between(1, 9);
        g.out.assign(g.size, {});
        std::size_t edges = rng.below(3 * g.size);
        for (std::size_t e = 0; e < edges; ++e) {
          g.add(static_cast<Elem>(rng.below(g.size)), static_cast<Elem>(rng.below(g.size)));
        }
        auto c = strongly_connected(g);
        auto r = reach_matrix(g);
        for (std::size_t x = 0; x < g.size; ++x) {
          for (std::size_t y = 0; y < g.size; ++y) {
            EXPECT_EQ(c.component_of[x] == c.component_of[y], r[x][y] && r[y][x]);
          }
        }
        for (std::size_t i = 0; i < c.count(); ++i) {
          Elem x       = c.members[i].front();
          bool maximal = true;
          for (std::size_t y = 0; y < g.size; ++y) {
            maximal = maximal && (!r[x][y] || r[y][x]);
          }
          EXPECT_EQ(c.maximal[i] != 0, maximal);
        }
        for (std::size_t i = 1; i < c.count(); ++i) {
          EXPECT_LT(c.members[i - 1].front(), c.members[i].front());
        }
      }
    }

    TEST(Scc, InducedSubgraphIgnoresOutsideEdges) {
      Digraph g;
      g.size = 3;
      g.out.assign(3, {});
      g.add(0, 1);
      g.add(1, 2);
      auto c = induced_components(g, ElementSet(3, {0, 1}));
      EXPECT_EQ(c.component_of[2], npos);
      ASSERT_EQ(c.count(), 2u);
      EXPECT_FALSE(c.maximal[c.component_of[0]]);
      EXPECT_TRUE(c.maximal[c.component_of[1]]);
    }

    TEST(Dot, RendersEdges) {
      auto dot = to_dot(graphs_of(named("s2")), "s2");
      EXPECT_NE(dot.find("digraph"), std::string::npos);
      EXPECT_NE(dot.find("0 -> 1"), std::string::npos);
    }

    TEST(Reachability, SAgreesWithIteratedCanonicalF) {
      // From a, repeatedly applying f(x, b) for the canonical f stays in Ft(a).
      RandomSpec     spec = parse_random_spec("size=3,ops=2,filter=smooth+omits1+exact");
      InstanceStream stream(spec, 29);
      for (int i = 0; i < 15; ++i) {
        auto         a = stream.next_algebra();
        ClassContext k({a});
        auto         u = find_uniform_ops(k);
        auto         g = analyze(Realization::of_base(a, 0), k, Mode::exact);
        auto const&  f = u.per_base[0][0].table;
        for (Elem x = 0; x < a.size(); ++x) {
          auto ft = g.ft(x);
          for (Elem y = 0; y < a.size(); ++y) {
            EXPECT_TRUE(ft.contains(f[x * a.size() + y]));
          }
        }
      }
    }

  }  // namespace
}  // namespace alggraph
