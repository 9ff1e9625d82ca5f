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

#include "alggraph/congruence.hpp"
#include "alggraph/random.hpp"
#include "alggraph/verify.hpp"
#include "support.hpp"

namespace alggraph {
  namespace {

    using testing::named;
    using testing::relation;

    Report connectivity(std::string const& name) {
      return verify_connectivity(named(name), Caps{}, Mode::exact);
    }

    void expect_no_failures(std::vector<Report> const& reports, std::string const& what) {
      for (auto const& r : reports) {
        EXPECT_NE(r.verdict, Verdict::fail) << what << " " << r.kind << " " << r.instance;
      }
    }

    TEST(Report, FinishPrecedence) {
      Report r;
      r.add("main");
      r.add("side").fail({{"x", 1}});
      r.finish();
      EXPECT_EQ(r.verdict, Verdict::fail);

      Report i;
      i.add("main").inapplicable("h");
      i.add("side");
      i.finish();
      EXPECT_EQ(i.verdict, Verdict::inapplicable);

      Report h;
      h.failed_hypotheses.push_back("h");
      h.add("main");
      h.finish();
      EXPECT_EQ(h.verdict, Verdict::inapplicable);

      Report p;
      p.add("main");
      p.add("side").inapplicable("h");
      p.finish();
      EXPECT_EQ(p.verdict, Verdict::pass);
    }

    TEST(Report, CounterexamplesAreBounded) {
      Check c;
      for (std::size_t i = 0; i < kCounterexampleLimit + 5; ++i) {
        c.fail({{"i", i}});
      }
      EXPECT_EQ(c.failures, kCounterexampleLimit + 5);
      EXPECT_EQ(c.counterexamples.size(), kCounterexampleLimit);
      EXPECT_EQ(c.verdict, Verdict::fail);
    }

    TEST(Connectivity, TwoElementAlgebrasPass) {
      for (std::string name : {"s2", "m2", "z2"}) {
        EXPECT_EQ(connectivity(name).verdict, Verdict::pass) << name;
      }
    }

    TEST(Connectivity, ProjectionsAreInapplicable) {
      auto r = connectivity("proj2");
      EXPECT_EQ(r.verdict, Verdict::inapplicable);
      EXPECT_FALSE(r.failed_hypotheses.empty());
    }

    TEST(Connectivity, CorpusPasses) {
      for (std::string name : {"c3", "rps3", "m2t", "z2t"}) {
        EXPECT_EQ(connectivity(name).verdict, Verdict::pass) << name;
      }
    }

    TEST(ClassHypotheses, ProjectionsFailTypeOmission) {
      auto h = class_hypotheses(ClassContext({named("proj2")}));
      EXPECT_FALSE(h.omits_type1);
      EXPECT_FALSE(h.holds());
      EXPECT_TRUE(class_hypotheses(ClassContext({named("s2")})).holds());
    }

    TEST(QuotientLifting, FullCongruenceOnS2) {
      auto         s = named("s2");
      ClassContext k({s});
      for (auto c : {LiftingCase::quotient_edge, LiftingCase::quotient_path,
                     LiftingCase::quotient_max}) {
        auto r = verify_quotient_lifting(k, Realization::of_base(s, 0), Partition::full(2), c,
                                         Mode::exact);
        EXPECT_EQ(r.verdict, Verdict::pass) << to_string(c);
      }
    }

    TEST(QuotientLifting, EveryCorpusCongruence) {
      for (auto const& a : corpus_algebras()) {
        ClassContext k({a});
        auto         reports = quotient_lifting_suite(k, Realization::of_base(a, 0), Mode::exact);
        EXPECT_FALSE(reports.empty());
        expect_no_failures(reports, a.name());
      }
    }

    TEST(QuotientLifting, ChainSuiteCoversEveryCongruence) {
      auto         c = named("c3");
      ClassContext k({c});
      auto         reports = quotient_lifting_suite(k, Realization::of_base(c, 0), Mode::exact);
      EXPECT_EQ(reports.size(), 3 * all_congruences(c).size());
    }

    TEST(ProductLifting, SemilatticeOrderMaximal) {
      auto         s = named("s2");
      auto         r = relation({s, s}, {{0, 0}, {0, 1}, {1, 1}});
      ClassContext k({s});
      for (std::size_t i : {0, 1}) {
        auto rep = verify_product_lifting(k, r, {i}, LiftingCase::product_max, Mode::exact);
        EXPECT_EQ(rep.verdict, Verdict::pass);
      }
      auto g = analyze(realize(k, r), k, Mode::exact);
      auto x = realize(k, r);
      Elem top = *x.element_of(std::vector<Elem>{1, 1});
      EXPECT_EQ(g.max, ElementSet(3, {top}));
    }

    TEST(ProductLifting, SquareMaximalComponent) {
      auto         s = named("s2");
      auto         r = relation({s, s}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
      ClassContext k({s});
      auto         rep = verify_as_product(k, r, Mode::exact);
      EXPECT_EQ(rep.verdict, Verdict::pass);
      auto x = realize(k, r);
      auto g = analyze(x, k, Mode::exact);
      EXPECT_EQ(g.max, ElementSet(4, {*x.element_of(std::vector<Elem>{1, 1})}));
    }

    TEST(ProductLifting, NonSubdirectIsInapplicable) {
      auto         s = named("s2");
      auto         r = relation({s, s}, {{0, 1}, {1, 1}});
      ClassContext k({s});
      auto rep = verify_product_lifting(k, r, {0}, LiftingCase::product_edge, Mode::exact);
      EXPECT_EQ(rep.verdict, Verdict::inapplicable);
    }

    TEST(ProductLifting, MixedTypePairsLift) {
      auto m = named("m2t");
      auto r = relation({m, m}, {{0, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
      expect_no_failures(product_lifting_suite(ClassContext({m}), r, Mode::exact), "m2t");
    }

    TEST(ProductLifting, RandomRelationsOverCorpus) {
      RandomSpec     spec = parse_random_spec("rel-arity=2..3,gens=1..3,filter=subdirect");
      InstanceStream stream(spec, 37);
      for (std::string name : {"s2", "m2", "z2", "c3", "rps3", "m2t", "z2t"}) {
        auto         a = named(name);
        ClassContext k({a});
        for (int i = 0; i < 4; ++i) {
          auto r = stream.next_relation({a});
          expect_no_failures(product_lifting_suite(k, r, Mode::exact), name);
        }
      }
    }

    TEST(LiftingCase, NamesRoundTrip) {
      for (auto c : {LiftingCase::quotient_edge, LiftingCase::quotient_path,
                     LiftingCase::quotient_max, LiftingCase::product_edge,
                     LiftingCase::product_path, LiftingCase::product_max,
                     LiftingCase::as_product}) {
        EXPECT_EQ(lifting_case_from_string(to_string(c)), c);
      }
      EXPECT_FALSE(lifting_case_from_string("nope").has_value());
    }

  }  // namespace
}  // namespace alggraph
