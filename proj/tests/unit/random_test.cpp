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

#include <map>

#include <gtest/gtest.h>

#include "alggraph/edges.hpp"
#include "alggraph/error.hpp"
#include "alggraph/random.hpp"
#include "support.hpp"

namespace alggraph {
  namespace {

    TEST(RandomSpec, ParsesEveryKey) {
      auto s = parse_random_spec(
          "size=2..3,ops=2+3,filter=smooth+omits1+exact+subdirect,rel-arity=2..4,gens=1..3");
      EXPECT_EQ(s.min_size, 2u);
      EXPECT_EQ(s.max_size, 3u);
      EXPECT_EQ(s.arities, (std::vector<std::size_t>{2, 3}));
      EXPECT_TRUE(s.smooth && s.omits_type1 && s.exact && s.subdirect);
      EXPECT_EQ(s.max_rel_arity, 4u);
      EXPECT_EQ(parse_random_spec(s.to_string()).to_string(), s.to_string());
    }

    TEST(RandomSpec, RejectsBadInput) {
      auto kind = [](std::string const& text) {
        try {
          parse_random_spec(text);
        } catch (Error const& e) {
          return e.kind();
        }
        return ErrorKind::io;
      };
      EXPECT_EQ(kind("colour=3"), ErrorKind::parse);
      EXPECT_EQ(kind("filter=pretty"), ErrorKind::parse);
      EXPECT_EQ(kind("size=x"), ErrorKind::parse);
      EXPECT_EQ(kind("size=3..2"), ErrorKind::precondition);
    }

    TEST(Source, StaysInRangeAndCoversIt) {
      RandomSource          rng(1);
      std::map<std::uint64_t, int> seen;
      for (int i = 0; i < 6000; ++i) {
        auto x = rng.below(6);
        ASSERT_LT(x, 6u);
        ++seen[x];
      }
      EXPECT_EQ(seen.size(), 6u);
      for (auto [v, c] : seen) {
        EXPECT_GT(c, 800) << v;
      }
    }

    TEST(RandomAlgebra, TwoElementBinaryHasFourTables) {
      RandomSource                rng(2);
      std::set<std::vector<Elem>> tables;
      for (int i = 0; i < 200; ++i) {
        auto a = random_algebra(rng, 2, {2}, "r");
        EXPECT_EQ(a.op(0).table[0], 0u);
        EXPECT_EQ(a.op(0).table[3], 1u);
        tables.insert(a.op(0).table);
      }
      EXPECT_EQ(tables.size(), 4u);
    }

    TEST(Stream, SameSeedSameStream) {
      auto spec = parse_random_spec("size=2..3,ops=2,filter=smooth+omits1,rel-arity=2..3");
      InstanceStream a(spec, 99), b(spec, 99);
      for (int i = 0; i < 10; ++i) {
        auto x = a.next_algebra(), y = b.next_algebra();
        EXPECT_EQ(x, y);
        EXPECT_EQ(x.name(), y.name());
        EXPECT_EQ(testing::tuple_set(a.next_relation({x})), testing::tuple_set(b.next_relation({y})));
        EXPECT_EQ(a.next_coordinates(4), b.next_coordinates(4));
      }
      EXPECT_EQ(a.drawn(), b.drawn());
    }

    TEST(Stream, FiltersHold) {
      auto           spec = parse_random_spec("size=3,ops=3,filter=omits1");
      InstanceStream s(spec, 5);
      for (int i = 0; i < 10; ++i) {
        EXPECT_TRUE(omits_type1(s.next_algebra()));
      }
      EXPECT_EQ(s.accepted(), 10u);
      EXPECT_GE(s.drawn(), 10u);
    }

    TEST(Stream, SubdirectRelations) {
      auto           spec = parse_random_spec("size=3,rel-arity=2..4,filter=subdirect");
      InstanceStream s(spec, 6);
      auto           a = s.next_algebra();
      for (int i = 0; i < 20; ++i) {
        auto r = s.next_relation({a});
        EXPECT_TRUE(r.is_subdirect());
        EXPECT_GE(r.arity(), 2u);
        EXPECT_LE(r.arity(), 4u);
      }
    }

    TEST(Stream, StarvationReportsRate) {
      // Smooth ternary 3-element algebras are rare, and a budget of one
      // rejection gives up at the first rejected draw.
      auto spec = parse_random_spec("size=3,ops=3,filter=smooth+omits1+exact");
      Caps caps;
      caps.rejection = 1;
      InstanceStream s(spec, 8, caps);
      try {
        for (int i = 0; i < 100; ++i) {
          s.next_algebra();
        }
        FAIL();
      } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::filter_starvation);
        EXPECT_NE(std::string(e.what()).find("rate"), std::string::npos);
      }
    }

    TEST(Stream, CoordinatesAreNonemptySortedSubsets) {
      InstanceStream s(RandomSpec{}, 10);
      for (int i = 0; i < 50; ++i) {
        auto c = s.next_coordinates(4);
        ASSERT_FALSE(c.empty());
        EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
        EXPECT_LT(c.back(), 4u);
      }
    }

  }  // namespace
}  // namespace alggraph
