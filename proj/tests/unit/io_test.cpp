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

#include <filesystem>

#include <gtest/gtest.h>

#include "alggraph/caps.hpp"
#include "alggraph/error.hpp"
#include "alggraph/io.hpp"
#include "support.hpp"

namespace alggraph {
  namespace {

    using testing::named;

    ErrorKind kind_of(std::function<void()> const& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      ADD_FAILURE() << "no error raised";
      return ErrorKind::precondition;
    }

    std::filesystem::path scratch(std::string const& name) {
      auto dir = std::filesystem::temp_directory_path() / ("alggraph_io_test_" + name);
      std::filesystem::remove_all(dir);
      std::filesystem::create_directories(dir);
      return dir;
    }

    std::optional<FiniteAlgebra> no_factors(std::string const&) { return std::nullopt; }

    TEST(Caps, ParsesOverrides) {
      auto c = parse_caps("clone=5000,tuples=100");
      EXPECT_EQ(c.clone, 5000u);
      EXPECT_EQ(c.tuples, 100u);
      EXPECT_EQ(c.coordinates, Caps{}.coordinates);
    }

    TEST(Caps, RejectsUnknownKeysAndBadValues) {
      EXPECT_EQ(kind_of([] { parse_caps("colors=3"); }), ErrorKind::parse);
      EXPECT_EQ(kind_of([] { parse_caps("clone=lots"); }), ErrorKind::parse);
    }

    TEST(AlgebraJson, RoundTripsCorpus) {
      for (auto const& a : corpus_algebras()) {
        auto b = algebra_from_json(to_json(a));
        EXPECT_EQ(a, b);
        EXPECT_EQ(b.name(), a.name());
      }
    }

    TEST(AlgebraJson, ReportsErrors) {
      EXPECT_EQ(kind_of([] { algebra_from_json(Json::parse(R"({"size": 2})")); }),
                ErrorKind::parse);
      EXPECT_EQ(kind_of([] {
                  algebra_from_json(Json::parse(
                      R"({"name":"c","size":2,"operations":[{"name":"f","arity":2,"table":[0,0,0,0]}]})"));
                }),
                ErrorKind::non_idempotent);
    }

    TEST(RelationJson, TuplesAndGenerators) {
      auto resolve = [](std::string const& n) { return corpus_algebra(n); };
      auto r       = relation_from_json(
          Json::parse(R"({"factors":["s2","s2"],"arity":2,"generators":[[0,1],[1,0]]})"), resolve, {});
      EXPECT_EQ(r.size(), 3u);
      auto t = relation_from_json(
          Json::parse(R"({"factors":["s2","s2"],"arity":2,"tuples":[[0,0],[1,1]]})"), resolve, {});
      EXPECT_EQ(t.size(), 2u);
      auto back = relation_from_json(to_json(r), no_factors, {});
      EXPECT_EQ(testing::tuple_set(back), testing::tuple_set(r));
    }

    TEST(RelationJson, ReportsErrors) {
      auto resolve = [](std::string const& n) { return corpus_algebra(n); };
      EXPECT_EQ(kind_of([&] {
                  relation_from_json(Json::parse(R"({"factors":["s2"],"arity":1,"tuples":[[0]],
                                                     "generators":[[0]]})"),
                                     resolve, {});
                }),
                ErrorKind::parse);
      EXPECT_EQ(kind_of([&] {
                  relation_from_json(Json::parse(R"({"factors":["nope"],"arity":1,"tuples":[[0]]})"),
                                     resolve, {});
                }),
                ErrorKind::parse);
      EXPECT_EQ(kind_of([&] {
                  relation_from_json(Json::parse(R"({"factors":["s2"],"arity":1,"tuples":[[2]]})"), resolve,
                                     {});
                }),
                ErrorKind::parse);
      EXPECT_EQ(kind_of([&] {
                  relation_from_json(Json::parse(R"({"factors":["s2"],"tuples":[[0]]})"), resolve,
                                     {});
                }),
                ErrorKind::parse);
      EXPECT_EQ(kind_of([&] {
                  relation_from_json(
                      Json::parse(R"({"factors":["s2"],"arity":2,"tuples":[[0,0]]})"), resolve, {});
                }),
                ErrorKind::parse);
      Caps caps;
      caps.coordinates = 1;
      EXPECT_EQ(kind_of([&] {
                  relation_from_json(Json::parse(R"({"factors":["s2","s2"],"arity":2,"tuples":[[0,0]]})"),
                                     resolve, caps);
                }),
                ErrorKind::cap_exceeded);
    }

    TEST(ExitCodes, FollowVerdicts) {
      EXPECT_EQ(exit_code(Verdict::pass), 0);
      EXPECT_EQ(exit_code(Verdict::fail), 1);
      EXPECT_EQ(exit_code(Verdict::inapplicable), 2);
    }

    TEST(Files, MissingFileIsAnIoError) {
      EXPECT_EQ(kind_of([] { read_json("/nonexistent/alggraph.json"); }), ErrorKind::io);
    }

    TEST(Files, InvalidJsonIsAParseError) {
      auto dir = scratch("invalid");
      write_text(dir / "bad.json", "{ nope");
      EXPECT_EQ(kind_of([&] { read_json(dir / "bad.json"); }), ErrorKind::parse);
    }

    TEST(Files, DumpIsIndentedWithNewline) {
      auto text = dump(Json{{"a", 1}});
      EXPECT_EQ(text, "{\n  \"a\": 1\n}\n");
    }

    TEST(Files, CorpusRoundTrip) {
      auto dir = scratch("corpus");
      write_corpus(dir);
      for (auto const& a : corpus_algebras()) {
        EXPECT_EQ(read_algebra(dir / "corpus" / (a.name() + ".json")), a);
      }
      for (auto const& rel : corpus_relations()) {
        auto r = read_relation(dir / "rel" / (rel.name + ".json"), {});
        EXPECT_GT(r.size(), 0u) << rel.name;
        EXPECT_TRUE(r.is_closed()) << rel.name;
      }
    }

    TEST(Files, FactorsResolveFromNeighbouringCorpus) {
      // A factor file next to the relation shadows the built-in corpus.
      auto dir = scratch("resolve");
      auto a   = testing::binary("s2", 2, {0, 0, 0, 1});
      write_text(dir / "s2.json", dump(to_json(a)));
      write_text(dir / "r.json", R"({"factors":["s2"],"arity":1,"tuples":[[0],[1]]})");
      EXPECT_EQ(read_relation(dir / "r.json", {}).factor(0), a);
    }

    TEST(GraphJson, HasComponents) {
      auto         s = named("s2");
      ClassContext k({s});
      auto         j = to_json(analyze(Realization::of_base(s, 0), k, Mode::exact));
      EXPECT_EQ(j["size"], 2);
      EXPECT_EQ(j["max"], Json::array({1}));
      EXPECT_EQ(j["thin_edges"].size(), 1u);
    }

  }  // namespace
}  // namespace alggraph
