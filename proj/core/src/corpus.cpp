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

#include "alggraph/corpus.hpp"

#include <algorithm>
#include <functional>

#include "alggraph/error.hpp"
#include "alggraph/io.hpp"

namespace alggraph {

  namespace {

    OpTable tabulate(std::string name, std::size_t n, std::size_t arity,
                     std::function<Elem(std::vector<Elem> const&)> const& f) {
      OpTable     op{std::move(name), arity, {}};
      std::size_t cells = checked_power(n, arity, std::size_t{1} << 20);
      for (std::size_t i = 0; i < cells; ++i) {
        op.table.push_back(f(table_point(n, arity, i)));
      }
      return op;
    }

    Elem majority(Elem x, Elem y, Elem z) { return (x == y || x == z) ? x : y; }

  }  // namespace

  std::vector<FiniteAlgebra> corpus_algebras() {
    std::vector<FiniteAlgebra> out;
    out.emplace_back("s2", 2, std::vector{tabulate("f", 2, 2, [](auto const& v) {
                       return std::max(v[0], v[1]);
                     })});
    out.emplace_back("m2", 2, std::vector{tabulate("m", 2, 3, [](auto const& v) {
                       return majority(v[0], v[1], v[2]);
                     })});
    out.emplace_back("z2", 2, std::vector{tabulate("m", 2, 3, [](auto const& v) {
                       return v[0] ^ v[1] ^ v[2];
                     })});
    out.emplace_back("proj2", 2,
                     std::vector{tabulate("f", 2, 2, [](auto const& v) { return v[0]; })});
    out.emplace_back("c3", 3, std::vector{tabulate("f", 3, 2, [](auto const& v) {
                       return std::max(v[0], v[1]);
                     })});
    // 1 beats 0, 2 beats 1, 0 beats 2.
    out.emplace_back("rps3", 3, std::vector{tabulate("f", 3, 2, [](auto const& v) {
                       if (v[0] == v[1]) {
                         return v[0];
                       }
                       return (v[0] + 1) % 3 == v[1] ? v[1] : v[0];
                     })});
    out.emplace_back("z2t", 3, std::vector{tabulate("m", 3, 3, [](auto const& v) {
                       if (v[0] == 2 || v[1] == 2 || v[2] == 2) {
                         return Elem{2};
                       }
                       return v[0] ^ v[1] ^ v[2];
                     })});
    out.emplace_back("m2t", 3, std::vector{tabulate("m", 3, 3, [](auto const& v) {
                       if (v[0] == 2 || v[1] == 2 || v[2] == 2) {
                         return Elem{2};
                       }
                       return majority(v[0], v[1], v[2]);
                     })});
    return out;
  }

  std::optional<FiniteAlgebra> corpus_algebra(std::string const& name) {
    for (auto& a : corpus_algebras()) {
      if (a.name() == name) {
        return a;
      }
    }
    return std::nullopt;
  }

  std::vector<CorpusRelation> corpus_relations() {
    using J = nlohmann::json;
    return {
        {"parity3",
         {{"factors", {"z2", "z2", "z2"}},
          {"arity", 3},
          {"tuples", J::array({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}})}}},
        {"s2_order",
         {{"factors", {"s2", "s2"}}, {"arity", 2}, {"tuples", {{0, 0}, {0, 1}, {1, 1}}}}},
        {"z2_identity",
         {{"factors", {"z2", "z2"}}, {"arity", 2}, {"tuples", {{0, 0}, {1, 1}}}}},
        {"m2_identity",
         {{"factors", {"m2", "m2"}}, {"arity", 2}, {"tuples", {{0, 0}, {1, 1}}}}},
        {"z2_square",
         {{"factors", {"z2", "z2"}}, {"arity", 2}, {"generators", {{0, 0}, {0, 1}, {1, 0}}}}},
        {"m2_cube",
         {{"factors", {"m2", "m2", "m2"}},
          {"arity", 3},
          {"generators", {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}}}},
        {"rps3_identity",
         {{"factors", {"rps3", "rps3"}}, {"arity", 2}, {"tuples", {{0, 0}, {1, 1}, {2, 2}}}}},
        {"rps3_square",
         {{"factors", {"rps3", "rps3"}}, {"arity", 2}, {"generators", {{0, 1}, {1, 2}, {2, 0}}}}},
        {"rps3_full",
         {{"factors", {"rps3", "rps3"}},
          {"arity", 2},
          {"tuples",
           {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}}}},
        // (x, y, y + 1): a free first coordinate over a bijection block.
        {"rps3_shift3",
         {{"factors", {"rps3", "rps3", "rps3"}},
          {"arity", 3},
          {"tuples",
           {{0, 0, 1}, {0, 1, 2}, {0, 2, 0}, {1, 0, 1}, {1, 1, 2}, {1, 2, 0}, {2, 0, 1},
            {2, 1, 2}, {2, 2, 0}}}}},
    };
  }

  void write_corpus(std::filesystem::path const& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir / "corpus", ec);
    std::filesystem::create_directories(dir / "rel", ec);
    if (ec) {
      throw Error(ErrorKind::io, "cannot create " + dir.string() + ": " + ec.message());
    }
    for (auto const& a : corpus_algebras()) {
      write_text(dir / "corpus" / (a.name() + ".json"), dump(to_json(a)));
    }
    for (auto const& r : corpus_relations()) {
      write_text(dir / "rel" / (r.name + ".json"), dump(r.document));
    }
  }

}  // namespace alggraph
