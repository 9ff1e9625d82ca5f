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

// Built-in algebras and relations.
//
//   s2     ({0,1}, join)
//   m2     ({0,1}, majority)
//   z2     ({0,1}, x - y + z)
//   proj2  ({0,1}, first projection)
//   c3     ({0,1,2}, join of 0 < 1 < 2)
//   rps3   ({0,1,2}, rock-paper-scissors: the winner of x, y)
//   z2t    z2 with an absorbing element 2
//   m2t    m2 with an absorbing element 2

#ifndef ALGGRAPH_CORPUS_HPP_
#define ALGGRAPH_CORPUS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alggraph/algebra.hpp"

namespace alggraph {

  std::vector<FiniteAlgebra>   corpus_algebras();
  std::optional<FiniteAlgebra> corpus_algebra(std::string const& name);

  struct CorpusRelation {
    std::string    name;
    nlohmann::json document;
  };
  // Relation documents that refer to corpus algebras by name.
  std::vector<CorpusRelation> corpus_relations();

  // Writes dir/corpus/<name>.json and dir/rel/<name>.json.
  void write_corpus(std::filesystem::path const& dir);

}  // namespace alggraph

#endif  // ALGGRAPH_CORPUS_HPP_
