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

// JSON forms of algebras, relations and reports.
//
// Algebra:  {"name": s, "size": n, "operations": [{"name", "arity", "table"}]}
// Relation: {"factors": [name or algebra], "arity": n,
//            "generators": [[...]] or "tuples": [[...]]}
//
// Object keys are emitted in sorted order, so equal values serialize to
// equal bytes.

#ifndef ALGGRAPH_IO_HPP_
#define ALGGRAPH_IO_HPP_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alggraph/algebra.hpp"
#include "alggraph/edges.hpp"
#include "alggraph/graph.hpp"
#include "alggraph/partition.hpp"
#include "alggraph/subpower.hpp"
#include "alggraph/verify.hpp"

namespace alggraph {

  using Json = nlohmann::json;

  Json          to_json(FiniteAlgebra const& a);
  // Throws Error(parse) on a malformed document and the validation errors
  // of validate_algebra otherwise.
  FiniteAlgebra algebra_from_json(Json const& j);

  Json to_json(Partition const& p);

  // Factors inline, tuples listed.
  Json to_json(Subpower const& r);
  // Resolves a factor given by name.
  using FactorResolver = std::function<std::optional<FiniteAlgebra>(std::string const&)>;
  Subpower relation_from_json(Json const& j, FactorResolver const& resolve, Caps const& caps);

  Json to_json(Check const& c);
  Json to_json(Report const& r);
  // The report's verdict as a process exit code: 0 pass, 1 fail,
  // 2 inapplicable.
  int exit_code(Verdict v);

  Json to_json(EdgeRecord const& e, FiniteAlgebra const& a);
  Json to_json(ThinEdge const& e);
  Json to_json(Components const& c);
  Json to_json(GraphAnalysis const& g);

  // Throws Error(io) on a missing or unreadable file and Error(parse) on
  // invalid JSON.
  Json read_json(std::filesystem::path const& path);
  // Two-space indentation and a trailing newline.
  std::string dump(Json const& j);
  void        write_text(std::filesystem::path const& path, std::string const& text);

  FiniteAlgebra read_algebra(std::filesystem::path const& path);
  // A factor name is read from <dir>/<name>.json or <dir>/../corpus/<name>.json,
  // where <dir> holds the relation file, else taken from the built-in corpus.
  Subpower read_relation(std::filesystem::path const& path, Caps const& caps);

}  // namespace alggraph

#endif  // ALGGRAPH_IO_HPP_
