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

// Subalgebras of finite products, generated by closure from a set of
// tuples, optionally remembering how each tuple was produced.

#ifndef ALGGRAPH_SUBPOWER_HPP_
#define ALGGRAPH_SUBPOWER_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/tuple_store.hpp"

namespace alggraph {

  inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  // How a tuple entered the closure: either generator number `generator`
  // (op == npos), or operation `op` applied to earlier tuples `args`.
  struct Derivation {
    std::size_t              op        = npos;
    std::size_t              generator = npos;
    std::vector<std::size_t> args;
  };

  struct GenerateOptions {
    bool        track = false;
    std::size_t cap   = 1'000'000;
    // When true, exceeding `cap` raises Error(cap_exceeded); otherwise the
    // result is returned with complete() == false.
    bool throw_on_cap = true;
    // Bound on coordinatewise operation applications; treated like `cap`.
    std::size_t work = std::numeric_limits<std::size_t>::max();
    // Generation halts as soon as a tuple satisfying this predicate is
    // produced (or present among the generators).
    std::function<bool(std::span<Elem const>)> stop_when;
  };

  class Subpower {
   public:
    Subpower() = default;
    explicit Subpower(std::vector<FiniteAlgebra> factors);

    // An explicitly listed relation. Throws Error(precondition) if the
    // tuples are not closed under the operations.
    static Subpower from_tuples(std::vector<FiniteAlgebra>            factors,
                                std::vector<std::vector<Elem>> const& tuples);

    std::vector<FiniteAlgebra> const& factors() const noexcept { return factors_; }
    FiniteAlgebra const& factor(std::size_t i) const { return factors_.at(i); }
    std::size_t          arity() const noexcept { return factors_.size(); }
    std::size_t          size() const noexcept { return store_.size(); }

    std::span<Elem const> tuple(std::size_t i) const { return store_[i]; }
    std::vector<Elem>     tuple_vector(std::size_t i) const {
      auto t = store_[i];
      return {t.begin(), t.end()};
    }
    std::optional<std::size_t> find(std::span<Elem const> t) const { return store_.find(t); }
    bool contains(std::span<Elem const> t) const { return store_.contains(t); }
    bool contains(std::vector<Elem> const& t) const {
      return store_.contains(std::span<Elem const>(t));
    }

    bool                     tracked() const noexcept { return tracked_; }
    Derivation const&        derivation(std::size_t i) const { return derivations_.at(i); }
    // Number of generator tuples supplied (duplicates included).
    std::size_t              number_of_generators() const noexcept { return generators_; }
    bool                     complete() const noexcept { return complete_; }
    std::optional<std::size_t> stopped_at() const noexcept { return stopped_at_; }

    // Coordinates whose projection is the whole factor universe.
    bool is_subdirect() const;
    std::optional<std::size_t> first_non_subdirect_coordinate() const;
    // Closed under every operation (coordinatewise).
    bool is_closed() const;

    std::vector<std::vector<Elem>> tuples() const;

    // Appends a tuple; internal to generation and projection helpers.
    std::pair<std::size_t, bool> add(std::span<Elem const> t, Derivation d, bool track);

   private:
    friend Subpower subpower_generate(std::vector<FiniteAlgebra>,
                                      std::vector<std::vector<Elem>> const&,
                                      GenerateOptions const&);

    std::vector<FiniteAlgebra> factors_;
    TupleStore                 store_;
    std::vector<Derivation>    derivations_;
    std::size_t                generators_ = 0;
    bool                       complete_   = true;
    bool                       tracked_    = false;
    std::optional<std::size_t> stopped_at_;
  };


  // Closure of `generators` under coordinatewise application of the shared
  // operations. Throws Error(signature_mismatch) if factors disagree on
  // names or arities, and Error(precondition) on malformed generators.
  Subpower subpower_generate(std::vector<FiniteAlgebra>            factors,
                             std::vector<std::vector<Elem>> const& generators,
                             GenerateOptions const&                options = {});

  // Recomputes tuple i from its derivation record.
  std::vector<Elem> replay_derivation(Subpower const& r, std::size_t i);

  // Projection onto the listed coordinates (in that order).
  Subpower project(Subpower const& r, std::vector<std::size_t> const& coords);

  // Term over operation symbols and variables x0..x{arity-1}, stored as a
  // DAG so shared subterms are evaluated once.
  class Term {
   public:
    struct Node {
      std::size_t              op  = npos;  // npos for a variable
      std::size_t              var = 0;
      std::vector<std::size_t> children;
    };

    Term() = default;
    Term(std::size_t arity, std::vector<Node> nodes, std::size_t root)
        : arity_(arity), nodes_(std::move(nodes)), root_(root) {}

    std::size_t              arity() const noexcept { return arity_; }
    std::vector<Node> const& nodes() const noexcept { return nodes_; }
    std::size_t              root() const noexcept { return root_; }

    static Term variable(std::size_t arity, std::size_t var);

    Elem evaluate(FiniteAlgebra const& a, std::span<Elem const> args) const;
    // Full operation table of the term on `a`.
    std::vector<Elem> table(FiniteAlgebra const& a) const;
    OpTable           op_table(FiniteAlgebra const& a, std::string name) const;

    std::string to_string(FiniteAlgebra const& signature) const;

   private:
    std::size_t       arity_ = 0;
    std::vector<Node> nodes_;
    std::size_t       root_ = 0;
  };

  // Term built from the derivation records of a tracked subpower; variable
  // i stands for generator i.
  Term extract_term(Subpower const& r, std::size_t tuple_index);

}  // namespace alggraph

#endif  // ALGGRAPH_SUBPOWER_HPP_
