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

// Finite idempotent algebras given by explicit operation tables.
//
// Tables are row-major with the leftmost argument most significant:
// the value of f(x_0, ..., x_{k-1}) is stored at index
// sum_i x_i * n^(k-1-i).

#ifndef ALGGRAPH_ALGEBRA_HPP_
#define ALGGRAPH_ALGEBRA_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alggraph/types.hpp"

namespace alggraph {

  class Partition;

  struct OpTable {
    std::string       name;
    std::size_t       arity = 0;
    std::vector<Elem> table;

    friend bool operator==(OpTable const&, OpTable const&) = default;
  };

  // Unvalidated description, as read from a file or built by hand.
  struct RawAlgebra {
    std::string          name;
    std::size_t          size = 0;
    std::vector<OpTable> operations;
  };

  // Index of the point (x_0, ..., x_{k-1}) in a row-major table over n.
  std::size_t table_index(std::size_t n, std::span<Elem const> args) noexcept;

  // Inverse of table_index.
  std::vector<Elem> table_point(std::size_t n, std::size_t arity, std::size_t index);

  std::size_t checked_power(std::size_t n, std::size_t k, std::size_t limit);

  class FiniteAlgebra {
   public:
    FiniteAlgebra() = default;

    // Validates: table lengths, value ranges, idempotence, unique names.
    // Throws Error(malformed_table | non_idempotent | duplicate_operation).
    FiniteAlgebra(std::string name, std::size_t size, std::vector<OpTable> ops);

    std::string const&          name() const noexcept { return name_; }
    std::size_t                 size() const noexcept { return size_; }
    std::vector<OpTable> const& operations() const noexcept { return ops_; }
    OpTable const&              op(std::size_t i) const { return ops_.at(i); }
    std::size_t number_of_operations() const noexcept { return ops_.size(); }

    Elem apply(std::size_t op, std::span<Elem const> args) const {
      return ops_[op].table[table_index(size_, args)];
    }
    Elem apply(std::size_t op, std::initializer_list<Elem> args) const {
      return apply(op, std::span<Elem const>(args.begin(), args.size()));
    }

    // Same operation names and arities, in the same order.
    bool same_signature(FiniteAlgebra const& other) const noexcept;

    FiniteAlgebra renamed(std::string name) const {
      FiniteAlgebra copy = *this;
      copy.name_         = std::move(name);
      return copy;
    }

    friend bool operator==(FiniteAlgebra const& a, FiniteAlgebra const& b) {
      return a.size_ == b.size_ && a.ops_ == b.ops_;
    }

   private:
    std::string          name_;
    std::size_t          size_ = 0;
    std::vector<OpTable> ops_;
  };

  FiniteAlgebra validate_algebra(RawAlgebra raw);

  // A subuniverse of an algebra of the given size.
  struct Subuniverse {
    std::size_t parent_size = 0;
    ElementSet  members;

    std::size_t size() const { return members.count(); }
    friend bool operator==(Subuniverse const&, Subuniverse const&) = default;
  };

  // Smallest subuniverse containing `seed`. Seed must be nonempty.
  Subuniverse sg_closure(FiniteAlgebra const& a, ElementSet const& seed);
  Subuniverse sg_closure(FiniteAlgebra const& a, std::vector<Elem> const& seed);

  bool is_subuniverse(FiniteAlgebra const& a, ElementSet const& set);

  // The algebra induced on a subuniverse. Element i of the result is
  // `to_parent[i]`; `from_parent` maps parent elements back (or npos).
  struct InducedAlgebra {
    FiniteAlgebra            algebra;
    std::vector<Elem>        to_parent;
    std::vector<std::size_t> from_parent;
  };

  InducedAlgebra induced_subalgebra(FiniteAlgebra const& a,
                                    ElementSet const&    members,
                                    std::string          name = {});

  struct QuotientAlgebra {
    FiniteAlgebra     algebra;
    std::vector<Elem> class_of;        // element -> class
    std::vector<Elem> representative;  // class -> least member
  };

  // A / theta. Throws Error(not_a_congruence) with a witness when theta is
  // not compatible with some operation.
  QuotientAlgebra quotient(FiniteAlgebra const& a, Partition const& theta,
                           std::string name = {});

  // Every operation of `a` acts as a projection.
  bool all_operations_are_projections(FiniteAlgebra const& a);

  // Direct product; elements are encoded row-major over (a, b).
  FiniteAlgebra direct_product(FiniteAlgebra const& a, FiniteAlgebra const& b,
                               std::size_t table_limit);

}  // namespace alggraph

#endif  // ALGGRAPH_ALGEBRA_HPP_
