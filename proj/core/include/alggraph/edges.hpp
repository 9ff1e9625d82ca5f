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

// Thick edges. For a pair a != b with B = Sg{a,b}, every maximal
// congruence theta of B separating a and b is examined on Q = B/theta:
//
//   semilattice  some binary term sends (a,b) and (b,a) into one of the
//                classes a/theta, b/theta
//   majority     some ternary term is a majority operation on the two
//                classes
//   affine       Q has a Mal'tsev term and is abelian
//   set          every basic operation of Q is a projection
//
// The first matching case in that order is the case of theta; the pair's
// type is the strongest case over all theta.

#ifndef ALGGRAPH_EDGES_HPP_
#define ALGGRAPH_EDGES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/caps.hpp"
#include "alggraph/partition.hpp"
#include "alggraph/subpower.hpp"

namespace alggraph {

  enum class EdgeType { semilattice, majority, affine, unary, none };

  char const*             to_string(EdgeType t);
  std::optional<EdgeType> edge_type_from_string(std::string const& s);

  struct EdgeWitness {
    // Congruence of the subalgebra B; block_of maps elements of the whole
    // algebra to blocks (npos outside B).
    Partition                theta;
    std::vector<std::size_t> block_of;
    EdgeType                 type = EdgeType::none;
    // Witnessing term (binary for semilattice, ternary otherwise); empty
    // for the set case.
    std::optional<Term> term;
  };

  struct EdgeRecord {
    Elem                     a = 0;
    Elem                     b = 0;
    ElementSet               subalgebra;
    std::vector<EdgeWitness> witnesses;  // theta with a case, in lattice order
    // Maximal congruences that separate a, b but match no case.
    std::size_t unmatched = 0;
    EdgeType    type      = EdgeType::none;
    // Witnesses of more than one type were found.
    bool mixed = false;

    bool is_edge() const noexcept { return type != EdgeType::none; }
  };

  // Throws Error(precondition) if a == b. Throws Error(cap_exceeded) if an
  // indicator subpower grows past caps.tuples.
  EdgeRecord classify_pair(FiniteAlgebra const& a, Elem x, Elem y, Caps const& caps = {});

  // Every unordered pair {x, y}, x < y.
  std::vector<EdgeRecord> edge_graph(FiniteAlgebra const& a, Caps const& caps = {});

  // No quotient of a two-generated subalgebra by a maximal congruence
  // separating the generators is a set.
  bool omits_type1(FiniteAlgebra const& a, Caps const& caps = {});
  bool omits_type1(std::vector<EdgeRecord> const& edges);

  struct SmoothnessViolation {
    Elem              a = 0;
    Elem              b = 0;
    Partition         theta;  // over Sg{a,b}
    ElementSet        classes;  // a/theta union b/theta
    std::size_t       op = 0;
    std::vector<Elem> args;
  };

  struct SmoothnessReport {
    bool                             smooth = true;
    std::vector<SmoothnessViolation> violations;
  };

  SmoothnessReport is_smooth(FiniteAlgebra const& a, Caps const& caps = {});
  SmoothnessReport is_smooth(FiniteAlgebra const& a, std::vector<EdgeRecord> const& edges);

  // Q abelian: the diagonal is a block of the congruence of Q^2 it generates.
  bool is_abelian(FiniteAlgebra const& q, std::size_t table_limit);

  // Some ternary term is Mal'tsev on q; the term is returned.
  std::optional<Term> maltsev_term(FiniteAlgebra const& q, std::size_t tuple_cap);

}  // namespace alggraph

#endif  // ALGGRAPH_EDGES_HPP_
