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

#ifndef ALGGRAPH_CONGRUENCE_HPP_
#define ALGGRAPH_CONGRUENCE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/partition.hpp"
#include "alggraph/subpower.hpp"

namespace alggraph {

  // Least congruence containing `pairs`.
  Partition cg(FiniteAlgebra const& a, std::vector<std::pair<Elem, Elem>> const& pairs);

  // Least congruence containing theta (as a relation).
  Partition cg(FiniteAlgebra const& a, Partition const& theta);

  // A compatibility failure: applying `op` to `left` and `right` (which are
  // related coordinatewise) gives unrelated results.
  struct CompatibilityWitness {
    std::size_t       op = 0;
    std::vector<Elem> left;
    std::vector<Elem> right;
  };

  std::optional<CompatibilityWitness> compatibility_witness(FiniteAlgebra const& a,
                                                            Partition const&     theta);
  bool is_congruence(FiniteAlgebra const& a, Partition const& theta);

  // The whole lattice, sorted by decreasing number of blocks then by block
  // ids. Throws Error(cap_exceeded) past `cap` congruences.
  std::vector<Partition> all_congruences(FiniteAlgebra const& a, std::size_t cap = 100000);

  // Coatoms of the congruence lattice. Empty only when |A| = 1.
  std::vector<Partition> maximal_congruences(FiniteAlgebra const& a,
                                             std::size_t          cap = 100000);

  // Exactly two congruences. A 1-element algebra is degenerate and reported
  // as not simple.
  bool is_simple(FiniteAlgebra const& a);
  inline bool is_degenerate(FiniteAlgebra const& a) { return a.size() <= 1; }

  // Link tolerance of coordinate i: values related when some tuples of R
  // agree off coordinate i. Throws Error(not_subdirect) if pr_i R is not
  // the whole factor.
  Tolerance link_tolerance(Subpower const& r, std::size_t i);
  Partition link_congruence(Subpower const& r, std::size_t i);
  // Binary R with both link congruences full.
  bool is_linked(Subpower const& r);

  // R[c] for binary R: the second coordinates paired with c.
  ElementSet image(Subpower const& r, ElementSet const& first);
  ElementSet preimage(Subpower const& r, ElementSet const& second);

}  // namespace alggraph

#endif  // ALGGRAPH_CONGRUENCE_HPP_
