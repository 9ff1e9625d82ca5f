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

// Checks on subdirect products: rectangularity of as-components,
// quasi-2-decomposability, quasi-majority terms and almost triviality.
//
// Relations are Subpowers whose factors are bases of the class K; see
// class_of_factors(). Graph structure on a subset of an algebra (an
// lk-block, R[a], R[B]) is the subgraph induced on it. For subuniverses
// this is the graph of the subalgebra, since every thin edge condition on
// a, b only looks inside Sg{a,b}.

#ifndef ALGGRAPH_RELATIONS_HPP_
#define ALGGRAPH_RELATIONS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "alggraph/subpower.hpp"
#include "alggraph/term_context.hpp"
#include "alggraph/verify.hpp"

namespace alggraph {

  // Binary subdirect R. Linked R contains B1 x B2 for as-components B1, B2
  // of the factors that R meets. Also checks, for every a, every thin edge
  // ab of the first factor and every c in R[b] n R[a], that the elements
  // as-reachable from c inside R[a] lie in R[b].
  Report rect_check(ClassContext const& k, Subpower const& r, Mode mode);
  // The same per pair of lk-blocks, with as-components of the blocks.
  Report linkage_rect_check(ClassContext const& k, Subpower const& r, Mode mode);
  // For an as-component B1 of an lk1-block: B1 x umax(R[B1]) in R.
  Report umax_rect_check(ClassContext const& k, Subpower const& r, Mode mode);

  // Every tuple a with (a_i,a_j) as-maximal in pr_ij R for all i < j has a
  // b in R with (b_i,b_j) in the as-component of (a_i,a_j). With `pinned`,
  // tuples whose restriction to it is as-maximal in the projection need a
  // b that agrees with a there. When K has a majority term, R is also
  // checked to be 2-decomposable.
  Report q2d_check(ClassContext const& k, Subpower const& r,
                   std::optional<std::vector<std::size_t>> const& pinned, Mode mode);

  // Some ternary term of K is a majority operation on every base. Throws
  // Error(clone_truncated) when none is found in a truncated fragment.
  bool has_majority_term(ClassContext const& k);

  // Tuples whose binary projections all lie in the binary projections of r.
  std::vector<std::vector<Elem>> pairwise_closure(Subpower const& r);

  struct QuasiMajority {
    Term                 term;
    std::string          term_text;
    std::vector<OpTable> per_base;
    Report               report;
  };

  // A ternary term with maj(a,a,b), maj(a,b,a), maj(b,a,a) in Ft^as(a) on
  // every member of K, extracted from the first qualifying tuple of the
  // relation generated by the three argument patterns over all pairs.
  // Throws Error(search_exhausted) if the relation has no such tuple and
  // Error(cap_exceeded) if it is too large to close.
  QuasiMajority quasi_majority(ClassContext const& k, Mode mode);

  // A block of an almost trivial decomposition: coordinates i1 < ... < il
  // and the tuples of pr_I R, one per element of A_i1.
  struct TrivialBlock {
    std::vector<std::size_t>       coordinates;
    std::vector<std::vector<Elem>> tuples;
  };

  // The finest coordinate partition witnessing that r is almost trivial,
  // if any. Throws Error(cap_exceeded) above caps.coordinates.
  std::optional<std::vector<TrivialBlock>> almost_trivial_decomposition(Subpower const& r,
                                                                          Caps const& caps);
  // Rebuilds the relation from a decomposition.
  std::vector<std::vector<Elem>> reconstruct(std::vector<TrivialBlock> const& blocks,
                                             std::size_t                      arity);

  // pass when r is almost trivial, fail otherwise.
  Report almost_trivial_check(Subpower const& r, Caps const& caps);

  // Almost triviality over simple maximal generated factors,
  // R = A1 x pr_{2..n} R, and the product of maximal components, each
  // checked when its hypotheses hold.
  Report maxgen_suite(ClassContext const& k, Subpower const& r, Mode mode);

}  // namespace alggraph

#endif  // ALGGRAPH_RELATIONS_HPP_
