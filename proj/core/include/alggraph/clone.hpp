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

// Term operations, either as full tables (term_ops) or restricted to a
// chosen set of argument points across several algebras of the same
// signature (CloneFragment).
//
// A k-ary term operation restricted to points p_1..p_m is a tuple in the
// subpower of A^m generated by the k projection tuples, so fragments are
// computed with subpower_generate and keep derivations to rebuild terms.

#ifndef ALGGRAPH_CLONE_HPP_
#define ALGGRAPH_CLONE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/subpower.hpp"

namespace alggraph {

  struct TermOpSet {
    std::size_t          arity = 0;
    std::vector<OpTable> functions;  // projections first, then BFS order
    bool                 complete = true;
    std::size_t          cap      = 0;
  };

  // All k-ary term operations of `a` (k in 1..3) as tables.
  TermOpSet term_ops(FiniteAlgebra const& a, std::size_t arity, std::size_t cap,
                     std::size_t work = std::numeric_limits<std::size_t>::max());

  enum class PointSelection {
    non_constant,  // every non-constant tuple
    two_valued,    // non-constant tuples with at most two distinct values
  };

  class CloneFragment {
   public:
    CloneFragment() = default;
    // All bases must share a signature.
    CloneFragment(std::vector<FiniteAlgebra> bases, std::size_t arity,
                  PointSelection selection, std::size_t cap,
                  std::size_t work = std::numeric_limits<std::size_t>::max());

    std::size_t                       arity() const noexcept { return arity_; }
    std::vector<FiniteAlgebra> const& bases() const noexcept { return bases_; }
    std::size_t                       size() const noexcept { return closure_.size(); }
    bool                              complete() const noexcept { return closure_.complete(); }
    std::size_t                       cap() const noexcept { return cap_; }

    // True when `args` is constant or a recorded point of base `base`.
    bool covers(std::size_t base, std::span<Elem const> args) const;

    // Value of function i at `args` in base `base`. Throws
    // Error(precondition) when the point is not covered.
    Elem value(std::size_t i, std::size_t base, std::span<Elem const> args) const;
    Elem value(std::size_t i, std::size_t base, std::initializer_list<Elem> args) const {
      return value(i, base, std::span<Elem const>(args.begin(), args.size()));
    }

    // Raw restriction of function i, ordered base by base, points in
    // row-major order within each base.
    std::span<Elem const> restriction(std::size_t i) const { return closure_.tuple(i); }

    Term              term(std::size_t i) const { return extract_term(closure_, i); }
    std::vector<Elem> table(std::size_t i, std::size_t base) const;

    Subpower const& closure() const noexcept { return closure_; }

   private:
    std::vector<FiniteAlgebra>            bases_;
    std::size_t                           arity_ = 0;
    std::size_t                           cap_   = 0;
    std::vector<std::vector<std::size_t>> column_of_;  // per base, per table index
    Subpower                              closure_;
  };

}  // namespace alggraph

#endif  // ALGGRAPH_CLONE_HPP_
