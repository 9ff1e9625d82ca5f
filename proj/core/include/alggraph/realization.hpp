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

// An algebra built from base algebras by subalgebras, quotients and
// products, together with enough bookkeeping to evaluate term operations
// of the bases on it: each element has a representative tuple over a list
// of base coordinates, and every tuple that may arise maps back to an
// element.

#ifndef ALGGRAPH_REALIZATION_HPP_
#define ALGGRAPH_REALIZATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/clone.hpp"
#include "alggraph/hs_class.hpp"
#include "alggraph/partition.hpp"
#include "alggraph/subpower.hpp"
#include "alggraph/tuple_store.hpp"

namespace alggraph {

  class Realization {
   public:
    Realization() = default;

    // The base algebra itself, as coordinate `base` of a class.
    static Realization of_base(FiniteAlgebra const& a, std::size_t base);
    static Realization of_member(HsMember const& m);
    // The relation as an algebra; coordinate c lives in base
    // `coordinate_bases[c]`. Tables are materialized, so this throws
    // Error(cap_exceeded) past `table_limit` cells.
    static Realization of_subpower(Subpower const& r, std::vector<std::size_t> coordinate_bases,
                                   std::size_t table_limit, std::string name = {});

    Realization quotient(Partition const& theta, std::string name = {}) const;
    // Induced subalgebra on a subuniverse; element i of the result is the
    // i-th member in increasing order.
    Realization restrict(ElementSet const& members, std::string name = {}) const;

    FiniteAlgebra const&            algebra() const noexcept { return algebra_; }
    std::size_t                     size() const noexcept { return algebra_.size(); }
    std::vector<std::size_t> const& coordinate_bases() const noexcept { return bases_; }
    std::span<Elem const>           representative(Elem x) const { return reps_[x]; }
    std::optional<Elem>             element_of(std::span<Elem const> tuple) const;

    // Function i of `f` evaluated on this algebra. Every coordinate point
    // must be covered by the fragment.
    Elem apply(CloneFragment const& f, std::size_t i, std::span<Elem const> args) const;
    Elem apply(CloneFragment const& f, std::size_t i, std::initializer_list<Elem> args) const {
      return apply(f, i, std::span<Elem const>(args.begin(), args.size()));
    }
    // A term over the shared signature, evaluated coordinatewise in the
    // bases.
    Elem apply(std::vector<FiniteAlgebra> const& bases, Term const& t,
               std::span<Elem const> args) const;

   private:
    FiniteAlgebra                  algebra_;
    std::vector<std::size_t>       bases_;
    std::vector<std::vector<Elem>> reps_;
    TupleStore                     preimage_;
    std::vector<Elem>              value_of_;
  };

}  // namespace alggraph

#endif  // ALGGRAPH_REALIZATION_HPP_
