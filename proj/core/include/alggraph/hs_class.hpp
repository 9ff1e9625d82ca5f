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

#ifndef ALGGRAPH_HS_CLASS_HPP_
#define ALGGRAPH_HS_CLASS_HPP_

#include <cstddef>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/caps.hpp"
#include "alggraph/partition.hpp"

namespace alggraph {

  // Every subuniverse, largest first, ties broken by member bitsets.
  std::vector<ElementSet> all_subuniverses(FiniteAlgebra const& a, std::size_t cap);

  // U / alpha for a subuniverse U of a base algebra and a congruence alpha
  // of the induced subalgebra.
  struct HsMember {
    FiniteAlgebra            algebra;
    std::size_t              base = 0;
    ElementSet               subuniverse;
    Partition                congruence;      // over the elements of U, in order
    std::vector<Elem>        representative;  // member element -> least base element
    std::vector<std::size_t> class_of;        // base element -> member element or npos
    // Same size and tables as an earlier member of the list.
    bool duplicate = false;
  };

  // H S of `a`. Throws Error(cap_exceeded) past caps.hs_members.
  std::vector<HsMember> hs_class(FiniteAlgebra const& a, Caps const& caps = {},
                                 std::size_t base = 0);

}  // namespace alggraph

#endif  // ALGGRAPH_HS_CLASS_HPP_
