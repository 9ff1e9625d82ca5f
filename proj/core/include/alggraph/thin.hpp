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

// Directed thin edges of an algebra X realized over a class K.
//
//   semilattice  (b,b) in Sg{(a,b),(b,a)} <= X^2
//   majority     b in Sg{a, g'(a,b,b)}, Sg{a, g'(b,a,b)}, Sg{a, g'(b,b,a)}
//                for every g' satisfying the majority condition
//   affine       h(b,a,a) = b for the fixed h, and b in Sg{a, h'(a,a,b)}
//                for every h' satisfying the minority condition
//
// A thin majority edge is special when ab is a majority edge with a
// witnessing theta such that b in Sg{a,b'} for every b' in b/theta.

#ifndef ALGGRAPH_THIN_HPP_
#define ALGGRAPH_THIN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "alggraph/edges.hpp"
#include "alggraph/realization.hpp"
#include "alggraph/term_context.hpp"

namespace alggraph {

  enum class Mode { exact, witness };
  enum class Certainty { exact, witness };

  char const* to_string(Mode m);
  char const* to_string(Certainty c);

  struct ThinEdge {
    Elem      tail = 0;
    Elem      head = 0;
    EdgeType  type = EdgeType::none;
    bool      special   = false;
    Certainty certainty = Certainty::exact;
    // Semilattice: the binary term with f(a,b) = f(b,a) = b. Affine: the
    // fixed h. Empty otherwise.
    std::string witness;

    friend bool operator==(ThinEdge const& l, ThinEdge const& r) {
      return l.tail == r.tail && l.head == r.head && l.type == r.type && l.special == r.special;
    }
  };

  bool is_thin_semilattice(FiniteAlgebra const& x, Elem a, Elem b, std::size_t cap = 1'000'000);

  std::vector<ThinEdge> thin_semilattice_edges(FiniteAlgebra const& x,
                                               std::size_t          cap = 1'000'000);

  // In exact mode every condition operation is used and a truncated
  // fragment raises Error(clone_truncated). In witness mode only the
  // canonical g (resp. h) from the uniform operations is used; results can
  // contain pairs exact mode rejects.
  std::vector<ThinEdge> thin_majority_edges(Realization const& x, ClassContext const& k,
                                            Mode mode);
  std::vector<ThinEdge> thin_affine_edges(Realization const& x, ClassContext const& k, Mode mode);

  // ab is a majority edge of x with a witness theta for which ab is minimal.
  bool has_minimal_majority_witness(FiniteAlgebra const& x, Elem a, Elem b, Caps const& caps);

  // Throws Error(precondition) if ab is not a thin majority edge.
  bool special_flag(Realization const& x, ClassContext const& k, Elem a, Elem b, Mode mode);

  struct ThinEdges {
    std::size_t           size = 0;
    std::vector<ThinEdge> semilattice;
    std::vector<ThinEdge> majority;
    std::vector<ThinEdge> affine;
    Certainty             certainty = Certainty::exact;

    std::vector<ThinEdge> all() const;
  };

  // Which edge types to compute; s and as leave the majority list empty.
  enum class EdgeScope { s, as, all };

  // Thin edges of x, a member of K or a relation over members of K. With a
  // complete binary fragment, Sg{a,u} is read off as {t(a,u)} over binary
  // terms t instead of being closed in x.
  ThinEdges thin_edges(Realization const& x, ClassContext const& k, Mode mode,
                       EdgeScope scope = EdgeScope::all);

}  // namespace alggraph

#endif  // ALGGRAPH_THIN_HPP_
