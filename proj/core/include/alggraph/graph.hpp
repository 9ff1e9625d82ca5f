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

#ifndef ALGGRAPH_GRAPH_HPP_
#define ALGGRAPH_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alggraph/thin.hpp"
#include "alggraph/types.hpp"

namespace alggraph {

  // Which thin edges a path may use.
  enum class PathKind {
    s,            // semilattice
    as,           // semilattice, affine
    asm_,         // all
    special_asm,  // all, majority edges special
  };

  struct Digraph {
    std::size_t                    size = 0;
    std::vector<std::vector<Elem>> out;

    void add(Elem from, Elem to);
  };

  struct Components {
    std::vector<std::size_t>       component_of;  // numbered in order of least member
    std::vector<std::vector<Elem>> members;
    // No edge leaves the component.
    std::vector<char> maximal;

    std::size_t count() const noexcept { return members.size(); }
    ElementSet  maximal_elements(std::size_t universe) const;
    std::size_t number_of_maximal() const;
  };

  Components strongly_connected(Digraph const& g);

  // Components of the subgraph induced on `subset`. component_of is npos
  // outside the subset; maximal means no edge leads to another component
  // inside the subset.
  Components induced_components(Digraph const& g, ElementSet const& subset);

  struct GraphAnalysis {
    std::size_t size = 0;
    ThinEdges   edges;
    Digraph     g_s, g_as, g_asm, g_special;
    Components  scc_s, scc_as, scc_asm;
    ElementSet  max, amax, umax;
    // Condensation edges of G_s between distinct components.
    std::vector<std::pair<std::size_t, std::size_t>> s_order;

    Digraph const& graph(PathKind k) const;
    // Elements reachable from a (a included).
    ElementSet reachable(PathKind k, Elem a) const;
    ElementSet ft(Elem a) const { return reachable(PathKind::s, a); }
    ElementSet ft_as(Elem a) const { return reachable(PathKind::as, a); }
    ElementSet ft_asm(Elem a) const { return reachable(PathKind::asm_, a); }
    bool       connected(PathKind k, Elem a, Elem b) const { return reachable(k, a).contains(b); }
    // A shortest path a..b, if one exists.
    std::optional<std::vector<Elem>> path(PathKind k, Elem a, Elem b) const;
    // Undirected connectivity of all thin edges.
    bool weakly_connected() const;
    // The as-component of a (its SCC in G_as).
    ElementSet as_component(Elem a) const;
  };

  GraphAnalysis build_graphs(ThinEdges edges);

  // Graphviz rendering: semilattice edges solid, affine dashed, majority
  // dotted (special ones labelled), one cluster per G_asm component.
  std::string to_dot(GraphAnalysis const& g, std::string const& name);

}  // namespace alggraph

#endif  // ALGGRAPH_GRAPH_HPP_
