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

#include "alggraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "alggraph/partition.hpp"
#include "alggraph/subpower.hpp"

namespace alggraph {

  void Digraph::add(Elem from, Elem to) {
    auto& list = out[from];
    if (std::find(list.begin(), list.end(), to) == list.end()) {
      list.push_back(to);
    }
  }

  ElementSet Components::maximal_elements(std::size_t universe) const {
    ElementSet s(universe);
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (maximal[c]) {
        for (Elem x : members[c]) {
          s.insert(x);
        }
      }
    }
    return s;
  }

  std::size_t Components::number_of_maximal() const {
    return static_cast<std::size_t>(std::count(maximal.begin(), maximal.end(), 1));
  }

  Components strongly_connected(Digraph const& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
    BoostGraph bg(g.size);
    for (std::size_t v = 0; v < g.size; ++v) {
      for (Elem w : g.out[v]) {
        boost::add_edge(v, w, bg);
      }
    }
    std::vector<std::size_t> raw(g.size);
    if (g.size > 0) {
      boost::strong_components(
          bg, boost::make_iterator_property_map(raw.begin(), boost::get(boost::vertex_index, bg)));
    }
    // Renumber by least member for stable output.
    Components                            out;
    std::map<std::size_t, std::size_t>    renumber;
    out.component_of.resize(g.size);
    for (std::size_t v = 0; v < g.size; ++v) {
      auto [it, fresh] = renumber.emplace(raw[v], out.members.size());
      if (fresh) {
        out.members.emplace_back();
      }
      out.component_of[v] = it->second;
      out.members[it->second].push_back(static_cast<Elem>(v));
    }
    out.maximal.assign(out.members.size(), 1);
    for (std::size_t v = 0; v < g.size; ++v) {
      for (Elem w : g.out[v]) {
        if (out.component_of[v] != out.component_of[w]) {
          out.maximal[out.component_of[v]] = 0;
        }
      }
    }
    return out;
  }

  Components induced_components(Digraph const& g, ElementSet const& subset) {
    Digraph sub;
    sub.size = g.size;
    sub.out.assign(g.size, {});
    for (std::size_t v = 0; v < g.size; ++v) {
      if (!subset.contains(v)) {
        continue;
      }
      for (Elem w : g.out[v]) {
        if (subset.contains(w)) {
          sub.out[v].push_back(w);
        }
      }
    }
    Components all = strongly_connected(sub);
    Components out;
    out.component_of.assign(g.size, npos);
    for (std::size_t c = 0; c < all.count(); ++c) {
      if (!subset.contains(all.members[c].front())) {
        continue;
      }
      for (Elem x : all.members[c]) {
        out.component_of[x] = out.members.size();
      }
      out.members.push_back(all.members[c]);
      out.maximal.push_back(all.maximal[c]);
    }
    return out;
  }

  Digraph const& GraphAnalysis::graph(PathKind k) const {
    switch (k) {
      case PathKind::s:
        return g_s;
      case PathKind::as:
        return g_as;
      case PathKind::asm_:
        return g_asm;
      case PathKind::special_asm:
        return g_special;
    }
    return g_asm;
  }

  ElementSet GraphAnalysis::reachable(PathKind k, Elem a) const {
    auto const&      g = graph(k);
    ElementSet       seen(size);
    std::deque<Elem> queue{a};
    seen.insert(a);
    while (!queue.empty()) {
      Elem v = queue.front();
      queue.pop_front();
      for (Elem w : g.out[v]) {
        if (seen.insert(w)) {
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

  std::optional<std::vector<Elem>> GraphAnalysis::path(PathKind k, Elem a, Elem b) const {
    auto const&       g = graph(k);
    std::vector<Elem> parent(size, static_cast<Elem>(size));
    std::deque<Elem>  queue{a};
    parent[a] = a;
    while (!queue.empty()) {
      Elem v = queue.front();
      queue.pop_front();
      if (v == b) {
        std::vector<Elem> out{b};
        while (out.back() != a) {
          out.push_back(parent[out.back()]);
        }
        std::reverse(out.begin(), out.end());
        return out;
      }
      for (Elem w : g.out[v]) {
        if (parent[w] == size) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    return std::nullopt;
  }

  bool GraphAnalysis::weakly_connected() const {
    if (size == 0) {
      return true;
    }
    UnionFind uf(size);
    for (std::size_t v = 0; v < size; ++v) {
      for (Elem w : g_asm.out[v]) {
        uf.unite(v, w);
      }
    }
    for (std::size_t v = 1; v < size; ++v) {
      if (uf.find(v) != uf.find(0)) {
        return false;
      }
    }
    return true;
  }

  ElementSet GraphAnalysis::as_component(Elem a) const {
    return ElementSet::from(size, scc_as.members[scc_as.component_of[a]]);
  }

  GraphAnalysis build_graphs(ThinEdges edges) {
    GraphAnalysis g;
    g.size = edges.size;
    for (Digraph* d : {&g.g_s, &g.g_as, &g.g_asm, &g.g_special}) {
      d->size = g.size;
      d->out.assign(g.size, {});
    }
    for (auto const& e : edges.semilattice) {
      for (Digraph* d : {&g.g_s, &g.g_as, &g.g_asm, &g.g_special}) {
        d->add(e.tail, e.head);
      }
    }
    for (auto const& e : edges.affine) {
      for (Digraph* d : {&g.g_as, &g.g_asm, &g.g_special}) {
        d->add(e.tail, e.head);
      }
    }
    for (auto const& e : edges.majority) {
      g.g_asm.add(e.tail, e.head);
      if (e.special) {
        g.g_special.add(e.tail, e.head);
      }
    }
    g.edges   = std::move(edges);
    g.scc_s   = strongly_connected(g.g_s);
    g.scc_as  = strongly_connected(g.g_as);
    g.scc_asm = strongly_connected(g.g_asm);
    g.max     = g.scc_s.maximal_elements(g.size);
    g.amax    = g.scc_as.maximal_elements(g.size);
    g.umax    = g.scc_asm.maximal_elements(g.size);
    std::set<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t v = 0; v < g.size; ++v) {
      for (Elem w : g.g_s.out[v]) {
        auto cv = g.scc_s.component_of[v];
        auto cw = g.scc_s.component_of[w];
        if (cv != cw) {
          order.emplace(cv, cw);
        }
      }
    }
    g.s_order.assign(order.begin(), order.end());
    return g;
  }

  std::string to_dot(GraphAnalysis const& g, std::string const& name) {
    std::ostringstream out;
    std::string        quoted = name;
    std::replace(quoted.begin(), quoted.end(), '"', '\'');
    out << "digraph \"" << quoted << "\" {\n";
    for (std::size_t c = 0; c < g.scc_asm.count(); ++c) {
      out << "  subgraph cluster_" << c << " {\n";
      out << "    label=\"asm-component " << c << (g.scc_asm.maximal[c] ? " (u-maximal)" : "")
          << "\";\n";
      for (Elem x : g.scc_asm.members[c]) {
        out << "    " << x << ";\n";
      }
      out << "  }\n";
    }
    for (auto const& e : g.edges.semilattice) {
      out << "  " << e.tail << " -> " << e.head << " [style=solid];\n";
    }
    for (auto const& e : g.edges.affine) {
      out << "  " << e.tail << " -> " << e.head << " [style=dashed];\n";
    }
    for (auto const& e : g.edges.majority) {
      out << "  " << e.tail << " -> " << e.head << " [style=dotted"
          << (e.special ? ", label=\"special\"" : "") << "];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace alggraph
