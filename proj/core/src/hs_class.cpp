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

#include "alggraph/hs_class.hpp"

#include <algorithm>
#include <set>

#include "alggraph/congruence.hpp"
#include "alggraph/error.hpp"
#include "alggraph/subpower.hpp"

namespace alggraph {

  std::vector<ElementSet> all_subuniverses(FiniteAlgebra const& a, std::size_t cap) {
    std::set<ElementSet>    seen;
    std::vector<ElementSet> frontier;
    for (Elem x = 0; x < a.size(); ++x) {
      auto s = sg_closure(a, ElementSet(a.size(), {x})).members;
      if (seen.insert(s).second) {
        frontier.push_back(s);
      }
    }
    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (auto const& s : frontier) {
        for (Elem x = 0; x < a.size(); ++x) {
          if (s.contains(x)) {
            continue;
          }
          ElementSet grown = s;
          grown.insert(x);
          auto closed = sg_closure(a, grown).members;
          if (seen.insert(closed).second) {
            if (seen.size() > cap) {
              throw Error(ErrorKind::cap_exceeded,
                          "more than " + std::to_string(cap) + " subuniverses");
            }
            next.push_back(closed);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ElementSet> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](ElementSet const& l, ElementSet const& r) {
      if (l.count() != r.count()) {
        return l.count() > r.count();
      }
      return l.members() < r.members();
    });
    return out;
  }

  std::vector<HsMember> hs_class(FiniteAlgebra const& a, Caps const& caps, std::size_t base) {
    std::vector<HsMember> out;
    for (auto const& u : all_subuniverses(a, caps.subuniverses)) {
      auto induced = induced_subalgebra(a, u);
      for (auto const& alpha : all_congruences(induced.algebra, caps.congruences)) {
        if (out.size() >= caps.hs_members) {
          throw Error(ErrorKind::cap_exceeded,
                      "HS class exceeds " + std::to_string(caps.hs_members) + " members");
        }
        auto     q = quotient(induced.algebra, alpha);
        HsMember m;
        m.base        = base;
        m.subuniverse = u;
        m.congruence  = alpha;
        m.class_of.assign(a.size(), npos);
        m.representative.resize(q.algebra.size());
        for (std::size_t i = 0; i < induced.to_parent.size(); ++i) {
          m.class_of[induced.to_parent[i]] = q.class_of[i];
        }
        for (std::size_t c = 0; c < q.algebra.size(); ++c) {
          m.representative[c] = induced.to_parent[q.representative[c]];
        }
        std::string name = a.name() + "[";
        auto        us   = u.members();
        for (std::size_t i = 0; i < us.size(); ++i) {
          name += (i ? "," : "") + std::to_string(us[i]);
        }
        name += "]";
        if (!alpha.is_equality()) {
          name += "/{";
          auto blocks = alpha.blocks();
          for (std::size_t b = 0; b < blocks.size(); ++b) {
            name += b ? "|" : "";
            for (std::size_t i = 0; i < blocks[b].size(); ++i) {
              name += (i ? "," : "") + std::to_string(induced.to_parent[blocks[b][i]]);
            }
          }
          name += "}";
        }
        m.algebra   = q.algebra.renamed(name);
        m.duplicate = std::any_of(out.begin(), out.end(),
                                  [&](HsMember const& e) { return e.algebra == m.algebra; });
        out.push_back(std::move(m));
      }
    }
    return out;
  }

}  // namespace alggraph
