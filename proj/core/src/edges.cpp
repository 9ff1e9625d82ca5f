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

#include "alggraph/edges.hpp"

#include <algorithm>

#include "alggraph/congruence.hpp"
#include "alggraph/error.hpp"

namespace alggraph {

  char const* to_string(EdgeType t) {
    switch (t) {
      case EdgeType::semilattice:
        return "semilattice";
      case EdgeType::majority:
        return "majority";
      case EdgeType::affine:
        return "affine";
      case EdgeType::unary:
        return "unary";
      case EdgeType::none:
        return "none";
    }
    return "none";
  }

  std::optional<EdgeType> edge_type_from_string(std::string const& s) {
    for (auto t : {EdgeType::semilattice, EdgeType::majority, EdgeType::affine, EdgeType::unary,
                   EdgeType::none}) {
      if (s == to_string(t)) {
        return t;
      }
    }
    return std::nullopt;
  }

  namespace {

    std::optional<Term> search(std::vector<FiniteAlgebra> factors,
                               std::vector<std::vector<Elem>> const& generators,
                               std::vector<Elem> const& target, std::size_t cap) {
      GenerateOptions options;
      options.track     = true;
      options.cap       = cap;
      options.stop_when = [&](std::span<Elem const> t) {
        return std::equal(t.begin(), t.end(), target.begin(), target.end());
      };
      auto r = subpower_generate(std::move(factors), generators, options);
      if (!r.stopped_at()) {
        return std::nullopt;
      }
      return extract_term(r, *r.stopped_at());
    }

    std::optional<Term> semilattice_term(FiniteAlgebra const& q, Elem a, Elem b, std::size_t cap) {
      GenerateOptions options;
      options.track     = true;
      options.cap       = cap;
      options.stop_when = [&](std::span<Elem const> t) {
        return t[0] == t[1] && (t[0] == a || t[0] == b);
      };
      auto r = subpower_generate({q, q}, {{a, b}, {b, a}}, options);
      if (!r.stopped_at()) {
        return std::nullopt;
      }
      return extract_term(r, *r.stopped_at());
    }

    std::optional<Term> majority_term(FiniteAlgebra const& q, Elem a, Elem b, std::size_t cap) {
      // Columns: (a,a,b) (a,b,a) (b,a,a) (b,b,a) (b,a,b) (a,b,b).
      std::vector<std::vector<Elem>> generators{
          {a, a, b, b, b, a}, {a, b, a, b, a, b}, {b, a, a, a, b, b}};
      return search(std::vector<FiniteAlgebra>(6, q), generators, {a, a, a, b, b, b}, cap);
    }

    std::optional<SmoothnessViolation> closure_violation(FiniteAlgebra const& a,
                                                         ElementSet const&    set) {
      auto members = set.members();
      for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
        std::size_t k     = a.op(o).arity;
        std::size_t cells = checked_power(members.size(), k, std::size_t{1} << 30);
        std::vector<Elem> args(k);
        for (std::size_t i = 0; i < cells; ++i) {
          std::size_t rest = i;
          for (std::size_t p = k; p-- > 0;) {
            args[p] = members[rest % members.size()];
            rest /= members.size();
          }
          if (!set.contains(a.apply(o, args))) {
            SmoothnessViolation v;
            v.op   = o;
            v.args = args;
            return v;
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<Term> maltsev_term(FiniteAlgebra const& q, std::size_t tuple_cap) {
    std::size_t                    m = q.size();
    std::vector<std::vector<Elem>> generators(3);
    std::vector<Elem>              target;
    // (x,y,y) -> x and (x,x,y) -> y for x != y.
    for (Elem x = 0; x < m; ++x) {
      for (Elem y = 0; y < m; ++y) {
        if (x == y) {
          continue;
        }
        generators[0].push_back(x);
        generators[1].push_back(y);
        generators[2].push_back(y);
        target.push_back(x);
        generators[0].push_back(x);
        generators[1].push_back(x);
        generators[2].push_back(y);
        target.push_back(y);
      }
    }
    if (target.empty()) {
      return Term::variable(3, 0);
    }
    return search(std::vector<FiniteAlgebra>(target.size(), q), generators, target, tuple_cap);
  }

  bool is_abelian(FiniteAlgebra const& q, std::size_t table_limit) {
    std::size_t m = q.size();
    if (m <= 1) {
      return true;
    }
    auto                               square = direct_product(q, q, table_limit);
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem x = 1; x < m; ++x) {
      pairs.emplace_back(0, static_cast<Elem>(x * m + x));
    }
    auto theta = cg(square, pairs);
    for (Elem x = 0; x < m; ++x) {
      for (Elem y = 0; y < m; ++y) {
        if (x != y && theta.same(0, static_cast<Elem>(x * m + y))) {
          return false;
        }
      }
    }
    return true;
  }

  EdgeRecord classify_pair(FiniteAlgebra const& a, Elem x, Elem y, Caps const& caps) {
    if (x == y) {
      throw Error(ErrorKind::precondition, "classify_pair needs two distinct elements");
    }
    if (x >= a.size() || y >= a.size()) {
      throw Error(ErrorKind::precondition, "element out of range");
    }
    EdgeRecord rec;
    rec.a          = x;
    rec.b          = y;
    rec.subalgebra = sg_closure(a, std::vector<Elem>{x, y}).members;
    auto induced   = induced_subalgebra(a, rec.subalgebra);
    auto lx        = static_cast<Elem>(induced.from_parent[x]);
    auto ly        = static_cast<Elem>(induced.from_parent[y]);

    bool seen[5] = {false, false, false, false, false};
    for (auto const& theta : maximal_congruences(induced.algebra, caps.congruences)) {
      if (theta.same(lx, ly)) {
        continue;
      }
      auto q  = quotient(induced.algebra, theta);
      Elem qa = q.class_of[lx];
      Elem qb = q.class_of[ly];

      EdgeWitness w;
      w.theta = theta;
      w.block_of.assign(a.size(), npos);
      for (std::size_t i = 0; i < induced.to_parent.size(); ++i) {
        w.block_of[induced.to_parent[i]] = theta.block(static_cast<Elem>(i));
      }
      if (auto t = semilattice_term(q.algebra, qa, qb, caps.tuples)) {
        w.type = EdgeType::semilattice;
        w.term = std::move(t);
      } else if (auto t2 = majority_term(q.algebra, qa, qb, caps.tuples)) {
        w.type = EdgeType::majority;
        w.term = std::move(t2);
      } else if (std::optional<Term> t3; is_abelian(q.algebra, caps.table_entries)
                                         && (t3 = maltsev_term(q.algebra, caps.tuples))) {
        // The term condition is cheap; the Mal'tsev search is not.
        w.type = EdgeType::affine;
        w.term = std::move(t3);
      } else if (all_operations_are_projections(q.algebra)) {
        w.type = EdgeType::unary;
      }
      if (w.type == EdgeType::none) {
        ++rec.unmatched;
        continue;
      }
      seen[static_cast<int>(w.type)] = true;
      rec.witnesses.push_back(std::move(w));
    }
    for (int t = 0; t < 4; ++t) {
      if (seen[t]) {
        rec.type = static_cast<EdgeType>(t);
        break;
      }
    }
    rec.mixed = std::count(seen, seen + 4, true) > 1;
    return rec;
  }

  std::vector<EdgeRecord> edge_graph(FiniteAlgebra const& a, Caps const& caps) {
    std::vector<EdgeRecord> out;
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = x + 1; y < a.size(); ++y) {
        out.push_back(classify_pair(a, x, y, caps));
      }
    }
    return out;
  }

  bool omits_type1(std::vector<EdgeRecord> const& edges) {
    for (auto const& e : edges) {
      for (auto const& w : e.witnesses) {
        if (w.type == EdgeType::unary) {
          return false;
        }
      }
    }
    return true;
  }

  bool omits_type1(FiniteAlgebra const& a, Caps const& caps) {
    return omits_type1(edge_graph(a, caps));
  }

  SmoothnessReport is_smooth(FiniteAlgebra const& a, std::vector<EdgeRecord> const& edges) {
    SmoothnessReport report;
    for (auto const& e : edges) {
      for (auto const& w : e.witnesses) {
        if (w.type != EdgeType::semilattice && w.type != EdgeType::majority) {
          continue;
        }
        ElementSet classes(a.size());
        for (Elem z = 0; z < a.size(); ++z) {
          if (w.block_of[z] != npos
              && (w.block_of[z] == w.block_of[e.a] || w.block_of[z] == w.block_of[e.b])) {
            classes.insert(z);
          }
        }
        if (auto v = closure_violation(a, classes)) {
          v->a       = e.a;
          v->b       = e.b;
          v->theta   = w.theta;
          v->classes = classes;
          report.smooth = false;
          report.violations.push_back(std::move(*v));
        }
      }
    }
    return report;
  }

  SmoothnessReport is_smooth(FiniteAlgebra const& a, Caps const& caps) {
    return is_smooth(a, edge_graph(a, caps));
  }

}  // namespace alggraph
