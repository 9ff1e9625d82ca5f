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

#include "alggraph/term_context.hpp"

#include <algorithm>

#include "alggraph/error.hpp"
#include "alggraph/realization.hpp"
#include "alggraph/thin.hpp"

namespace alggraph {

  char const* to_string(SearchStatus s) {
    switch (s) {
      case SearchStatus::found:
        return "found";
      case SearchStatus::not_found_within_cap:
        return "not_found_within_cap";
      case SearchStatus::exhausted:
        return "exhausted";
    }
    return "exhausted";
  }

  namespace {

    // The two-valued points over {a, b}.
    std::array<std::array<Elem, 3>, 6> two_valued(Elem a, Elem b) {
      return {{{a, a, b}, {a, b, a}, {b, a, a}, {b, b, a}, {b, a, b}, {a, b, b}}};
    }

  }  // namespace

  ClassContext::ClassContext(std::vector<FiniteAlgebra> bases, Caps const& caps)
      : caps_(caps), bases_(std::move(bases)) {
    if (bases_.empty()) {
      throw Error(ErrorKind::precondition, "a class needs at least one algebra");
    }
    for (std::size_t i = 0; i < bases_.size(); ++i) {
      if (!bases_[0].same_signature(bases_[i])) {
        throw Error(ErrorKind::signature_mismatch, bases_[0].name() + " vs " + bases_[i].name());
      }
      auto hs = hs_class(bases_[i], caps_, i);
      members_.insert(members_.end(), hs.begin(), hs.end());
      if (members_.size() > caps_.hs_members) {
        throw Error(ErrorKind::cap_exceeded, "class exceeds the member cap");
      }
      edges_.push_back(edge_graph(bases_[i], caps_));
      for (auto const& e : edges_.back()) {
        for (auto const& w : e.witnesses) {
          if (w.type == EdgeType::unary) {
            continue;
          }
          ClassWitness cw;
          cw.base     = i;
          cw.a        = e.a;
          cw.b        = e.b;
          cw.type     = w.type;
          cw.block_of = w.block_of;
          cw.block_representatives.assign(w.theta.number_of_blocks(), 0);
          std::vector<char> seen(w.theta.number_of_blocks(), 0);
          for (Elem x = 0; x < bases_[i].size(); ++x) {
            auto blk = cw.block_of[x];
            if (blk != npos && !seen[blk]) {
              seen[blk]                     = 1;
              cw.block_representatives[blk] = x;
            }
          }
          witnesses_.push_back(std::move(cw));
        }
      }
    }
    binary_  = CloneFragment(bases_, 2, PointSelection::non_constant, caps_.clone, caps_.work);
    ternary_ = CloneFragment(bases_, 3, PointSelection::two_valued, caps_.clone, caps_.work);
    for (std::size_t i = 0; i < ternary_.size(); ++i) {
      if (satisfies(Condition::majority, i)) {
        majority_.push_back(i);
      }
      if (satisfies(Condition::minority, i)) {
        minority_.push_back(i);
        auto r = ternary_.restriction(i);
        if (!fixed_h_
            || std::lexicographical_compare(r.begin(), r.end(),
                                            ternary_.restriction(*fixed_h_).begin(),
                                            ternary_.restriction(*fixed_h_).end())) {
          fixed_h_ = i;
        }
      }
    }
    find_uniform();
  }

  bool ClassContext::satisfies(Condition c, std::size_t i) const {
    auto const& t = ternary_;
    for (std::size_t base = 0; base < bases_.size(); ++base) {
      std::size_t n = bases_[base].size();
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (x == y) {
            continue;
          }
          if (c == Condition::majority) {
            Elem u = t.value(i, base, {x, y, y});
            if (t.value(i, base, {x, u, u}) != u) {
              return false;
            }
          } else {
            Elem u = t.value(i, base, {x, y, y});
            if (t.value(i, base, {u, y, y}) != u) {
              return false;
            }
          }
        }
      }
    }
    for (auto const& w : witnesses_) {
      if (c == Condition::majority && w.type == EdgeType::majority) {
        for (auto const& p : two_valued(w.a, w.b)) {
          Elem majority = p[0] == p[1] ? p[0] : p[2];
          if (!w.same(t.value(i, w.base, p), majority)) {
            return false;
          }
        }
      }
      if (c == Condition::minority && w.type == EdgeType::affine) {
        auto const& reps = w.block_representatives;
        for (Elem x : reps) {
          for (Elem y : reps) {
            if (x == y) {
              continue;
            }
            if (!w.same(t.value(i, w.base, {x, y, y}), x)
                || !w.same(t.value(i, w.base, {y, y, x}), x)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool ClassContext::f_clause(std::size_t f, ClassWitness const& w) const {
    Elem fab = binary_.value(f, w.base, {w.a, w.b});
    Elem fba = binary_.value(f, w.base, {w.b, w.a});
    if (w.type == EdgeType::semilattice) {
      return w.same(fab, fba) && (w.same(fab, w.a) || w.same(fab, w.b));
    }
    return w.same(fab, w.a) && w.same(fba, w.b);
  }

  namespace {

    // x f (y f z) on the classes of a semilattice witness, as a class
    // representative among {a, b}.
    Elem semilattice_composite(CloneFragment const& binary, std::size_t f, ClassWitness const& w,
                               Elem x, Elem y, Elem z) {
      auto on_classes = [&](Elem u, Elem v) {
        Elem r = u == v ? u : binary.value(f, w.base, {u, v});
        return w.same(r, w.a) ? w.a : w.b;
      };
      return on_classes(x, on_classes(y, z));
    }

  }  // namespace

  bool ClassContext::g_clause(std::size_t g, std::size_t f, ClassWitness const& w) const {
    for (auto const& p : two_valued(w.a, w.b)) {
      Elem v = ternary_.value(g, w.base, p);
      Elem expected;
      switch (w.type) {
        case EdgeType::majority:
          expected = p[0] == p[1] ? p[0] : p[2];
          break;
        case EdgeType::affine:
          expected = p[0];
          break;
        case EdgeType::semilattice:
          expected = semilattice_composite(binary_, f, w, p[0], p[1], p[2]);
          break;
        default:
          return true;
      }
      if (!w.same(v, expected)) {
        return false;
      }
    }
    return true;
  }

  bool ClassContext::h_clause(std::size_t h, std::size_t f, ClassWitness const& w) const {
    if (w.type == EdgeType::affine) {
      auto const& reps = w.block_representatives;
      for (Elem x : reps) {
        for (Elem y : reps) {
          if (x != y
              && (!w.same(ternary_.value(h, w.base, {x, y, y}), x)
                  || !w.same(ternary_.value(h, w.base, {y, y, x}), x))) {
            return false;
          }
        }
      }
      return true;
    }
    for (auto const& p : two_valued(w.a, w.b)) {
      Elem v = ternary_.value(h, w.base, p);
      Elem expected;
      switch (w.type) {
        case EdgeType::majority:
          expected = p[0];
          break;
        case EdgeType::semilattice:
          expected = semilattice_composite(binary_, f, w, p[0], p[1], p[2]);
          break;
        default:
          return true;
      }
      if (!w.same(v, expected)) {
        return false;
      }
    }
    return true;
  }

  void ClassContext::find_uniform() {
    // Thin semilattice edges of every member, for the property that
    // either a = f(a,b) or (a, f(a,b)) is such an edge.
    std::vector<Realization>       realized;
    std::vector<std::vector<char>> thin_s;
    for (auto const& m : members_) {
      realized.push_back(Realization::of_member(m));
      std::size_t       n = m.algebra.size();
      std::vector<char> rel(n * n, 0);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          rel[a * n + b] = a != b && is_thin_semilattice(m.algebra, a, b, caps_.tuples);
        }
      }
      thin_s.push_back(std::move(rel));
    }

    std::vector<std::size_t> f_candidates;
    for (std::size_t f = 0; f < binary_.size(); ++f) {
      bool ok = std::all_of(witnesses_.begin(), witnesses_.end(),
                            [&](ClassWitness const& w) { return f_clause(f, w); });
      for (std::size_t base = 0; ok && base < bases_.size(); ++base) {
        std::size_t n = bases_[base].size();
        for (Elem x = 0; ok && x < n; ++x) {
          for (Elem y = 0; ok && y < n; ++y) {
            if (x == y) {
              continue;
            }
            Elem u = binary_.value(f, base, {x, y});
            ok     = binary_.value(f, base, {x, u}) == u;
          }
        }
      }
      for (std::size_t mi = 0; ok && mi < members_.size(); ++mi) {
        std::size_t n = members_[mi].algebra.size();
        for (Elem a = 0; ok && a < n; ++a) {
          for (Elem b = 0; ok && b < n; ++b) {
            if (a == b) {
              continue;
            }
            Elem c = realized[mi].apply(binary_, f, {a, b});
            ok     = c == a || thin_s[mi][a * n + c];
          }
        }
      }
      if (ok) {
        f_candidates.push_back(f);
      }
    }

    auto identity_ok = [&](std::size_t i, Condition c) {
      auto const& t = ternary_;
      for (std::size_t base = 0; base < bases_.size(); ++base) {
        std::size_t n = bases_[base].size();
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            if (x == y) {
              continue;
            }
            Elem u = t.value(i, base, {x, y, y});
            Elem v = c == Condition::majority ? t.value(i, base, {x, u, u})
                                              : t.value(i, base, {u, y, y});
            if (v != u) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::vector<std::size_t> g_identity, h_identity;
    for (std::size_t i = 0; i < ternary_.size(); ++i) {
      if (identity_ok(i, Condition::majority)) {
        g_identity.push_back(i);
      }
      if (identity_ok(i, Condition::minority)) {
        h_identity.push_back(i);
      }
    }

    for (std::size_t f : f_candidates) {
      std::size_t g = npos, h = npos;
      for (std::size_t i : g_identity) {
        if (std::all_of(witnesses_.begin(), witnesses_.end(),
                        [&](ClassWitness const& w) { return g_clause(i, f, w); })) {
          g = i;
          break;
        }
      }
      if (g == npos) {
        continue;
      }
      for (std::size_t i : h_identity) {
        if (std::all_of(witnesses_.begin(), witnesses_.end(),
                        [&](ClassWitness const& w) { return h_clause(i, f, w); })) {
          h = i;
          break;
        }
      }
      if (h == npos) {
        continue;
      }
      uniform_ = UniformOps{SearchStatus::found, f, g, h};
      return;
    }
    uniform_.status = complete() ? SearchStatus::exhausted : SearchStatus::not_found_within_cap;
  }

  UniformTables find_uniform_ops(ClassContext const& k) {
    auto const& u = k.uniform();
    if (u.status == SearchStatus::exhausted) {
      throw Error(ErrorKind::search_exhausted,
                  "no uniform f, g, h in the complete clone; this contradicts their "
                  "existence for smooth classes and indicates a defect or a non-smooth input");
    }
    if (u.status != SearchStatus::found) {
      throw Error(ErrorKind::not_found_within_cap,
                  "uniform operations not found before the clone cap was reached");
    }
    UniformTables out;
    out.status = u.status;
    Term f     = k.binary().term(u.f);
    Term g     = k.ternary().term(u.g);
    Term h     = k.ternary().term(u.h);
    for (auto const& base : k.bases()) {
      out.per_base.push_back({f.op_table(base, "f"), g.op_table(base, "g"), h.op_table(base, "h")});
    }
    out.f_term = f.to_string(k.bases()[0]);
    out.g_term = g.to_string(k.bases()[0]);
    out.h_term = h.to_string(k.bases()[0]);
    return out;
  }

  ConditionTables operations_satisfying_condition(ClassContext const& k, Condition c) {
    ConditionTables out;
    out.complete = k.ternary().complete();
    for (std::size_t i : k.operations(c)) {
      Term                 t = k.ternary().term(i);
      std::vector<OpTable> tables;
      for (auto const& base : k.bases()) {
        tables.push_back(t.op_table(base, c == Condition::majority ? "g'" : "h'"));
      }
      out.per_base.push_back(std::move(tables));
    }
    return out;
  }

}  // namespace alggraph
