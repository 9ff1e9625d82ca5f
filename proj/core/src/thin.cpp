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

#include "alggraph/thin.hpp"

#include <optional>

#include "alggraph/error.hpp"

namespace alggraph {

  char const* to_string(Mode m) { return m == Mode::exact ? "exact" : "witness"; }
  char const* to_string(Certainty c) { return c == Certainty::exact ? "exact" : "witness-mode"; }

  namespace {

    // Lazily computed Sg{a,u}.
    class PairClosures {
     public:
      PairClosures(Realization const& x, ClassContext const& k)
          : x_(x), k_(k), cache_(x.size() * x.size()) {}

      bool contains(Elem a, Elem u, Elem b) {
        auto& slot = cache_[a * x_.size() + u];
        if (!slot) {
          auto const& f = k_.binary();
          if (f.complete()) {
            ElementSet s(x_.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
              s.insert(x_.apply(f, i, {a, u}));
            }
            slot = std::move(s);
          } else {
            slot = sg_closure(x_.algebra(), std::vector<Elem>{a, u}).members;
          }
        }
        return slot->contains(b);
      }

     private:
      Realization const&                     x_;
      ClassContext const&                    k_;
      std::vector<std::optional<ElementSet>> cache_;
    };

    // Thin semilattice edges from the binary fragment: (b,b) is in
    // Sg{(a,b),(b,a)} iff some binary term t has t(a,b) = t(b,a) = b.
    std::vector<ThinEdge> realized_semilattice_edges(Realization const& x, ClassContext const& k) {
      auto const& f = k.binary();
      if (!f.complete()) {
        return thin_semilattice_edges(x.algebra(), k.caps().tuples);
      }
      std::vector<std::string> names(f.size());
      std::vector<ThinEdge>    out;
      for (Elem a = 0; a < x.size(); ++a) {
        for (Elem b = 0; b < x.size(); ++b) {
          if (a == b) {
            continue;
          }
          for (std::size_t i = 0; i < f.size(); ++i) {
            if (x.apply(f, i, {a, b}) == b && x.apply(f, i, {b, a}) == b) {
              if (names[i].empty()) {
                names[i] = f.term(i).to_string(k.bases()[0]);
              }
              ThinEdge e;
              e.tail    = a;
              e.head    = b;
              e.type    = EdgeType::semilattice;
              e.witness = names[i];
              out.push_back(std::move(e));
              break;
            }
          }
        }
      }
      return out;
    }

    std::optional<Subpower> semilattice_closure(FiniteAlgebra const& x, Elem a, Elem b,
                                                std::size_t cap) {
      GenerateOptions options;
      options.track     = true;
      options.cap       = cap;
      options.stop_when = [b](std::span<Elem const> t) { return t[0] == b && t[1] == b; };
      auto r            = subpower_generate({x, x}, {{a, b}, {b, a}}, options);
      if (!r.stopped_at()) {
        return std::nullopt;
      }
      return r;
    }

    std::size_t canonical(ClassContext const& k, bool majority) {
      auto const& u = k.uniform();
      if (u.status != SearchStatus::found) {
        throw Error(ErrorKind::not_found_within_cap,
                    "witness mode needs the uniform operations, which were not found");
      }
      return majority ? u.g : u.h;
    }

  }  // namespace

  bool is_thin_semilattice(FiniteAlgebra const& x, Elem a, Elem b, std::size_t cap) {
    return a != b && semilattice_closure(x, a, b, cap).has_value();
  }

  std::vector<ThinEdge> thin_semilattice_edges(FiniteAlgebra const& x, std::size_t cap) {
    std::vector<ThinEdge> out;
    for (Elem a = 0; a < x.size(); ++a) {
      for (Elem b = 0; b < x.size(); ++b) {
        if (a == b) {
          continue;
        }
        if (auto r = semilattice_closure(x, a, b, cap)) {
          ThinEdge e;
          e.tail    = a;
          e.head    = b;
          e.type    = EdgeType::semilattice;
          e.witness = extract_term(*r, *r->stopped_at()).to_string(x);
          out.push_back(std::move(e));
        }
      }
    }
    return out;
  }

  std::vector<ThinEdge> thin_majority_edges(Realization const& x, ClassContext const& k,
                                            Mode mode) {
    std::vector<std::size_t> ops;
    if (mode == Mode::exact) {
      if (!k.ternary().complete()) {
        throw Error(ErrorKind::clone_truncated,
                    "ternary clone fragment truncated; exact thin majority edges unavailable");
      }
      ops = k.operations(Condition::majority);
    } else {
      ops = {canonical(k, true)};
    }
    PairClosures          sg(x, k);
    std::vector<ThinEdge> out;
    for (Elem a = 0; a < x.size(); ++a) {
      for (Elem b = 0; b < x.size(); ++b) {
        if (a == b) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < ops.size(); ++i) {
          ok = sg.contains(a, x.apply(k.ternary(), ops[i], {a, b, b}), b)
               && sg.contains(a, x.apply(k.ternary(), ops[i], {b, a, b}), b)
               && sg.contains(a, x.apply(k.ternary(), ops[i], {b, b, a}), b);
        }
        if (ok) {
          ThinEdge e;
          e.tail      = a;
          e.head      = b;
          e.type      = EdgeType::majority;
          e.certainty = mode == Mode::exact ? Certainty::exact : Certainty::witness;
          e.special   = has_minimal_majority_witness(x.algebra(), a, b, k.caps());
          out.push_back(std::move(e));
        }
      }
    }
    return out;
  }

  std::vector<ThinEdge> thin_affine_edges(Realization const& x, ClassContext const& k,
                                          Mode mode) {
    std::vector<std::size_t> ops;
    if (mode == Mode::exact) {
      if (!k.ternary().complete()) {
        throw Error(ErrorKind::clone_truncated,
                    "ternary clone fragment truncated; exact thin affine edges unavailable");
      }
      ops = k.operations(Condition::minority);
    } else {
      ops = {canonical(k, false)};
    }
    std::optional<std::size_t> h = k.fixed_h();
    if (!h && mode == Mode::witness) {
      h = ops.front();
    }
    std::vector<ThinEdge> out;
    if (!h) {
      return out;
    }
    std::string           witness = k.ternary().term(*h).to_string(k.bases()[0]);
    PairClosures          sg(x, k);
    for (Elem a = 0; a < x.size(); ++a) {
      for (Elem b = 0; b < x.size(); ++b) {
        if (a == b || x.apply(k.ternary(), *h, {b, a, a}) != b) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < ops.size(); ++i) {
          ok = sg.contains(a, x.apply(k.ternary(), ops[i], {a, a, b}), b);
        }
        if (ok) {
          ThinEdge e;
          e.tail      = a;
          e.head      = b;
          e.type      = EdgeType::affine;
          e.certainty = mode == Mode::exact ? Certainty::exact : Certainty::witness;
          e.witness   = witness;
          out.push_back(std::move(e));
        }
      }
    }
    return out;
  }

  bool has_minimal_majority_witness(FiniteAlgebra const& x, Elem a, Elem b, Caps const& caps) {
    // Any majority witness will do, whatever type the pair reports.
    auto rec = classify_pair(x, a, b, caps);
    for (auto const& w : rec.witnesses) {
      if (w.type != EdgeType::majority) {
        continue;
      }
      bool minimal = true;
      for (Elem z = 0; minimal && z < x.size(); ++z) {
        if (w.block_of[z] == w.block_of[b]) {
          minimal = sg_closure(x, std::vector<Elem>{a, z}).members.contains(b);
        }
      }
      if (minimal) {
        return true;
      }
    }
    return false;
  }

  bool special_flag(Realization const& x, ClassContext const& k, Elem a, Elem b, Mode mode) {
    for (auto const& e : thin_majority_edges(x, k, mode)) {
      if (e.tail == a && e.head == b) {
        return e.special;
      }
    }
    throw Error(ErrorKind::precondition, "pair is not a thin majority edge");
  }

  std::vector<ThinEdge> ThinEdges::all() const {
    std::vector<ThinEdge> out = semilattice;
    out.insert(out.end(), majority.begin(), majority.end());
    out.insert(out.end(), affine.begin(), affine.end());
    return out;
  }

  ThinEdges thin_edges(Realization const& x, ClassContext const& k, Mode mode,
                       EdgeScope scope) {
    ThinEdges out;
    out.size        = x.size();
    out.semilattice = realized_semilattice_edges(x, k);
    if (scope != EdgeScope::s) {
      out.affine = thin_affine_edges(x, k, mode);
    }
    if (scope == EdgeScope::all) {
      out.majority = thin_majority_edges(x, k, mode);
    }
    out.certainty   = mode == Mode::exact ? Certainty::exact : Certainty::witness;
    return out;
  }

}  // namespace alggraph
