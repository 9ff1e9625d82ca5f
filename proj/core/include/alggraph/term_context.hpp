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

// The class K = HS(A_1) u ... u HS(A_m) for base algebras of one signature,
// with the term operations of K restricted to the points where the
// conditions on thin edges are evaluated.
//
// Binary terms are recorded on all pairs x != y and ternary terms on all
// non-constant triples with two distinct values. Every quantity the
// conditions inspect (values on two classes of a thick edge, the identities
// g(x,g(x,y,y),g(x,y,y)) = g(x,y,y) and h(h(x,y,y),y,y) = h(x,y,y), and the
// values g'(a,b,b), h'(a,a,b) and so on) lives on such points. A thick edge
// of a member U/alpha is a thick edge of the base with the same quotient,
// so the per-edge conditions are checked on the bases.

#ifndef ALGGRAPH_TERM_CONTEXT_HPP_
#define ALGGRAPH_TERM_CONTEXT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alggraph/caps.hpp"
#include "alggraph/clone.hpp"
#include "alggraph/edges.hpp"
#include "alggraph/hs_class.hpp"

namespace alggraph {

  // A thick edge {a/theta, b/theta} of a base algebra.
  struct ClassWitness {
    std::size_t              base = 0;
    Elem                     a    = 0;
    Elem                     b    = 0;
    EdgeType                 type = EdgeType::none;
    std::vector<std::size_t> block_of;  // npos outside Sg{a,b}
    std::vector<Elem>        block_representatives;

    bool same(Elem x, Elem y) const { return block_of[x] == block_of[y]; }
  };

  enum class SearchStatus { found, not_found_within_cap, exhausted };
  char const* to_string(SearchStatus s);

  // Indices of f into the binary fragment and of g, h into the ternary one.
  struct UniformOps {
    SearchStatus status = SearchStatus::not_found_within_cap;
    std::size_t  f      = npos;
    std::size_t  g      = npos;
    std::size_t  h      = npos;
  };

  enum class Condition { majority, minority };

  class ClassContext {
   public:
    ClassContext() = default;
    // Bases must share a signature. Throws Error(cap_exceeded) when HS
    // enumeration or edge classification exceeds its cap; fragment
    // truncation is recorded instead (see complete()).
    ClassContext(std::vector<FiniteAlgebra> bases, Caps const& caps = {});

    std::vector<FiniteAlgebra> const&           bases() const noexcept { return bases_; }
    std::vector<HsMember> const&                members() const noexcept { return members_; }
    std::vector<std::vector<EdgeRecord>> const& base_edges() const noexcept { return edges_; }
    std::vector<ClassWitness> const&            witnesses() const noexcept { return witnesses_; }
    Caps const&                                 caps() const noexcept { return caps_; }

    CloneFragment const& binary() const noexcept { return binary_; }
    CloneFragment const& ternary() const noexcept { return ternary_; }
    bool complete() const noexcept { return binary_.complete() && ternary_.complete(); }

    bool satisfies(Condition c, std::size_t i) const;
    // Ternary fragment functions satisfying the condition, in fragment order.
    std::vector<std::size_t> const& operations(Condition c) const {
      return c == Condition::majority ? majority_ : minority_;
    }
    // The fixed h for thin affine edges: the least qualifying restriction
    // in lexicographic order.
    std::optional<std::size_t> fixed_h() const noexcept { return fixed_h_; }

    UniformOps const& uniform() const noexcept { return uniform_; }

    // Clause checks of the uniform operations on one thick edge.
    bool f_clause(std::size_t f, ClassWitness const& w) const;
    bool g_clause(std::size_t g, std::size_t f, ClassWitness const& w) const;
    bool h_clause(std::size_t h, std::size_t f, ClassWitness const& w) const;

   private:
    void find_uniform();

    Caps                                 caps_;
    std::vector<FiniteAlgebra>           bases_;
    std::vector<HsMember>                members_;
    std::vector<std::vector<EdgeRecord>> edges_;
    std::vector<ClassWitness>            witnesses_;
    CloneFragment                        binary_;
    CloneFragment                        ternary_;
    std::vector<std::size_t>             majority_;
    std::vector<std::size_t>             minority_;
    std::optional<std::size_t>           fixed_h_;
    UniformOps                           uniform_;
  };

  // Uniform operations as full tables on each base.
  struct UniformTables {
    SearchStatus                       status = SearchStatus::not_found_within_cap;
    std::vector<std::array<OpTable, 3>> per_base;  // f, g, h
    std::string                        f_term, g_term, h_term;
  };

  // Throws Error(not_found_within_cap) or Error(search_exhausted).
  UniformTables find_uniform_ops(ClassContext const& k);

  // Ternary operations of K satisfying the condition, as tables on each
  // base. complete is false when the fragment was truncated.
  struct ConditionTables {
    std::vector<std::vector<OpTable>> per_base;  // [function][base]
    bool                              complete = true;
  };
  ConditionTables operations_satisfying_condition(ClassContext const& k, Condition c);

}  // namespace alggraph

#endif  // ALGGRAPH_TERM_CONTEXT_HPP_
