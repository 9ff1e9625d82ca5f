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

#include "alggraph/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "alggraph/error.hpp"

namespace alggraph {

  namespace {

    // Calls f(args) for every argument tuple of the given arity with
    // position p left free (its value is overwritten by the callback).
    template <typename F>
    void for_each_translation(std::size_t n, std::size_t arity, std::size_t p, F&& f) {
      std::size_t       others = checked_power(n, arity - 1, std::size_t{1} << 30);
      std::vector<Elem> args(arity);
      for (std::size_t c = 0; c < others; ++c) {
        std::size_t rest = c;
        for (std::size_t q = arity; q-- > 0;) {
          if (q == p) {
            continue;
          }
          args[q] = static_cast<Elem>(rest % n);
          rest /= n;
        }
        f(args);
      }
    }

  }  // namespace

  Partition cg(FiniteAlgebra const& a, std::vector<std::pair<Elem, Elem>> const& pairs) {
    std::size_t                        n = a.size();
    UnionFind                          uf(n);
    std::vector<std::pair<Elem, Elem>> pending;
    for (auto [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw Error(ErrorKind::precondition, "pair outside the universe");
      }
      if (uf.unite(x, y)) {
        pending.emplace_back(x, y);
      }
    }
    // Every merged pair is pushed through every basic translation; images
    // of a generating pair under a translation generate the images of the
    // whole equivalence.
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
        std::size_t k = a.op(o).arity;
        for (std::size_t p = 0; p < k; ++p) {
          for_each_translation(n, k, p, [&](std::vector<Elem>& args) {
            args[p]  = x;
            Elem fx  = a.apply(o, args);
            args[p]  = y;
            Elem fy  = a.apply(o, args);
            if (uf.unite(fx, fy)) {
              pending.emplace_back(fx, fy);
            }
          });
        }
      }
    }
    return Partition::from_union_find(uf);
  }

  Partition cg(FiniteAlgebra const& a, Partition const& theta) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (auto const& block : theta.blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        pairs.emplace_back(block[0], block[i]);
      }
    }
    return cg(a, pairs);
  }

  std::optional<CompatibilityWitness> compatibility_witness(FiniteAlgebra const& a,
                                                            Partition const&     theta) {
    std::size_t n = a.size();
    if (theta.size() != n) {
      throw Error(ErrorKind::precondition, "partition size differs from algebra size");
    }
    auto blocks = theta.blocks();
    for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
      std::size_t k = a.op(o).arity;
      for (std::size_t p = 0; p < k; ++p) {
        std::optional<CompatibilityWitness> found;
        for_each_translation(n, k, p, [&](std::vector<Elem>& args) {
          if (found) {
            return;
          }
          for (auto const& block : blocks) {
            args[p]   = block[0];
            Elem base = a.apply(o, args);
            for (std::size_t i = 1; i < block.size(); ++i) {
              args[p] = block[i];
              if (!theta.same(base, a.apply(o, args))) {
                CompatibilityWitness w;
                w.op    = o;
                w.right = args;
                args[p] = block[0];
                w.left  = args;
                found   = std::move(w);
                return;
              }
            }
          }
        });
        if (found) {
          return found;
        }
      }
    }
    return std::nullopt;
  }

  bool is_congruence(FiniteAlgebra const& a, Partition const& theta) {
    return !compatibility_witness(a, theta).has_value();
  }

  std::vector<Partition> all_congruences(FiniteAlgebra const& a, std::size_t cap) {
    std::size_t         n = a.size();
    std::set<Partition> seen;
    seen.insert(Partition::equality(n));
    std::vector<Partition> principal;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        Partition p = cg(a, std::vector<std::pair<Elem, Elem>>{{x, y}});
        if (seen.insert(p).second) {
          principal.push_back(p);
        }
      }
    }
    // Every congruence is a join of principal ones.
    std::vector<Partition> frontier(principal.begin(), principal.end());
    while (!frontier.empty()) {
      std::vector<Partition> next;
      for (auto const& theta : frontier) {
        for (auto const& p : principal) {
          Partition j = cg(a, theta.join(p));
          if (seen.insert(j).second) {
            if (seen.size() > cap) {
              throw Error(ErrorKind::cap_exceeded,
                          "congruence lattice exceeds " + std::to_string(cap) + " members");
            }
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Partition> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](Partition const& l, Partition const& r) {
      if (l.number_of_blocks() != r.number_of_blocks()) {
        return l.number_of_blocks() > r.number_of_blocks();
      }
      return l < r;
    });
    return out;
  }

  std::vector<Partition> maximal_congruences(FiniteAlgebra const& a, std::size_t cap) {
    if (a.size() <= 1) {
      return {};
    }
    auto                   lattice = all_congruences(a, cap);
    std::vector<Partition> out;
    for (auto const& theta : lattice) {
      if (theta.is_full()) {
        continue;
      }
      bool covered_only_by_full = true;
      for (auto const& other : lattice) {
        if (!other.is_full() && other != theta && theta.refines(other)) {
          covered_only_by_full = false;
          break;
        }
      }
      if (covered_only_by_full) {
        out.push_back(theta);
      }
    }
    return out;
  }

  bool is_simple(FiniteAlgebra const& a) {
    if (a.size() <= 1) {
      return false;
    }
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = x + 1; y < a.size(); ++y) {
        if (!cg(a, std::vector<std::pair<Elem, Elem>>{{x, y}}).is_full()) {
          return false;
        }
      }
    }
    return true;
  }

  Tolerance link_tolerance(Subpower const& r, std::size_t i) {
    if (i >= r.arity()) {
      throw Error(ErrorKind::precondition, "coordinate out of range");
    }
    std::size_t n = r.factor(i).size();
    ElementSet  seen(n);
    // Group tuples by their values off coordinate i.
    std::map<std::vector<Elem>, std::vector<Elem>> groups;
    for (std::size_t t = 0; t < r.size(); ++t) {
      auto              tuple = r.tuple(t);
      std::vector<Elem> key;
      key.reserve(r.arity() - 1);
      for (std::size_t c = 0; c < r.arity(); ++c) {
        if (c != i) {
          key.push_back(tuple[c]);
        }
      }
      groups[key].push_back(tuple[i]);
      seen.insert(tuple[i]);
    }
    if (seen.count() != n) {
      throw Error(ErrorKind::not_subdirect, "coordinate " + std::to_string(i)
                                                + " is not onto its factor");
    }
    Tolerance tol(n);
    for (auto const& [key, values] : groups) {
      for (Elem x : values) {
        for (Elem y : values) {
          tol.relate(x, y);
        }
      }
    }
    return tol;
  }

  Partition link_congruence(Subpower const& r, std::size_t i) {
    return link_tolerance(r, i).closure();
  }

  bool is_linked(Subpower const& r) {
    if (r.arity() != 2) {
      throw Error(ErrorKind::precondition, "linkedness is defined for binary relations");
    }
    return link_congruence(r, 0).is_full() && link_congruence(r, 1).is_full();
  }

  ElementSet image(Subpower const& r, ElementSet const& first) {
    ElementSet out(r.factor(1).size());
    for (std::size_t t = 0; t < r.size(); ++t) {
      auto tuple = r.tuple(t);
      if (first.contains(tuple[0])) {
        out.insert(tuple[1]);
      }
    }
    return out;
  }

  ElementSet preimage(Subpower const& r, ElementSet const& second) {
    ElementSet out(r.factor(0).size());
    for (std::size_t t = 0; t < r.size(); ++t) {
      auto tuple = r.tuple(t);
      if (second.contains(tuple[1])) {
        out.insert(tuple[0]);
      }
    }
    return out;
  }

}  // namespace alggraph
