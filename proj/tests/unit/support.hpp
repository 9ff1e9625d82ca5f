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

// Small algebras and brute-force oracles shared by the unit tests. The
// oracles recompute closures by plain fixpoint iteration over whole
// argument spaces, with no worklists or union-find.

#ifndef ALGGRAPH_TESTS_SUPPORT_HPP_
#define ALGGRAPH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/corpus.hpp"
#include "alggraph/partition.hpp"
#include "alggraph/subpower.hpp"

namespace alggraph::testing {

  inline FiniteAlgebra named(std::string const& name) { return *corpus_algebra(name); }

  inline FiniteAlgebra binary(std::string name, std::size_t n, std::vector<Elem> table) {
    return FiniteAlgebra(std::move(name), n, {OpTable{"f", 2, std::move(table)}});
  }

  inline FiniteAlgebra ternary(std::string name, std::size_t n, std::vector<Elem> table) {
    return FiniteAlgebra(std::move(name), n, {OpTable{"m", 3, std::move(table)}});
  }

  // The table of an operation given as a function.
  inline std::vector<Elem> tabulate(std::size_t n, std::size_t arity,
                                    std::function<Elem(std::vector<Elem> const&)> const& f) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      cells *= n;
    }
    std::vector<Elem> out(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      out[i] = f(table_point(n, arity, i));
    }
    return out;
  }

  // Calls visit on every tuple of {0..n-1}^k.
  inline void for_each_tuple(std::size_t n, std::size_t k,
                             std::function<void(std::vector<Elem> const&)> const& visit) {
    std::vector<Elem> t(k, 0);
    while (true) {
      visit(t);
      std::size_t i = k;
      while (i > 0 && ++t[i - 1] == n) {
        t[--i] = 0;
      }
      if (i == 0) {
        return;
      }
    }
  }

  inline std::set<Elem> naive_sg(FiniteAlgebra const& a, std::set<Elem> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Elem> cur(s.begin(), s.end());
      for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
        std::size_t k = a.op(o).arity;
        for_each_tuple(cur.size(), k, [&](std::vector<Elem> const& idx) {
          std::vector<Elem> args(k);
          for (std::size_t i = 0; i < k; ++i) {
            args[i] = cur[idx[i]];
          }
          grew = s.insert(a.apply(o, args)).second || grew;
        });
      }
    }
    return s;
  }

  // Relation matrix of a partition.
  using Rel = std::vector<std::vector<bool>>;

  inline Partition to_partition(Rel const& r) {
    std::vector<std::size_t> ids(r.size());
    std::size_t              next = 0;
    for (std::size_t x = 0; x < r.size(); ++x) {
      ids[x] = next;
      for (std::size_t y = 0; y < x; ++y) {
        if (r[x][y]) {
          ids[x] = ids[y];
          break;
        }
      }
      if (ids[x] == next) {
        ++next;
      }
    }
    return Partition(ids);
  }

  // Least equivalence relation containing `pairs` and compatible with
  // every operation, applied to whole related argument tuples.
  inline Partition naive_cg(FiniteAlgebra const& a,
                            std::vector<std::pair<Elem, Elem>> const& pairs) {
    std::size_t n = a.size();
    Rel         r(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
      r[x][x] = true;
    }
    for (auto [x, y] : pairs) {
      r[x][y] = r[y][x] = true;
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (r[x][z] && r[z][y] && !r[x][y]) {
              r[x][y] = true;
              grew    = true;
            }
          }
        }
      }
      for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
        std::size_t k = a.op(o).arity;
        for_each_tuple(n, k, [&](std::vector<Elem> const& u) {
          for_each_tuple(n, k, [&](std::vector<Elem> const& v) {
            for (std::size_t i = 0; i < k; ++i) {
              if (!r[u[i]][v[i]]) {
                return;
              }
            }
            Elem fu = a.apply(o, u), fv = a.apply(o, v);
            if (!r[fu][fv]) {
              r[fu][fv] = r[fv][fu] = true;
              grew                  = true;
            }
          });
        });
      }
    }
    return to_partition(r);
  }

  // Every partition of 0..n-1 that is compatible with the operations.
  inline std::vector<Partition> naive_congruences(FiniteAlgebra const& a) {
    std::vector<Partition>   out;
    std::size_t              n = a.size();
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t i, std::size_t blocks) {
      if (i == n) {
        Partition p(rgs);
        for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
          bool        ok = true;
          std::size_t k  = a.op(o).arity;
          for_each_tuple(n, k, [&](std::vector<Elem> const& u) {
            for_each_tuple(n, k, [&](std::vector<Elem> const& v) {
              for (std::size_t j = 0; j < k; ++j) {
                if (!p.same(u[j], v[j])) {
                  return;
                }
              }
              ok = ok && p.same(a.apply(o, u), a.apply(o, v));
            });
          });
          if (!ok) {
            return;
          }
        }
        out.push_back(p);
        return;
      }
      for (std::size_t b = 0; b <= blocks && b < n; ++b) {
        rgs[i] = b;
        grow(i + 1, std::max(blocks, b + 1));
      }
    };
    if (n > 0) {
      rgs[0] = 0;
      grow(1, 1);
    }
    return out;
  }

  // Closure of generators in A^m by rounds over every argument choice.
  inline std::set<std::vector<Elem>> naive_subpower(
      FiniteAlgebra const& a, std::size_t m, std::vector<std::vector<Elem>> const& gens) {
    std::set<std::vector<Elem>> s(gens.begin(), gens.end());
    bool                        grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<Elem>> cur(s.begin(), s.end());
      for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
        std::size_t k = a.op(o).arity;
        for_each_tuple(cur.size(), k, [&](std::vector<Elem> const& idx) {
          std::vector<Elem> t(m), args(k);
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t i = 0; i < k; ++i) {
              args[i] = cur[idx[i]][c];
            }
            t[c] = a.apply(o, args);
          }
          grew = s.insert(std::move(t)).second || grew;
        });
      }
    }
    return s;
  }

  inline std::set<std::vector<Elem>> tuple_set(Subpower const& r) {
    auto t = r.tuples();
    return {t.begin(), t.end()};
  }

  inline std::set<Elem> member_set(ElementSet const& s) {
    auto m = s.members();
    return {m.begin(), m.end()};
  }

  inline Subpower relation(std::vector<FiniteAlgebra> factors,
                           std::vector<std::vector<Elem>> const& tuples) {
    return Subpower::from_tuples(std::move(factors), tuples);
  }

}  // namespace alggraph::testing

#endif  // ALGGRAPH_TESTS_SUPPORT_HPP_
