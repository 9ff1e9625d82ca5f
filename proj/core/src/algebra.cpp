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

#include "alggraph/algebra.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "alggraph/error.hpp"
#include "alggraph/partition.hpp"

namespace alggraph {

  std::size_t table_index(std::size_t n, std::span<Elem const> args) noexcept {
    std::size_t index = 0;
    for (Elem x : args) {
      index = index * n + x;
    }
    return index;
  }

  std::vector<Elem> table_point(std::size_t n, std::size_t arity, std::size_t index) {
    std::vector<Elem> point(arity);
    for (std::size_t i = arity; i-- > 0;) {
      point[i] = static_cast<Elem>(index % n);
      index /= n;
    }
    return point;
  }

  std::size_t checked_power(std::size_t n, std::size_t k, std::size_t limit) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (n != 0 && result > limit / n) {
        throw Error(ErrorKind::cap_exceeded,
                    "table of size " + std::to_string(n) + "^" + std::to_string(k)
                        + " exceeds limit " + std::to_string(limit));
      }
      result *= n;
    }
    return result;
  }

  namespace {
    std::string format_point(std::vector<Elem> const& p) {
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < p.size(); ++i) {
        out << (i ? "," : "") << p[i];
      }
      out << ')';
      return out.str();
    }
  }  // namespace

  FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size, std::vector<OpTable> ops)
      : name_(std::move(name)), size_(size), ops_(std::move(ops)) {
    if (size_ == 0) {
      throw Error(ErrorKind::malformed_table, "algebra '" + name_ + "' has empty universe");
    }
    std::set<std::string> names;
    for (auto const& op : ops_) {
      if (!names.insert(op.name).second) {
        throw Error(ErrorKind::duplicate_operation, "operation name '" + op.name
                                                        + "' repeated in '" + name_ + "'");
      }
      if (op.arity == 0) {
        throw Error(ErrorKind::malformed_table, "operation '" + op.name + "' has arity 0");
      }
      std::size_t expected
          = checked_power(size_, op.arity, std::numeric_limits<std::size_t>::max() / 2);
      if (op.table.size() != expected) {
        throw Error(ErrorKind::malformed_table,
                    "operation '" + op.name + "' has table length "
                        + std::to_string(op.table.size()) + ", expected "
                        + std::to_string(expected));
      }
      for (std::size_t i = 0; i < op.table.size(); ++i) {
        if (op.table[i] >= size_) {
          throw Error(ErrorKind::malformed_table,
                      "operation '" + op.name + "' value " + std::to_string(op.table[i])
                          + " out of range at " + format_point(table_point(size_, op.arity, i)));
        }
      }
      std::vector<Elem> diag(op.arity);
      for (std::size_t x = 0; x < size_; ++x) {
        std::fill(diag.begin(), diag.end(), static_cast<Elem>(x));
        if (op.table[table_index(size_, diag)] != x) {
          throw Error(ErrorKind::non_idempotent,
                      "operation '" + op.name + "' at x=" + std::to_string(x));
        }
      }
    }
  }

  bool FiniteAlgebra::same_signature(FiniteAlgebra const& other) const noexcept {
    if (ops_.size() != other.ops_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].name != other.ops_[i].name || ops_[i].arity != other.ops_[i].arity) {
        return false;
      }
    }
    return true;
  }

  FiniteAlgebra validate_algebra(RawAlgebra raw) {
    return FiniteAlgebra(std::move(raw.name), raw.size, std::move(raw.operations));
  }

  Subuniverse sg_closure(FiniteAlgebra const& a, ElementSet const& seed) {
    std::vector<Elem> members = seed.members();
    if (members.empty()) {
      throw Error(ErrorKind::precondition, "sg_closure of an empty seed");
    }
    ElementSet in = seed;
    // Semi-naive: each round only evaluates argument tuples that use at
    // least one element added in the previous round.
    std::size_t       old_end = 0;
    std::vector<Elem> args;
    while (old_end < members.size()) {
      std::size_t end = members.size();
      for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
        std::size_t k = a.op(o).arity;
        args.assign(k, 0);
        std::vector<std::size_t> idx(k, 0);
        // Enumerate all k-tuples over [0, end) with at least one index >= old_end.
        for (std::size_t first_new = 0; first_new < k; ++first_new) {
          // positions < first_new range over [0, old_end), position first_new
          // over [old_end, end), later positions over [0, end).
          std::vector<std::size_t> lo(k), hi(k);
          for (std::size_t p = 0; p < k; ++p) {
            lo[p] = p == first_new ? old_end : 0;
            hi[p] = p < first_new ? old_end : end;
          }
          bool empty = false;
          for (std::size_t p = 0; p < k; ++p) {
            if (lo[p] >= hi[p]) {
              empty = true;
            }
          }
          if (empty) {
            continue;
          }
          idx = lo;
          while (true) {
            for (std::size_t p = 0; p < k; ++p) {
              args[p] = members[idx[p]];
            }
            Elem r = a.apply(o, args);
            if (in.insert(r)) {
              members.push_back(r);
            }
            std::size_t p = k;
            while (p-- > 0) {
              if (++idx[p] < hi[p]) {
                break;
              }
              idx[p] = lo[p];
            }
            if (p == std::numeric_limits<std::size_t>::max()) {
              break;
            }
          }
        }
      }
      old_end = end;
    }
    return Subuniverse{a.size(), in};
  }

  Subuniverse sg_closure(FiniteAlgebra const& a, std::vector<Elem> const& seed) {
    for (Elem x : seed) {
      if (x >= a.size()) {
        throw Error(ErrorKind::precondition, "seed element out of range");
      }
    }
    return sg_closure(a, ElementSet::from(a.size(), seed));
  }

  bool is_subuniverse(FiniteAlgebra const& a, ElementSet const& set) {
    if (set.empty()) {
      return false;
    }
    return sg_closure(a, set).members == set;
  }

  InducedAlgebra induced_subalgebra(FiniteAlgebra const& a, ElementSet const& members,
                                    std::string name) {
    InducedAlgebra out;
    out.to_parent = members.members();
    out.from_parent.assign(a.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
      out.from_parent[out.to_parent[i]] = i;
    }
    std::size_t          m = out.to_parent.size();
    std::vector<OpTable> ops;
    for (auto const& op : a.operations()) {
      OpTable t{op.name, op.arity, {}};
      std::size_t cells = checked_power(m, op.arity, std::numeric_limits<std::size_t>::max() / 2);
      t.table.resize(cells);
      std::vector<Elem> local(op.arity), parent(op.arity);
      for (std::size_t i = 0; i < cells; ++i) {
        std::size_t rest = i;
        for (std::size_t p = op.arity; p-- > 0;) {
          local[p] = static_cast<Elem>(rest % m);
          rest /= m;
          parent[p] = out.to_parent[local[p]];
        }
        Elem r = op.table[table_index(a.size(), parent)];
        if (out.from_parent[r] == std::numeric_limits<std::size_t>::max()) {
          throw Error(ErrorKind::precondition, "induced_subalgebra: set is not a subuniverse");
        }
        t.table[i] = static_cast<Elem>(out.from_parent[r]);
      }
      ops.push_back(std::move(t));
    }
    if (name.empty()) {
      name = a.name() + "|sub";
    }
    out.algebra = FiniteAlgebra(std::move(name), m, std::move(ops));
    return out;
  }

  QuotientAlgebra quotient(FiniteAlgebra const& a, Partition const& theta, std::string name) {
    if (theta.size() != a.size()) {
      throw Error(ErrorKind::precondition, "partition size does not match algebra");
    }
    QuotientAlgebra out;
    std::size_t     m = theta.number_of_blocks();
    out.class_of.resize(a.size());
    out.representative.assign(m, 0);
    std::vector<char> seen(m, 0);
    for (std::size_t x = 0; x < a.size(); ++x) {
      auto b         = theta.block(static_cast<Elem>(x));
      out.class_of[x] = static_cast<Elem>(b);
      if (!seen[b]) {
        seen[b]                = 1;
        out.representative[b] = static_cast<Elem>(x);
      }
    }
    std::vector<OpTable> ops;
    for (auto const& op : a.operations()) {
      OpTable     t{op.name, op.arity, {}};
      std::size_t cells = checked_power(m, op.arity, std::numeric_limits<std::size_t>::max() / 2);
      t.table.assign(cells, 0);
      std::vector<char> filled(cells, 0);
      // Every parent point must land in the class fixed by its argument classes.
      std::size_t       parent_cells = op.table.size();
      std::vector<Elem> point(op.arity), classes(op.arity);
      for (std::size_t i = 0; i < parent_cells; ++i) {
        std::size_t rest = i;
        for (std::size_t p = op.arity; p-- > 0;) {
          point[p] = static_cast<Elem>(rest % a.size());
          rest /= a.size();
          classes[p] = out.class_of[point[p]];
        }
        std::size_t ci = table_index(m, classes);
        Elem        r  = out.class_of[op.table[i]];
        if (!filled[ci]) {
          filled[ci]  = 1;
          t.table[ci] = r;
        } else if (t.table[ci] != r) {
          std::vector<Elem> reps(op.arity);
          for (std::size_t p = 0; p < op.arity; ++p) {
            reps[p] = out.representative[classes[p]];
          }
          throw Error(ErrorKind::not_a_congruence,
                      "operation '" + op.name + "' maps " + format_point(reps) + " and "
                          + format_point(point) + " to different classes");
        }
      }
      ops.push_back(std::move(t));
    }
    if (name.empty()) {
      name = a.name() + "/theta";
    }
    out.algebra = FiniteAlgebra(std::move(name), m, std::move(ops));
    return out;
  }

  bool all_operations_are_projections(FiniteAlgebra const& a) {
    for (auto const& op : a.operations()) {
      bool found = false;
      for (std::size_t p = 0; p < op.arity && !found; ++p) {
        bool proj = true;
        for (std::size_t i = 0; i < op.table.size() && proj; ++i) {
          auto point = table_point(a.size(), op.arity, i);
          proj       = op.table[i] == point[p];
        }
        found = proj;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  FiniteAlgebra direct_product(FiniteAlgebra const& a, FiniteAlgebra const& b,
                               std::size_t table_limit) {
    if (!a.same_signature(b)) {
      throw Error(ErrorKind::signature_mismatch, a.name() + " vs " + b.name());
    }
    std::size_t          n = a.size() * b.size();
    std::vector<OpTable> ops;
    for (std::size_t o = 0; o < a.number_of_operations(); ++o) {
      auto const& op    = a.op(o);
      std::size_t cells = checked_power(n, op.arity, table_limit);
      OpTable     t{op.name, op.arity, std::vector<Elem>(cells)};
      std::vector<Elem> pa(op.arity), pb(op.arity);
      for (std::size_t i = 0; i < cells; ++i) {
        std::size_t rest = i;
        for (std::size_t p = op.arity; p-- > 0;) {
          Elem x = static_cast<Elem>(rest % n);
          rest /= n;
          pa[p] = static_cast<Elem>(x / b.size());
          pb[p] = static_cast<Elem>(x % b.size());
        }
        t.table[i] = static_cast<Elem>(a.apply(o, pa) * b.size() + b.apply(o, pb));
      }
      ops.push_back(std::move(t));
    }
    return FiniteAlgebra(a.name() + "x" + b.name(), n, std::move(ops));
  }

}  // namespace alggraph
