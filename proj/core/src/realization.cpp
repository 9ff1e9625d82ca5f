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

#include "alggraph/realization.hpp"

#include "alggraph/error.hpp"

namespace alggraph {

  Realization Realization::of_base(FiniteAlgebra const& a, std::size_t base) {
    Realization out;
    out.algebra_  = a;
    out.bases_    = {base};
    out.preimage_ = TupleStore(1);
    for (Elem x = 0; x < a.size(); ++x) {
      out.reps_.push_back({x});
      out.preimage_.insert(out.reps_.back());
      out.value_of_.push_back(x);
    }
    return out;
  }

  Realization Realization::of_member(HsMember const& m) {
    Realization out;
    out.algebra_  = m.algebra;
    out.bases_    = {m.base};
    out.preimage_ = TupleStore(1);
    for (Elem r : m.representative) {
      out.reps_.push_back({r});
    }
    for (std::size_t x = 0; x < m.class_of.size(); ++x) {
      if (m.class_of[x] != npos) {
        Elem t[] = {static_cast<Elem>(x)};
        out.preimage_.insert(t);
        out.value_of_.push_back(static_cast<Elem>(m.class_of[x]));
      }
    }
    return out;
  }

  Realization Realization::of_subpower(Subpower const& r, std::vector<std::size_t> coordinate_bases,
                                       std::size_t table_limit, std::string name) {
    if (coordinate_bases.size() != r.arity()) {
      throw Error(ErrorKind::precondition, "one base index per coordinate is required");
    }
    Realization out;
    out.bases_    = std::move(coordinate_bases);
    out.preimage_ = TupleStore(r.arity());
    for (std::size_t i = 0; i < r.size(); ++i) {
      out.reps_.push_back(r.tuple_vector(i));
      out.preimage_.insert(r.tuple(i));
      out.value_of_.push_back(static_cast<Elem>(i));
    }
    std::size_t          m = r.size();
    std::vector<OpTable> ops;
    if (r.arity() > 0) {
      auto const& sig = r.factor(0);
      for (std::size_t o = 0; o < sig.number_of_operations(); ++o) {
        std::size_t       k     = sig.op(o).arity;
        std::size_t       cells = checked_power(m, k, table_limit);
        OpTable           t{sig.op(o).name, k, std::vector<Elem>(cells)};
        std::vector<Elem> args(k), result(r.arity());
        for (std::size_t index = 0; index < cells; ++index) {
          std::size_t rest = index;
          for (std::size_t p = k; p-- > 0;) {
            args[p] = static_cast<Elem>(rest % m);
            rest /= m;
          }
          for (std::size_t c = 0; c < r.arity(); ++c) {
            std::vector<Elem> coord(k);
            for (std::size_t p = 0; p < k; ++p) {
              coord[p] = out.reps_[args[p]][c];
            }
            result[c] = r.factor(c).apply(o, coord);
          }
          auto found = r.find(result);
          if (!found) {
            throw Error(ErrorKind::precondition, "relation is not closed under " + sig.op(o).name);
          }
          t.table[index] = static_cast<Elem>(*found);
        }
        ops.push_back(std::move(t));
      }
    }
    if (name.empty()) {
      name = "R";
    }
    out.algebra_ = FiniteAlgebra(std::move(name), m, std::move(ops));
    return out;
  }

  Realization Realization::quotient(Partition const& theta, std::string name) const {
    auto        q = alggraph::quotient(algebra_, theta, name.empty() ? algebra_.name() + "/theta" : name);
    Realization out;
    out.algebra_  = q.algebra;
    out.bases_    = bases_;
    out.preimage_ = TupleStore(bases_.size());
    for (Elem c = 0; c < q.algebra.size(); ++c) {
      out.reps_.push_back(reps_[q.representative[c]]);
    }
    for (std::size_t i = 0; i < preimage_.size(); ++i) {
      out.preimage_.insert(preimage_[i]);
      out.value_of_.push_back(q.class_of[value_of_[i]]);
    }
    return out;
  }

  Realization Realization::restrict(ElementSet const& members, std::string name) const {
    auto        induced = induced_subalgebra(algebra_, members,
                                             name.empty() ? algebra_.name() + "|sub" : name);
    Realization out;
    out.algebra_  = induced.algebra;
    out.bases_    = bases_;
    out.preimage_ = TupleStore(bases_.size());
    for (Elem x : induced.to_parent) {
      out.reps_.push_back(reps_[x]);
    }
    for (std::size_t i = 0; i < preimage_.size(); ++i) {
      std::size_t local = induced.from_parent[value_of_[i]];
      if (local != npos) {
        out.preimage_.insert(preimage_[i]);
        out.value_of_.push_back(static_cast<Elem>(local));
      }
    }
    return out;
  }

  std::optional<Elem> Realization::element_of(std::span<Elem const> tuple) const {
    auto i = preimage_.find(tuple);
    if (!i) {
      return std::nullopt;
    }
    return value_of_[*i];
  }

  Elem Realization::apply(CloneFragment const& f, std::size_t i, std::span<Elem const> args) const {
    std::vector<Elem> result(bases_.size()), point(args.size());
    for (std::size_t c = 0; c < bases_.size(); ++c) {
      for (std::size_t p = 0; p < args.size(); ++p) {
        point[p] = reps_[args[p]][c];
      }
      result[c] = f.value(i, bases_[c], point);
    }
    auto x = element_of(result);
    if (!x) {
      throw Error(ErrorKind::precondition, "term value leaves the realized algebra");
    }
    return *x;
  }

  Elem Realization::apply(std::vector<FiniteAlgebra> const& bases, Term const& t,
                          std::span<Elem const> args) const {
    std::vector<Elem> result(bases_.size()), point(args.size());
    for (std::size_t c = 0; c < bases_.size(); ++c) {
      for (std::size_t p = 0; p < args.size(); ++p) {
        point[p] = reps_[args[p]][c];
      }
      result[c] = t.evaluate(bases.at(bases_[c]), point);
    }
    auto x = element_of(result);
    if (!x) {
      throw Error(ErrorKind::precondition, "term value leaves the realized algebra");
    }
    return *x;
  }

}  // namespace alggraph
