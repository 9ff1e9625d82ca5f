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

#include "alggraph/clone.hpp"

#include <algorithm>

#include "alggraph/error.hpp"

namespace alggraph {

  namespace {

    std::size_t distinct_values(std::span<Elem const> t) {
      std::vector<Elem> v(t.begin(), t.end());
      std::sort(v.begin(), v.end());
      return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
    }

    bool selected(std::span<Elem const> t, PointSelection selection) {
      std::size_t d = distinct_values(t);
      if (d < 2) {
        return false;
      }
      return selection == PointSelection::non_constant || d == 2;
    }

  }  // namespace

  CloneFragment::CloneFragment(std::vector<FiniteAlgebra> bases, std::size_t arity,
                               PointSelection selection, std::size_t cap, std::size_t work)
      : bases_(std::move(bases)), arity_(arity), cap_(cap) {
    if (arity == 0 || arity > 3) {
      throw Error(ErrorKind::precondition, "clone fragments support arities 1 to 3");
    }
    std::vector<FiniteAlgebra>     factors;
    std::vector<std::vector<Elem>> generators(arity);
    for (auto const& base : bases_) {
      std::size_t cells = checked_power(base.size(), arity, std::size_t{1} << 24);
      column_of_.emplace_back(cells, npos);
      for (std::size_t index = 0; index < cells; ++index) {
        auto point = table_point(base.size(), arity, index);
        if (!selected(point, selection)) {
          continue;
        }
        column_of_.back()[index] = factors.size();
        factors.push_back(base);
        for (std::size_t v = 0; v < arity; ++v) {
          generators[v].push_back(point[v]);
        }
      }
    }
    GenerateOptions options;
    options.track        = true;
    options.cap          = cap;
    options.work         = work;
    options.throw_on_cap = false;
    if (factors.empty()) {
      // Only constant points: every term is determined by idempotence.
      closure_ = subpower_generate({}, generators, options);
      return;
    }
    closure_ = subpower_generate(std::move(factors), generators, options);
  }

  bool CloneFragment::covers(std::size_t base, std::span<Elem const> args) const {
    if (std::all_of(args.begin(), args.end(), [&](Elem x) { return x == args[0]; })) {
      return true;
    }
    return column_of_.at(base)[table_index(bases_[base].size(), args)] != npos;
  }

  Elem CloneFragment::value(std::size_t i, std::size_t base, std::span<Elem const> args) const {
    if (std::all_of(args.begin(), args.end(), [&](Elem x) { return x == args[0]; })) {
      return args[0];
    }
    std::size_t column = column_of_.at(base)[table_index(bases_[base].size(), args)];
    if (column == npos) {
      throw Error(ErrorKind::precondition, "point outside the clone fragment");
    }
    return closure_.tuple(i)[column];
  }

  std::vector<Elem> CloneFragment::table(std::size_t i, std::size_t base) const {
    return term(i).table(bases_.at(base));
  }

  TermOpSet term_ops(FiniteAlgebra const& a, std::size_t arity, std::size_t cap, std::size_t work) {
    CloneFragment fragment({a}, arity, PointSelection::non_constant, cap, work);
    TermOpSet     out;
    out.arity    = arity;
    out.complete = fragment.complete();
    out.cap      = cap;
    std::size_t cells = checked_power(a.size(), arity, std::size_t{1} << 24);
    for (std::size_t i = 0; i < fragment.size(); ++i) {
      OpTable t;
      t.name  = "t" + std::to_string(i);
      t.arity = arity;
      t.table.resize(cells);
      for (std::size_t index = 0; index < cells; ++index) {
        auto point     = table_point(a.size(), arity, index);
        t.table[index] = fragment.value(i, 0, point);
      }
      out.functions.push_back(std::move(t));
    }
    return out;
  }

}  // namespace alggraph
