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

#include "alggraph/subpower.hpp"

#include <sstream>
#include <unordered_map>

#include "alggraph/error.hpp"

namespace alggraph {

  namespace {

    void check_signatures(std::vector<FiniteAlgebra> const& factors) {
      for (std::size_t i = 1; i < factors.size(); ++i) {
        if (!factors[0].same_signature(factors[i])) {
          throw Error(ErrorKind::signature_mismatch,
                      "factor " + std::to_string(i) + " (" + factors[i].name()
                          + ") differs from factor 0 (" + factors[0].name() + ")");
        }
      }
    }

    // Coordinatewise evaluation of one operation over a product.
    class ProductOp {
     public:
      ProductOp(std::vector<FiniteAlgebra> const& factors, std::size_t op) {
        arity_ = factors.empty() ? 0 : factors[0].op(op).arity;
        for (auto const& f : factors) {
          sizes_.push_back(f.size());
          tables_.push_back(f.op(op).table.data());
        }
      }

      std::size_t arity() const noexcept { return arity_; }

      template <typename GetArg>
      void apply(GetArg const& arg, std::vector<Elem>& out) const {
        out.resize(sizes_.size());
        Elem const* args[kMaxFast];
        if (arity_ <= kMaxFast) {
          for (std::size_t p = 0; p < arity_; ++p) {
            args[p] = arg(p).data();
          }
        }
        if (arity_ == 2) {
          for (std::size_t c = 0; c < sizes_.size(); ++c) {
            out[c] = tables_[c][args[0][c] * sizes_[c] + args[1][c]];
          }
          return;
        }
        if (arity_ == 3) {
          for (std::size_t c = 0; c < sizes_.size(); ++c) {
            std::size_t n = sizes_[c];
            out[c]        = tables_[c][(args[0][c] * n + args[1][c]) * n + args[2][c]];
          }
          return;
        }
        for (std::size_t c = 0; c < sizes_.size(); ++c) {
          std::size_t index = 0;
          for (std::size_t p = 0; p < arity_; ++p) {
            index = index * sizes_[c] + arg(p)[c];
          }
          out[c] = tables_[c][index];
        }
      }

     private:
      static constexpr std::size_t kMaxFast = 3;

      std::size_t              arity_ = 0;
      std::vector<std::size_t> sizes_;
      std::vector<Elem const*> tables_;
    };

    // Calls f(idx) for every k-tuple of indices in [0, end)^k having at
    // least one entry in [old_end, end). Stops early if f returns false.
    template <typename F>
    bool for_each_new_combination(std::size_t k, std::size_t old_end, std::size_t end, F&& f) {
      std::vector<std::size_t> idx(k), lo(k), hi(k);
      for (std::size_t first_new = 0; first_new < k; ++first_new) {
        bool empty = false;
        for (std::size_t p = 0; p < k; ++p) {
          lo[p] = p == first_new ? old_end : 0;
          hi[p] = p < first_new ? old_end : end;
          empty = empty || lo[p] >= hi[p];
        }
        if (empty) {
          continue;
        }
        idx = lo;
        while (true) {
          if (!f(idx)) {
            return false;
          }
          std::size_t p = k;
          while (p-- > 0) {
            if (++idx[p] < hi[p]) {
              break;
            }
            idx[p] = lo[p];
          }
          if (p == npos) {
            break;
          }
        }
      }
      return true;
    }

  }  // namespace

  Subpower::Subpower(std::vector<FiniteAlgebra> factors)
      : factors_(std::move(factors)), store_(factors_.size()) {
    check_signatures(factors_);
  }

  std::pair<std::size_t, bool> Subpower::add(std::span<Elem const> t, Derivation d, bool track) {
    auto res = store_.insert(t);
    if (res.second && track) {
      tracked_ = true;
      derivations_.push_back(std::move(d));
    }
    return res;
  }

  Subpower Subpower::from_tuples(std::vector<FiniteAlgebra>            factors,
                                 std::vector<std::vector<Elem>> const& tuples) {
    Subpower r(std::move(factors));
    for (auto const& t : tuples) {
      if (t.size() != r.arity()) {
        throw Error(ErrorKind::precondition, "tuple width does not match relation arity");
      }
      for (std::size_t c = 0; c < t.size(); ++c) {
        if (t[c] >= r.factors_[c].size()) {
          throw Error(ErrorKind::precondition, "tuple value out of range");
        }
      }
      r.add(t, {}, false);
    }
    if (!r.is_closed()) {
      throw Error(ErrorKind::precondition, "listed tuples are not closed under the operations");
    }
    return r;
  }

  bool Subpower::is_subdirect() const { return !first_non_subdirect_coordinate().has_value(); }

  std::optional<std::size_t> Subpower::first_non_subdirect_coordinate() const {
    for (std::size_t c = 0; c < arity(); ++c) {
      ElementSet seen(factors_[c].size());
      for (std::size_t i = 0; i < size(); ++i) {
        seen.insert(store_[i][c]);
      }
      if (seen.count() != factors_[c].size()) {
        return c;
      }
    }
    return std::nullopt;
  }

  bool Subpower::is_closed() const {
    if (factors_.empty()) {
      return true;
    }
    std::vector<Elem> out;
    for (std::size_t o = 0; o < factors_[0].number_of_operations(); ++o) {
      ProductOp op(factors_, o);
      bool      ok = for_each_new_combination(op.arity(), 0, size(), [&](auto const& idx) {
        op.apply([&](std::size_t p) { return store_[idx[p]]; }, out);
        return store_.contains(out);
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Elem>> Subpower::tuples() const {
    std::vector<std::vector<Elem>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out.push_back(tuple_vector(i));
    }
    return out;
  }

  Subpower subpower_generate(std::vector<FiniteAlgebra>            factors,
                             std::vector<std::vector<Elem>> const& generators,
                             GenerateOptions const&                options) {
    Subpower r(std::move(factors));
    r.generators_ = generators.size();
    r.tracked_    = options.track;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      auto const& t = generators[g];
      if (t.size() != r.arity()) {
        throw Error(ErrorKind::precondition, "generator " + std::to_string(g)
                                                 + " has wrong number of coordinates");
      }
      for (std::size_t c = 0; c < t.size(); ++c) {
        if (t[c] >= r.factors_[c].size()) {
          throw Error(ErrorKind::precondition, "generator " + std::to_string(g)
                                                   + " has out-of-range coordinate");
        }
      }
      Derivation d;
      d.generator = g;
      auto [index, inserted] = r.add(t, std::move(d), options.track);
      if (options.stop_when && options.stop_when(r.tuple(index))) {
        r.stopped_at_ = index;
        r.complete_   = false;
        return r;
      }
      (void) inserted;
    }
    if (options.track) {
      r.tracked_ = true;
    }
    if (r.factors_.empty() || r.size() == 0) {
      return r;
    }

    std::vector<ProductOp> ops;
    for (std::size_t o = 0; o < r.factors_[0].number_of_operations(); ++o) {
      ops.emplace_back(r.factors_, o);
    }

    std::size_t       old_end = 0;
    std::vector<Elem> out;
    bool              halted  = false;
    std::size_t       applied = 0;
    while (old_end < r.size() && !halted) {
      std::size_t end = r.size();
      for (std::size_t o = 0; o < ops.size() && !halted; ++o) {
        auto const& op = ops[o];
        for_each_new_combination(op.arity(), old_end, end, [&](auto const& idx) {
          if (++applied > options.work) {
            if (options.throw_on_cap) {
              throw Error(ErrorKind::cap_exceeded, "subpower closure exceeds work budget");
            }
            r.complete_ = false;
            halted      = true;
            return false;
          }
          op.apply([&](std::size_t p) { return r.store_[idx[p]]; }, out);
          auto [index, inserted] = r.store_.insert(out);
          if (!inserted) {
            return true;
          }
          if (options.track) {
            r.derivations_.push_back(Derivation{o, npos, idx});
          }
          if (options.stop_when && options.stop_when(r.tuple(index))) {
            r.stopped_at_ = index;
            r.complete_   = false;
            halted        = true;
            return false;
          }
          if (r.size() > options.cap) {
            if (options.throw_on_cap) {
              throw Error(ErrorKind::cap_exceeded,
                          "subpower exceeds " + std::to_string(options.cap) + " tuples");
            }
            r.complete_ = false;
            halted      = true;
            return false;
          }
          return true;
        });
      }
      old_end = end;
    }
    return r;
  }

  std::vector<Elem> replay_derivation(Subpower const& r, std::size_t i) {
    if (!r.tracked()) {
      throw Error(ErrorKind::precondition, "subpower was generated without tracking");
    }
    auto const& d = r.derivation(i);
    if (d.op == npos) {
      return r.tuple_vector(i);
    }
    std::vector<Elem> out;
    ProductOp         op(r.factors(), d.op);
    op.apply([&](std::size_t p) { return r.tuple(d.args[p]); }, out);
    return out;
  }

  Subpower project(Subpower const& r, std::vector<std::size_t> const& coords) {
    std::vector<FiniteAlgebra> factors;
    for (auto c : coords) {
      factors.push_back(r.factor(c));
    }
    Subpower          out(std::move(factors));
    std::vector<Elem> t(coords.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto src = r.tuple(i);
      for (std::size_t j = 0; j < coords.size(); ++j) {
        t[j] = src[coords[j]];
      }
      out.add(t, {}, false);
    }
    return out;
  }

  Term Term::variable(std::size_t arity, std::size_t var) {
    Node n;
    n.var = var;
    return Term(arity, {n}, 0);
  }

  Elem Term::evaluate(FiniteAlgebra const& a, std::span<Elem const> args) const {
    std::vector<Elem> value(nodes_.size());
    std::vector<Elem> buf;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      auto const& n = nodes_[i];
      if (n.op == npos) {
        value[i] = args[n.var];
      } else {
        buf.resize(n.children.size());
        for (std::size_t p = 0; p < n.children.size(); ++p) {
          buf[p] = value[n.children[p]];
        }
        value[i] = a.apply(n.op, buf);
      }
    }
    return value[root_];
  }

  std::vector<Elem> Term::table(FiniteAlgebra const& a) const {
    std::size_t n     = a.size();
    std::size_t cells = checked_power(n, arity_, std::size_t{1} << 28);
    // Nodes are stored children-first, so one pass per node suffices.
    std::vector<std::vector<Elem>> value(nodes_.size());
    std::vector<Elem>              buf;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      auto const& node = nodes_[i];
      value[i].resize(cells);
      if (node.op == npos) {
        for (std::size_t c = 0; c < cells; ++c) {
          value[i][c] = table_point(n, arity_, c)[node.var];
        }
      } else {
        buf.resize(node.children.size());
        for (std::size_t c = 0; c < cells; ++c) {
          for (std::size_t p = 0; p < node.children.size(); ++p) {
            buf[p] = value[node.children[p]][c];
          }
          value[i][c] = a.apply(node.op, buf);
        }
      }
    }
    return value[root_];
  }

  OpTable Term::op_table(FiniteAlgebra const& a, std::string name) const {
    return OpTable{std::move(name), arity_, table(a)};
  }

  std::string Term::to_string(FiniteAlgebra const& signature) const {
    std::vector<std::string> text(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      auto const& n = nodes_[i];
      if (n.op == npos) {
        static char const* names[] = {"x", "y", "z"};
        text[i] = n.var < 3 ? names[n.var] : "x" + std::to_string(n.var);
      } else {
        std::ostringstream out;
        out << signature.op(n.op).name << '(';
        for (std::size_t p = 0; p < n.children.size(); ++p) {
          out << (p ? "," : "") << text[n.children[p]];
        }
        out << ')';
        text[i] = out.str();
      }
    }
    return text[root_];
  }

  Term extract_term(Subpower const& r, std::size_t tuple_index) {
    if (!r.tracked()) {
      throw Error(ErrorKind::precondition, "subpower was generated without tracking");
    }
    std::size_t                                  arity = r.number_of_generators();
    std::vector<Term::Node>                      nodes;
    std::unordered_map<std::size_t, std::size_t> node_of;
    // Iterative post-order over the derivation DAG.
    std::vector<std::pair<std::size_t, bool>> stack{{tuple_index, false}};
    while (!stack.empty()) {
      auto [t, expanded] = stack.back();
      stack.pop_back();
      if (node_of.count(t)) {
        continue;
      }
      auto const& d = r.derivation(t);
      if (d.op == npos) {
        Term::Node n;
        n.var      = d.generator;
        node_of[t] = nodes.size();
        nodes.push_back(n);
        continue;
      }
      if (!expanded) {
        stack.push_back({t, true});
        for (auto a : d.args) {
          if (!node_of.count(a)) {
            stack.push_back({a, false});
          }
        }
        continue;
      }
      Term::Node n;
      n.op = d.op;
      for (auto a : d.args) {
        n.children.push_back(node_of.at(a));
      }
      node_of[t] = nodes.size();
      nodes.push_back(std::move(n));
    }
    return Term(arity, std::move(nodes), node_of.at(tuple_index));
  }

}  // namespace alggraph
