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

#include "alggraph/io.hpp"

#include <fstream>
#include <sstream>

#include "alggraph/corpus.hpp"
#include "alggraph/error.hpp"

namespace alggraph {

  namespace {

    [[noreturn]] void parse_error(std::string const& what) { throw Error(ErrorKind::parse, what); }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        parse_error(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::size_t natural(Json const& j, char const* what) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        parse_error(std::string(what) + " must be a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    std::vector<std::vector<Elem>> tuple_list(Json const& j, std::size_t arity) {
      if (!j.is_array()) {
        parse_error("tuple list must be an array");
      }
      std::vector<std::vector<Elem>> out;
      for (auto const& t : j) {
        if (!t.is_array() || t.size() != arity) {
          parse_error("tuple of wrong length");
        }
        std::vector<Elem> tuple;
        for (auto const& v : t) {
          tuple.push_back(static_cast<Elem>(natural(v, "tuple entry")));
        }
        out.push_back(std::move(tuple));
      }
      return out;
    }

    Json element_set(ElementSet const& s) { return s.members(); }

  }  // namespace

  Json to_json(FiniteAlgebra const& a) {
    Json ops = Json::array();
    for (auto const& op : a.operations()) {
      ops.push_back({{"name", op.name}, {"arity", op.arity}, {"table", op.table}});
    }
    return {{"name", a.name()}, {"size", a.size()}, {"operations", ops}};
  }

  FiniteAlgebra algebra_from_json(Json const& j) {
    RawAlgebra raw;
    auto const& name = field(j, "name");
    if (!name.is_string()) {
      parse_error("\"name\" must be a string");
    }
    raw.name = name.get<std::string>();
    raw.size = natural(field(j, "size"), "\"size\"");
    auto const& ops = field(j, "operations");
    if (!ops.is_array()) {
      parse_error("\"operations\" must be an array");
    }
    for (auto const& o : ops) {
      OpTable op;
      auto const& op_name = field(o, "name");
      if (!op_name.is_string()) {
        parse_error("operation name must be a string");
      }
      op.name  = op_name.get<std::string>();
      op.arity = natural(field(o, "arity"), "\"arity\"");
      auto const& table = field(o, "table");
      if (!table.is_array()) {
        parse_error("\"table\" must be an array");
      }
      for (auto const& v : table) {
        op.table.push_back(static_cast<Elem>(natural(v, "table entry")));
      }
      raw.operations.push_back(std::move(op));
    }
    return validate_algebra(std::move(raw));
  }

  Json to_json(Partition const& p) { return p.block_ids(); }

  Json to_json(Subpower const& r) {
    Json factors = Json::array();
    for (auto const& f : r.factors()) {
      factors.push_back(to_json(f));
    }
    auto tuples = r.tuples();
    std::sort(tuples.begin(), tuples.end());
    return {{"factors", factors}, {"arity", r.arity()}, {"tuples", tuples}};
  }

  Subpower relation_from_json(Json const& j, FactorResolver const& resolve, Caps const& caps) {
    auto const& fs = field(j, "factors");
    if (!fs.is_array() || fs.empty()) {
      parse_error("\"factors\" must be a nonempty array");
    }
    std::vector<FiniteAlgebra> factors;
    for (auto const& f : fs) {
      if (f.is_string()) {
        auto name = f.get<std::string>();
        auto a    = resolve(name);
        if (!a) {
          parse_error("unknown factor \"" + name + "\"");
        }
        factors.push_back(std::move(*a));
      } else {
        factors.push_back(algebra_from_json(f));
      }
    }
    std::size_t arity = natural(field(j, "arity"), "\"arity\"");
    if (arity != factors.size()) {
      parse_error("\"arity\" differs from the number of factors");
    }
    if (arity > caps.coordinates) {
      throw Error(ErrorKind::cap_exceeded, "relation arity exceeds the coordinate cap");
    }
    bool has_gens = j.contains("generators"), has_tuples = j.contains("tuples");
    if (has_gens == has_tuples) {
      parse_error("exactly one of \"generators\" and \"tuples\" is required");
    }
    auto check_range = [&](std::vector<std::vector<Elem>> const& ts) {
      for (auto const& t : ts) {
        for (std::size_t c = 0; c < arity; ++c) {
          if (t[c] >= factors[c].size()) {
            parse_error("tuple entry outside its factor");
          }
        }
      }
    };
    if (has_tuples) {
      auto ts = tuple_list(j.at("tuples"), arity);
      check_range(ts);
      return Subpower::from_tuples(std::move(factors), ts);
    }
    auto gens = tuple_list(j.at("generators"), arity);
    if (gens.empty()) {
      parse_error("\"generators\" is empty");
    }
    check_range(gens);
    GenerateOptions options;
    options.cap  = caps.tuples;
    options.work = caps.work;
    return subpower_generate(std::move(factors), gens, options);
  }

  Json to_json(Check const& c) {
    return {{"name", c.name},
            {"verdict", to_string(c.verdict)},
            {"failed_hypotheses", c.failed_hypotheses},
            {"examined", c.examined},
            {"failures", c.failures},
            {"counterexamples", c.counterexamples}};
  }

  Json to_json(Report const& r) {
    Json checks = Json::array();
    for (auto const& c : r.checks) {
      checks.push_back(to_json(c));
    }
    return {{"kind", r.kind},
            {"instance", r.instance},
            {"verdict", to_string(r.verdict)},
            {"failed_hypotheses", r.failed_hypotheses},
            {"checks", checks},
            {"details", r.details}};
  }

  int exit_code(Verdict v) {
    switch (v) {
      case Verdict::pass: return 0;
      case Verdict::fail: return 1;
      case Verdict::inapplicable: return 2;
    }
    return 3;
  }

  Json to_json(EdgeRecord const& e, FiniteAlgebra const& a) {
    Json witnesses = Json::array();
    for (auto const& w : e.witnesses) {
      Json blocks = Json::array();
      for (auto b : w.block_of) {
        blocks.push_back(b == npos ? Json(nullptr) : Json(b));
      }
      Json wj = {{"type", to_string(w.type)}, {"theta", blocks}};
      if (w.term) {
        wj["term"]  = w.term->to_string(a);
        wj["table"] = w.term->table(a);
      }
      witnesses.push_back(std::move(wj));
    }
    return {{"pair", {e.a, e.b}},
            {"type", to_string(e.type)},
            {"mixed", e.mixed},
            {"subalgebra", element_set(e.subalgebra)},
            {"unmatched", e.unmatched},
            {"witnesses", witnesses}};
  }

  Json to_json(ThinEdge const& e) {
    Json j = {{"tail", e.tail},
              {"head", e.head},
              {"type", to_string(e.type)},
              {"certainty", to_string(e.certainty)}};
    if (e.type == EdgeType::majority) {
      j["special"] = e.special;
    }
    if (!e.witness.empty()) {
      j["witness"] = e.witness;
    }
    return j;
  }

  Json to_json(Components const& c) {
    Json maximal = Json::array();
    for (std::size_t i = 0; i < c.count(); ++i) {
      if (c.maximal[i]) {
        maximal.push_back(i);
      }
    }
    return {{"members", c.members}, {"maximal", maximal}};
  }

  Json to_json(GraphAnalysis const& g) {
    Json edges = Json::array();
    for (auto const& e : g.edges.all()) {
      edges.push_back(to_json(e));
    }
    return {{"size", g.size},
            {"certainty", to_string(g.edges.certainty)},
            {"thin_edges", edges},
            {"components", {{"s", to_json(g.scc_s)}, {"as", to_json(g.scc_as)},
                            {"asm", to_json(g.scc_asm)}}},
            {"max", element_set(g.max)},
            {"amax", element_set(g.amax)},
            {"umax", element_set(g.umax)}};
  }

  Json read_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::io, "cannot read " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      return Json::parse(buffer.str());
    } catch (Json::parse_error const& e) {
      parse_error(path.string() + ": " + e.what());
    }
  }

  std::string dump(Json const& j) { return j.dump(2) + "\n"; }

  void write_text(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorKind::io, "cannot write " + path.string());
    }
    out << text;
    if (!out) {
      throw Error(ErrorKind::io, "write failed: " + path.string());
    }
  }

  FiniteAlgebra read_algebra(std::filesystem::path const& path) {
    return algebra_from_json(read_json(path));
  }

  Subpower read_relation(std::filesystem::path const& path, Caps const& caps) {
    Json j   = read_json(path);
    auto dir = path.parent_path();
    auto resolve = [&dir](std::string const& name) -> std::optional<FiniteAlgebra> {
      std::filesystem::path file = name;
      if (file.extension() != ".json") {
        file += ".json";
      }
      for (auto const& p : {dir / file, dir / ".." / "corpus" / file}) {
        if (std::filesystem::exists(p)) {
          return read_algebra(p);
        }
      }
      return corpus_algebra(name);
    };
    return relation_from_json(j, resolve, caps);
  }

}  // namespace alggraph
