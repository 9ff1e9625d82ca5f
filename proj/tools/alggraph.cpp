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

// alggraph: edges, thin graphs and instance checks for finite idempotent
// algebras.
//
// Exit codes: 0 pass, 1 fail, 2 inapplicable, 3 error, 64 usage, 74 IO.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alggraph/campaign.hpp"
#include "alggraph/corpus.hpp"
#include "alggraph/edges.hpp"
#include "alggraph/error.hpp"
#include "alggraph/io.hpp"
#include "alggraph/relations.hpp"

namespace {

  using namespace alggraph;

  constexpr int kExitError = 3;
  constexpr int kExitUsage = 64;
  constexpr int kExitIo    = 74;

  struct Options {
    std::optional<std::size_t> cap_clone;
    std::optional<std::size_t> cap_tuples;
    std::string                mode = "exact";
    std::string                json_out;
  };

  // Argument text that fails to parse is a usage error, not a run error.
  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  Caps caps_of(Options const& o) {
    Caps caps;
    try {
      caps = caps_from_environment();
    } catch (Error const& e) {
      throw UsageError(std::string("ALGGRAPH_CAPS: ") + e.what());
    }
    if (o.cap_clone) {
      caps.clone = *o.cap_clone;
    }
    if (o.cap_tuples) {
      caps.tuples = *o.cap_tuples;
    }
    return caps;
  }

  Mode mode_of(Options const& o) { return o.mode == "witness" ? Mode::witness : Mode::exact; }

  void emit(Options const& o, Json const& j, std::string const& headline) {
    if (o.json_out.empty()) {
      std::cout << dump(j);
    } else {
      write_text(o.json_out, dump(j));
      std::cout << headline << "\n";
    }
  }

  // fail over any fail; pass over inapplicable when some report passed.
  Verdict combine(std::vector<Report> const& reports) {
    bool passed = false;
    for (auto const& r : reports) {
      if (r.verdict == Verdict::fail) {
        return Verdict::fail;
      }
      passed = passed || r.verdict == Verdict::pass;
    }
    return passed || reports.empty() ? Verdict::pass : Verdict::inapplicable;
  }

  int emit_reports(Options const& o, std::vector<Report> const& reports) {
    Verdict v = combine(reports);
    if (reports.size() == 1) {
      emit(o, to_json(reports.front()), reports.front().kind + ": " + to_string(v));
    } else {
      Json all = Json::array();
      for (auto const& r : reports) {
        all.push_back(to_json(r));
      }
      emit(o, {{"verdict", to_string(v)}, {"reports", all}},
           reports.empty() ? "no reports" : reports.front().kind + ": " + to_string(v));
    }
    return exit_code(v);
  }

  bool is_relation_document(Json const& j) { return j.is_object() && j.contains("factors"); }

  int analyze_cmd(Options const& o, std::string const& file) {
    auto a     = read_algebra(file);
    auto caps  = caps_of(o);
    auto edges = edge_graph(a, caps);
    auto smooth = is_smooth(a, edges);
    Json records = Json::array();
    for (auto const& e : edges) {
      records.push_back(to_json(e, a));
    }
    Json violations = Json::array();
    for (auto const& v : smooth.violations) {
      violations.push_back({{"pair", {v.a, v.b}},
                            {"theta", to_json(v.theta)},
                            {"classes", v.classes.members()},
                            {"operation", a.op(v.op).name},
                            {"args", v.args}});
    }
    Json out = {{"algebra", a.name()},
                {"size", a.size()},
                {"omits_type1", omits_type1(edges)},
                {"smooth", smooth.smooth},
                {"smoothness_violations", violations},
                {"edges", records}};
    try {
      ClassContext k({a}, caps);
      auto         hyp = class_hypotheses(k);
      out["class"]     = {{"members", k.members().size()},
                          {"smooth", hyp.smooth},
                          {"omits_type1", hyp.omits_type1},
                          {"complete", hyp.complete},
                          {"failures", hyp.failures}};
      out["thin"] = to_json(analyze(Realization::of_base(a, 0), k, mode_of(o)));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::io) {
        throw;
      }
      out["thin"] = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    emit(o, out, a.name() + ": analyzed");
    return 0;
  }

  int edges_cmd(Options const& o, std::string const& file) {
    auto a     = read_algebra(file);
    Json out   = Json::array();
    for (auto const& e : edge_graph(a, caps_of(o))) {
      out.push_back(to_json(e, a));
    }
    emit(o, out, a.name() + ": " + std::to_string(out.size()) + " pairs");
    return 0;
  }

  int graph_cmd(Options const& o, std::string const& file, std::string const& dot) {
    auto         a    = read_algebra(file);
    auto         caps = caps_of(o);
    ClassContext k({a}, caps);
    auto         g = analyze(Realization::of_base(a, 0), k, mode_of(o));
    if (!dot.empty()) {
      auto text = to_dot(g, a.name());
      if (dot == "-") {
        std::cout << text;
        return 0;
      }
      write_text(dot, text);
    }
    emit(o, to_json(g), a.name() + ": graph written");
    return 0;
  }

  std::vector<std::size_t> parse_pin(std::string const& text) {
    std::vector<std::size_t> out;
    std::size_t              start = 0;
    while (start < text.size()) {
      auto end  = text.find(',', start);
      auto item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
      try {
        std::size_t used = 0;
        out.push_back(std::stoul(item, &used));
        if (used != item.size()) {
          throw std::invalid_argument(item);
        }
      } catch (std::logic_error const&) {
        throw UsageError("bad coordinate \"" + item + "\" in --pin");
      }
      if (end == std::string::npos) {
        break;
      }
      start = end + 1;
    }
    if (out.empty()) {
      throw UsageError("--pin needs at least one coordinate");
    }
    return out;
  }

  int verify_cmd(Options const& o, std::string const& what, std::string const& file,
                 std::string const& pin) {
    auto caps = caps_of(o);
    auto mode = mode_of(o);
    auto load_relation = [&] { return read_relation(file, caps); };
    if (what == "connectivity") {
      return emit_reports(o, {verify_connectivity(read_algebra(file), caps, mode)});
    }
    if (what == "qmaj") {
      auto         a = read_algebra(file);
      ClassContext k({a}, caps);
      auto         q = quasi_majority(k, mode);
      if (!q.per_base.empty()) {
        q.report.details["table"] = q.per_base.front().table;
      }
      return emit_reports(o, {q.report});
    }
    if (what == "lifting") {
      Json j = read_json(file);
      if (is_relation_document(j)) {
        auto r = load_relation();
        return emit_reports(o, product_lifting_suite(class_of_factors(r, caps), r, mode));
      }
      auto         a = algebra_from_json(j);
      ClassContext k({a}, caps);
      return emit_reports(o, quotient_lifting_suite(k, Realization::of_base(a, 0), mode));
    }
    if (what == "almost-trivial") {
      return emit_reports(o, {almost_trivial_check(load_relation(), caps)});
    }
    auto r = load_relation();
    auto k = class_of_factors(r, caps);
    if (what == "rect") {
      return emit_reports(o, {rect_check(k, r, mode)});
    }
    if (what == "linkage-rect") {
      return emit_reports(o, {linkage_rect_check(k, r, mode)});
    }
    if (what == "umax-rect") {
      return emit_reports(o, {umax_rect_check(k, r, mode)});
    }
    if (what == "q2d") {
      std::optional<std::vector<std::size_t>> pinned;
      if (!pin.empty()) {
        pinned = parse_pin(pin);
      }
      return emit_reports(o, {q2d_check(k, r, pinned, mode)});
    }
    if (what == "maxgen") {
      return emit_reports(o, {maxgen_suite(k, r, mode)});
    }
    throw UsageError("unknown check \"" + what + "\"");
  }

  struct RandomArgs {
    std::uint64_t seed = 0;
    std::string   spec = "size=2..3,ops=2";
    std::size_t   count     = 1;
    std::size_t   relations = 0;
    std::string   verify;
    bool          corpus = false;
  };

  int random_cmd(Options const& o, RandomArgs const& args) {
    RandomSpec            spec;
    std::vector<Verifier> verifiers;
    try {
      spec      = parse_random_spec(args.spec);
      verifiers = parse_verifiers(args.verify);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
    auto caps = caps_of(o);
    if (verifiers.empty()) {
      InstanceStream stream(spec, args.seed, caps);
      Json           algebras = Json::array();
      Json           relations = Json::array();
      for (std::size_t i = 0; i < args.count; ++i) {
        auto a = stream.next_algebra();
        for (std::size_t j = 0; j < args.relations; ++j) {
          relations.push_back(to_json(stream.next_relation({a})));
        }
        algebras.push_back(to_json(a));
      }
      Json out = {{"seed", args.seed}, {"spec", spec.to_string()}, {"algebras", algebras}};
      if (args.relations > 0) {
        out["relations"] = relations;
      }
      emit(o, out, std::to_string(args.count) + " algebras");
      return 0;
    }
    CampaignSpec c;
    c.instances = spec;
    c.algebras  = args.count;
    c.relations = args.relations;
    c.corpus    = args.corpus;
    c.verifiers = verifiers;
    c.mode      = mode_of(o);
    c.caps      = caps;
    auto result = run_campaign(c, args.seed);
    emit(o, result.document,
         "failures " + std::to_string(result.failures) + ", errors "
             + std::to_string(result.errors));
    if (result.failures > 0) {
      return 1;
    }
    return result.errors > 0 ? kExitError : 0;
  }

  int corpus_cmd(std::string const& dir) {
    write_corpus(dir);
    for (auto const& a : corpus_algebras()) {
      std::cout << (std::filesystem::path(dir) / "corpus" / (a.name() + ".json")).string()
                << "\n";
    }
    for (auto const& r : corpus_relations()) {
      std::cout << (std::filesystem::path(dir) / "rel" / (r.name + ".json")).string() << "\n";
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edges, thin graphs and instance checks for finite idempotent algebras"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  Options opts;
  app.add_option("--cap-clone", opts.cap_clone, "Bound on term-operation tables");
  app.add_option("--cap-tuples", opts.cap_tuples, "Bound on subpower tuples");
  app.add_option("--mode", opts.mode, "Thin-edge mode")
      ->check(CLI::IsMember({"exact", "witness"}));
  app.add_option("--json", opts.json_out, "Write the JSON result to this file");

  std::string file;
  auto*       analyze = app.add_subcommand("analyze", "Edges, smoothness and thin graphs");
  analyze->add_option("file", file, "Algebra JSON")->required();
  auto* edges = app.add_subcommand("edges", "Edge records of every pair");
  edges->add_option("file", file, "Algebra JSON")->required();
  std::string dot;
  auto*       graph = app.add_subcommand("graph", "Thin-edge graphs and components");
  graph->add_option("file", file, "Algebra JSON")->required();
  graph->add_option("--dot", dot, "Write Graphviz output here ('-' for stdout)");

  std::string what, pin;
  auto*       verify = app.add_subcommand("verify", "Instance check; exit 0/1/2 on pass/fail/inapplicable");
  verify
      ->add_option("check", what,
                   "connectivity | lifting | qmaj | rect | linkage-rect | umax-rect | q2d | "
                   "almost-trivial | maxgen")
      ->required()
      ->check(CLI::IsMember({"connectivity", "lifting", "qmaj", "rect", "linkage-rect",
                             "umax-rect", "q2d", "almost-trivial", "maxgen"}));
  verify->add_option("file", file, "Algebra or relation JSON")->required();
  verify->add_option("--pin", pin, "q2d: comma separated coordinates X");

  RandomArgs rargs;
  auto*      random = app.add_subcommand("random", "Seeded random instances and campaigns");
  random->add_option("--seed", rargs.seed, "Seed")->required();
  random->add_option("--spec", rargs.spec, "Instance spec, e.g. size=2..3,ops=2,filter=smooth+omits1");
  random->add_option("--count", rargs.count, "Number of algebras");
  random->add_option("--relations", rargs.relations, "Relations per algebra");
  random->add_option("--verify", rargs.verify, "Verifiers to run, comma separated");
  random->add_flag("--corpus", rargs.corpus, "Run the verifiers on the corpus first");

  std::string out_dir = ".";
  auto*       corpus  = app.add_subcommand("corpus", "Write the built-in algebras and relations");
  corpus->add_option("--out", out_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      return analyze_cmd(opts, file);
    }
    if (edges->parsed()) {
      return edges_cmd(opts, file);
    }
    if (graph->parsed()) {
      return graph_cmd(opts, file, dot);
    }
    if (verify->parsed()) {
      return verify_cmd(opts, what, file, pin);
    }
    if (random->parsed()) {
      return random_cmd(opts, rargs);
    }
    if (corpus->parsed()) {
      return corpus_cmd(out_dir);
    }
  } catch (UsageError const& e) {
    std::cerr << "alggraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (Error const& e) {
    std::cerr << "alggraph: " << e.what() << "\n";
    return e.kind() == ErrorKind::io ? kExitIo : kExitError;
  } catch (std::exception const& e) {
    std::cerr << "alggraph: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
