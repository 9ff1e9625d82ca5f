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

#include "alggraph/verify.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "alggraph/congruence.hpp"
#include "alggraph/edges.hpp"
#include "alggraph/error.hpp"

namespace alggraph {

  using nlohmann::json;

  char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::inapplicable:
        return "inapplicable";
    }
    return "?";
  }

  void Check::fail(json counterexample) {
    verdict = Verdict::fail;
    ++failures;
    if (counterexamples.size() < kCounterexampleLimit) {
      counterexamples.push_back(std::move(counterexample));
    }
  }

  void Check::inapplicable(std::string hypothesis) {
    if (verdict == Verdict::pass) {
      verdict = Verdict::inapplicable;
    }
    failed_hypotheses.push_back(std::move(hypothesis));
  }

  Check& Report::add(std::string name) {
    checks.emplace_back();
    checks.back().name = std::move(name);
    return checks.back();
  }

  void Report::finish() {
    bool failed = std::any_of(checks.begin(), checks.end(),
                              [](Check const& c) { return c.verdict == Verdict::fail; });
    if (failed) {
      verdict = Verdict::fail;
    } else if (!failed_hypotheses.empty()
               || (!checks.empty() && checks.front().verdict == Verdict::inapplicable)) {
      verdict = Verdict::inapplicable;
    } else {
      verdict = Verdict::pass;
    }
  }

  ClassHypotheses class_hypotheses(ClassContext const& k) {
    ClassHypotheses h;
    for (auto const& m : k.members()) {
      if (m.duplicate) {
        continue;
      }
      auto edges = edge_graph(m.algebra, k.caps());
      if (!omits_type1(edges)) {
        h.omits_type1 = false;
        h.failures.push_back(m.algebra.name() + " has an edge of the unary type");
      }
      if (!is_smooth(m.algebra, edges).smooth) {
        h.smooth = false;
        h.failures.push_back(m.algebra.name() + " is not smooth");
      }
    }
    h.complete = k.complete();
    return h;
  }

  GraphAnalysis analyze(Realization const& x, ClassContext const& k, Mode mode, EdgeScope scope) {
    return build_graphs(thin_edges(x, k, mode, scope));
  }

  ClassContext class_of_factors(Subpower const& r, Caps const& caps) {
    std::vector<FiniteAlgebra> bases;
    for (auto const& f : r.factors()) {
      if (std::find(bases.begin(), bases.end(), f) == bases.end()) {
        bases.push_back(f);
      }
    }
    return ClassContext(std::move(bases), caps);
  }

  std::vector<std::size_t> coordinate_bases(ClassContext const& k, Subpower const& r) {
    std::vector<std::size_t> out;
    for (auto const& f : r.factors()) {
      auto it = std::find(k.bases().begin(), k.bases().end(), f);
      if (it == k.bases().end()) {
        throw Error(ErrorKind::precondition, "factor " + f.name() + " is not a base of the class");
      }
      out.push_back(static_cast<std::size_t>(it - k.bases().begin()));
    }
    return out;
  }

  Realization realize(ClassContext const& k, Subpower const& r, std::string name) {
    return Realization::of_subpower(r, coordinate_bases(k, r), k.caps().table_entries,
                                    std::move(name));
  }

  namespace {

    json path_json(std::optional<std::vector<Elem>> const& p) {
      return p ? json(*p) : json(nullptr);
    }

    json elements_json(ElementSet const& s) { return json(s.members()); }

    // Typed lookup of thin edges.
    class EdgeIndex {
     public:
      explicit EdgeIndex(ThinEdges const& e) {
        for (auto const& t : e.all()) {
          typed_.emplace(t.tail, t.head, t.type);
          if (t.type == EdgeType::majority && t.special) {
            special_.emplace(t.tail, t.head);
          }
        }
      }
      bool has(Elem a, Elem b, EdgeType t) const { return typed_.count({a, b, t}) > 0; }
      bool special(Elem a, Elem b) const { return special_.count({a, b}) > 0; }

     private:
      std::set<std::tuple<Elem, Elem, EdgeType>> typed_;
      std::set<std::pair<Elem, Elem>>            special_;
    };

    constexpr PathKind kPathKinds[] = {PathKind::s, PathKind::as, PathKind::asm_};

    char const* kind_name(PathKind k) {
      switch (k) {
        case PathKind::s:
          return "s";
        case PathKind::as:
          return "as";
        case PathKind::asm_:
          return "asm";
        case PathKind::special_asm:
          return "special";
      }
      return "?";
    }

    ElementSet const& maximal_set(GraphAnalysis const& g, PathKind k) {
      switch (k) {
        case PathKind::s:
          return g.max;
        case PathKind::as:
          return g.amax;
        default:
          return g.umax;
      }
    }

    Components const& components(GraphAnalysis const& g, PathKind k) {
      switch (k) {
        case PathKind::s:
          return g.scc_s;
        case PathKind::as:
          return g.scc_as;
        default:
          return g.scc_asm;
      }
    }

    void add_class_hypotheses(Report& report, ClassContext const& k) {
      auto h = class_hypotheses(k);
      for (auto const& f : h.failures) {
        report.failed_hypotheses.push_back(f);
      }
    }

    // Lifting of thin edges along a surjection `down` from big onto small.
    // Both directions of the edge statement.
    void check_edge_lifting(Check& up, Check& down_check, GraphAnalysis const& big,
                            GraphAnalysis const& small, std::vector<Elem> const& down) {
      EdgeIndex big_edges(big.edges);
      EdgeIndex small_edges(small.edges);
      for (auto const& e : small.edges.all()) {
        for (Elem a = 0; a < big.size; ++a) {
          if (down[a] != e.tail) {
            continue;
          }
          ++up.examined;
          bool typed = false, special = !(e.type == EdgeType::majority && e.special);
          for (Elem b = 0; b < big.size; ++b) {
            if (down[b] == e.head && big_edges.has(a, b, e.type)) {
              typed = true;
              if (big_edges.special(a, b)) {
                special = true;
              }
            }
          }
          if (!typed || !special) {
            up.fail({{"edge", {e.tail, e.head}},
                     {"type", to_string(e.type)},
                     {"special", e.special},
                     {"tail", a}});
          }
        }
      }
      for (auto const& e : big.edges.all()) {
        ++down_check.examined;
        Elem a = down[e.tail], b = down[e.head];
        if (a != b && !small_edges.has(a, b, e.type)) {
          down_check.fail({{"edge", {e.tail, e.head}}, {"type", to_string(e.type)}});
        }
      }
    }

    void check_path_lifting(Check& up, Check& down_check, GraphAnalysis const& big,
                            GraphAnalysis const& small, std::vector<Elem> const& down) {
      for (PathKind k : {PathKind::s, PathKind::as, PathKind::asm_, PathKind::special_asm}) {
        for (Elem a = 0; a < big.size; ++a) {
          ElementSet reach = big.reachable(k, a);
          ElementSet image(small.size);
          for (Elem b : reach.members()) {
            image.insert(down[b]);
          }
          ElementSet target = small.reachable(k, down[a]);
          ++up.examined;
          for (Elem c : target.members()) {
            if (!image.contains(c)) {
              up.fail({{"kind", kind_name(k)}, {"start", a}, {"unreached", c}});
              break;
            }
          }
          if (k == PathKind::special_asm) {
            continue;
          }
          ++down_check.examined;
          for (Elem c : image.members()) {
            if (!target.contains(c)) {
              down_check.fail({{"kind", kind_name(k)}, {"start", a}, {"image", c}});
              break;
            }
          }
        }
      }
    }

    void check_max_lifting(Check& up, Check& down_check, GraphAnalysis const& big,
                           GraphAnalysis const& small, std::vector<Elem> const& down) {
      for (PathKind k : kPathKinds) {
        ElementSet const& big_max   = maximal_set(big, k);
        ElementSet const& small_max = maximal_set(small, k);
        for (Elem c : small_max.members()) {
          ++up.examined;
          bool found = false;
          for (Elem a = 0; a < big.size && !found; ++a) {
            found = down[a] == c && big_max.contains(a);
          }
          if (!found) {
            up.fail({{"kind", kind_name(k)}, {"maximal", c}});
          }
        }
        for (Elem a : big_max.members()) {
          ++down_check.examined;
          if (!small_max.contains(down[a])) {
            down_check.fail({{"kind", kind_name(k)}, {"maximal", a}, {"image", down[a]}});
          }
        }
      }
    }

  }  // namespace

  Report verify_connectivity(ClassContext const& k, Realization const& x, Mode mode) {
    Report report;
    report.kind     = "connectivity";
    report.instance = x.algebra().name();
    add_class_hypotheses(report, k);
    auto& unique   = report.add("unique-umax");
    auto& oriented = report.add("oriented-connectivity");
    auto& smax     = report.add("special-paths-max");
    auto& samax    = report.add("special-paths-amax");
    auto& umax     = report.add("asm-paths-umax");
    if (!report.failed_hypotheses.empty()) {
      for (auto* c : {&unique, &oriented, &smax, &samax, &umax}) {
        c->inapplicable("class hypotheses");
      }
      report.finish();
      return report;
    }
    auto g = analyze(x, k, mode);
    report.details["max"]         = elements_json(g.max);
    report.details["amax"]        = elements_json(g.amax);
    report.details["umax"]        = elements_json(g.umax);
    report.details["certainty"]   = to_string(g.edges.certainty);
    report.details["asm_maximal"] = g.scc_asm.number_of_maximal();

    unique.examined = 1;
    if (g.scc_asm.number_of_maximal() != 1) {
      json comps = json::array();
      for (std::size_t c = 0; c < g.scc_asm.count(); ++c) {
        if (g.scc_asm.maximal[c]) {
          comps.push_back(g.scc_asm.members[c]);
        }
      }
      unique.fail({{"maximal_components", comps}});
    }
    oriented.examined = 1;
    if (!g.weakly_connected()) {
      UnionFind uf(g.size);
      for (std::size_t v = 0; v < g.size; ++v) {
        for (Elem w : g.g_asm.out[v]) {
          uf.unite(v, w);
        }
      }
      for (Elem v = 1; v < g.size; ++v) {
        if (uf.find(v) != uf.find(0)) {
          oriented.fail({{"pair", {0, v}}});
          break;
        }
      }
    }
    auto pairs = [&](Check& check, ElementSet const& set, PathKind kind) {
      for (Elem a : set.members()) {
        for (Elem b : set.members()) {
          if (a == b) {
            continue;
          }
          ++check.examined;
          if (!g.connected(kind, a, b)) {
            check.fail({{"pair", {a, b}},
                        {"asm_path", path_json(g.path(PathKind::asm_, a, b))}});
          }
        }
      }
    };
    pairs(smax, g.max, PathKind::special_asm);
    pairs(samax, g.amax, PathKind::special_asm);
    pairs(umax, g.umax, PathKind::asm_);
    report.finish();
    return report;
  }

  Report verify_connectivity(FiniteAlgebra const& a, Caps const& caps, Mode mode) {
    ClassContext k({a}, caps);
    return verify_connectivity(k, Realization::of_base(a, 0), mode);
  }

  char const* to_string(LiftingCase c) {
    switch (c) {
      case LiftingCase::quotient_edge:
        return "quotient-edge";
      case LiftingCase::quotient_path:
        return "quotient-path";
      case LiftingCase::quotient_max:
        return "quotient-max";
      case LiftingCase::product_edge:
        return "product-edge";
      case LiftingCase::product_path:
        return "product-path";
      case LiftingCase::product_max:
        return "product-max";
      case LiftingCase::as_product:
        return "as-product";
    }
    return "?";
  }

  std::optional<LiftingCase> lifting_case_from_string(std::string const& s) {
    for (auto c : {LiftingCase::quotient_edge, LiftingCase::quotient_path,
                   LiftingCase::quotient_max, LiftingCase::product_edge,
                   LiftingCase::product_path, LiftingCase::product_max, LiftingCase::as_product}) {
      if (s == to_string(c)) {
        return c;
      }
    }
    return std::nullopt;
  }

  namespace {

    void run_lifting(Report& report, LiftingCase c, GraphAnalysis const& big,
                     GraphAnalysis const& small, std::vector<Elem> const& down) {
      auto& up   = report.add("lift");
      auto& drop = report.add("project");
      switch (c) {
        case LiftingCase::quotient_edge:
        case LiftingCase::product_edge:
          check_edge_lifting(up, drop, big, small, down);
          break;
        case LiftingCase::quotient_path:
        case LiftingCase::product_path:
          check_path_lifting(up, drop, big, small, down);
          break;
        default:
          check_max_lifting(up, drop, big, small, down);
          break;
      }
    }

    std::string coords_name(std::vector<std::size_t> const& coords) {
      std::string s = "pr";
      for (std::size_t i = 0; i < coords.size(); ++i) {
        s += (i ? "," : "[") + std::to_string(coords[i]);
      }
      return s + "]";
    }

  }  // namespace

  Report verify_quotient_lifting(ClassContext const& k, Realization const& x,
                                 Partition const& theta, LiftingCase c, Mode mode) {
    if (c != LiftingCase::quotient_edge && c != LiftingCase::quotient_path
        && c != LiftingCase::quotient_max) {
      throw Error(ErrorKind::precondition, "not a quotient case");
    }
    Report report;
    report.kind     = std::string("lifting/") + to_string(c);
    report.instance = x.algebra().name();
    report.details["theta"] = theta.block_ids();
    auto q = quotient(x.algebra(), theta);
    add_class_hypotheses(report, k);
    if (!report.failed_hypotheses.empty()) {
      report.add("lift").inapplicable("class hypotheses");
      report.add("project").inapplicable("class hypotheses");
      report.finish();
      return report;
    }
    auto big   = analyze(x, k, mode);
    auto small = analyze(x.quotient(theta), k, mode);
    run_lifting(report, c, big, small, q.class_of);
    report.finish();
    return report;
  }

  Report verify_product_lifting(ClassContext const& k, Subpower const& r,
                                std::vector<std::size_t> const& coords, LiftingCase c, Mode mode) {
    if (c != LiftingCase::product_edge && c != LiftingCase::product_path
        && c != LiftingCase::product_max) {
      throw Error(ErrorKind::precondition, "not a product case");
    }
    Report report;
    report.kind     = std::string("lifting/") + to_string(c);
    report.instance = coords_name(coords);
    add_class_hypotheses(report, k);
    if (!r.is_subdirect()) {
      report.failed_hypotheses.push_back("relation is not subdirect");
    }
    if (!report.failed_hypotheses.empty()) {
      report.add("lift").inapplicable("hypotheses");
      report.add("project").inapplicable("hypotheses");
      report.finish();
      return report;
    }
    Subpower          p = project(r, coords);
    std::vector<Elem> down(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::vector<Elem> t;
      for (std::size_t c2 : coords) {
        t.push_back(r.tuple(i)[c2]);
      }
      down[i] = static_cast<Elem>(*p.find(t));
    }
    auto big   = analyze(realize(k, r), k, mode);
    auto small = analyze(realize(k, p), k, mode);
    run_lifting(report, c, big, small, down);
    if (c == LiftingCase::product_max && coords.size() < r.arity()) {
      // The lifted maximal tuple can be chosen maximal on the other
      // coordinates as well.
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < r.arity(); ++i) {
        if (std::find(coords.begin(), coords.end(), i) == coords.end()) {
          rest.push_back(i);
        }
      }
      Subpower          pr = project(r, rest);
      std::vector<Elem> other(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::vector<Elem> t;
        for (std::size_t c2 : rest) {
          t.push_back(r.tuple(i)[c2]);
        }
        other[i] = static_cast<Elem>(*pr.find(t));
      }
      auto  rest_graph = analyze(realize(k, pr), k, mode);
      auto& both       = report.add("lift-complement-maximal");
      for (PathKind kind : kPathKinds) {
        for (Elem b : maximal_set(small, kind).members()) {
          ++both.examined;
          bool found = false;
          for (Elem t = 0; t < r.size() && !found; ++t) {
            found = down[t] == b && maximal_set(big, kind).contains(t)
                    && maximal_set(rest_graph, kind).contains(other[t]);
          }
          if (!found) {
            both.fail({{"kind", kind_name(kind)}, {"maximal", p.tuple_vector(b)}});
          }
        }
      }
    }
    report.finish();
    return report;
  }

  Report verify_as_product(ClassContext const& k, Subpower const& r, Mode mode) {
    Report report;
    report.kind     = std::string("lifting/") + to_string(LiftingCase::as_product);
    report.instance = "R";
    if (r.arity() != 2) {
      throw Error(ErrorKind::precondition, "the as-product case needs a binary relation");
    }
    add_class_hypotheses(report, k);
    if (!r.is_subdirect()) {
      report.failed_hypotheses.push_back("relation is not subdirect");
    }
    auto& check = report.add("component-product");
    if (!report.failed_hypotheses.empty()) {
      check.inapplicable("hypotheses");
      report.finish();
      return report;
    }
    auto bases = coordinate_bases(k, r);
    auto g1    = analyze(Realization::of_base(r.factor(0), bases[0]), k, mode);
    auto g2    = analyze(Realization::of_base(r.factor(1), bases[1]), k, mode);
    auto gr    = analyze(realize(k, r), k, mode);
    for (PathKind kind : kPathKinds) {
      auto const& c1 = components(g1, kind);
      auto const& c2 = components(g2, kind);
      auto const& cr = components(gr, kind);
      for (std::size_t i = 0; i < c1.count(); ++i) {
        if (!c1.maximal[i]) {
          continue;
        }
        for (std::size_t j = 0; j < c2.count(); ++j) {
          if (!c2.maximal[j]) {
            continue;
          }
          std::vector<Elem> ids;
          bool              inside = true;
          for (Elem x : c1.members[i]) {
            for (Elem y : c2.members[j]) {
              auto t = r.find(std::vector<Elem>{x, y});
              if (!t) {
                inside = false;
              } else {
                ids.push_back(static_cast<Elem>(*t));
              }
            }
          }
          if (!inside) {
            continue;
          }
          ++check.examined;
          std::sort(ids.begin(), ids.end());
          auto comp = cr.component_of[ids.front()];
          if (cr.members[comp] != ids || !cr.maximal[comp]) {
            check.fail({{"kind", kind_name(kind)},
                        {"first", c1.members[i]},
                        {"second", c2.members[j]}});
          }
        }
      }
    }
    report.finish();
    return report;
  }

  std::vector<Report> quotient_lifting_suite(ClassContext const& k, Realization const& x,
                                             Mode mode) {
    std::vector<Report> out;
    for (auto const& theta : all_congruences(x.algebra(), k.caps().congruences)) {
      for (auto c : {LiftingCase::quotient_edge, LiftingCase::quotient_path,
                     LiftingCase::quotient_max}) {
        out.push_back(verify_quotient_lifting(k, x, theta, c, mode));
      }
    }
    return out;
  }

  std::vector<Report> product_lifting_suite(ClassContext const& k, Subpower const& r, Mode mode) {
    std::vector<Report> out;
    std::size_t         n = r.arity();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> coords;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) {
          coords.push_back(i);
        }
      }
      for (auto c : {LiftingCase::product_edge, LiftingCase::product_path,
                     LiftingCase::product_max}) {
        out.push_back(verify_product_lifting(k, r, coords, c, mode));
      }
    }
    if (n == 2) {
      out.push_back(verify_as_product(k, r, mode));
    }
    return out;
  }

}  // namespace alggraph
