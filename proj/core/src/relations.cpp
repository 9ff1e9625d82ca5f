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

#include "alggraph/relations.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "alggraph/congruence.hpp"
#include "alggraph/error.hpp"

namespace alggraph {

  using nlohmann::json;

  namespace {

    GraphAnalysis factor_graph(ClassContext const& k, Subpower const& r, std::size_t i, Mode mode,
                               EdgeScope scope) {
      auto bases = coordinate_bases(k, r);
      return analyze(Realization::of_base(r.factor(i), bases[i]), k, mode, scope);
    }

    ElementSet reach_within(Digraph const& g, ElementSet const& subset, Elem start) {
      ElementSet       seen(g.size);
      std::deque<Elem> queue{start};
      seen.insert(start);
      while (!queue.empty()) {
        Elem v = queue.front();
        queue.pop_front();
        for (Elem w : g.out[v]) {
          if (subset.contains(w) && seen.insert(w)) {
            queue.push_back(w);
          }
        }
      }
      return seen;
    }

    std::vector<ElementSet> maximal_within(Digraph const& g, ElementSet const& subset) {
      auto                    c = induced_components(g, subset);
      std::vector<ElementSet> out;
      for (std::size_t i = 0; i < c.count(); ++i) {
        if (c.maximal[i]) {
          out.push_back(ElementSet::from(g.size, c.members[i]));
        }
      }
      return out;
    }

    std::vector<ElementSet> maximal_components(Components const& c, std::size_t n) {
      std::vector<ElementSet> out;
      for (std::size_t i = 0; i < c.count(); ++i) {
        if (c.maximal[i]) {
          out.push_back(ElementSet::from(n, c.members[i]));
        }
      }
      return out;
    }

    bool holds(Subpower const& r, Elem x, Elem y) { return r.contains(std::vector<Elem>{x, y}); }

    bool meets(Subpower const& r, ElementSet const& b1, ElementSet const& b2) {
      for (Elem x : b1.members()) {
        for (Elem y : b2.members()) {
          if (holds(r, x, y)) {
            return true;
          }
        }
      }
      return false;
    }

    std::optional<std::pair<Elem, Elem>> missing(Subpower const& r, ElementSet const& b1,
                                                 ElementSet const& b2) {
      for (Elem x : b1.members()) {
        for (Elem y : b2.members()) {
          if (!holds(r, x, y)) {
            return std::pair{x, y};
          }
        }
      }
      return std::nullopt;
    }

    // Adds class and subdirectness hypotheses; true when they hold.
    bool relation_hypotheses(Report& report, ClassContext const& k, Subpower const& r) {
      for (auto const& f : class_hypotheses(k).failures) {
        report.failed_hypotheses.push_back(f);
      }
      if (auto c = r.first_non_subdirect_coordinate()) {
        report.failed_hypotheses.push_back("coordinate " + std::to_string(*c)
                                           + " is not onto its factor");
      }
      return report.failed_hypotheses.empty();
    }

    void require_binary(Subpower const& r) {
      if (r.arity() != 2) {
        throw Error(ErrorKind::precondition, "a binary relation is required");
      }
    }

    void rectangularity(Check& check, Subpower const& r, std::vector<ElementSet> const& first,
                        std::vector<ElementSet> const& second) {
      for (auto const& b1 : first) {
        for (auto const& b2 : second) {
          if (!meets(r, b1, b2)) {
            continue;
          }
          ++check.examined;
          if (auto m = missing(r, b1, b2)) {
            check.fail({{"first", b1.members()},
                        {"second", b2.members()},
                        {"missing", {m->first, m->second}}});
          }
        }
      }
    }

    ElementSet singleton(std::size_t n, Elem x) { return ElementSet(n, {x}); }

  }  // namespace

  Report rect_check(ClassContext const& k, Subpower const& r, Mode mode) {
    require_binary(r);
    Report report;
    report.kind     = "rect";
    report.instance = "R";
    auto& main      = report.add("as-rectangularity");
    auto& ft        = report.add("ft-as-inclusion");
    if (!relation_hypotheses(report, k, r)) {
      main.inapplicable("hypotheses");
      ft.inapplicable("hypotheses");
      report.finish();
      return report;
    }
    std::size_t n1 = r.factor(0).size(), n2 = r.factor(1).size();
    auto        g1 = factor_graph(k, r, 0, mode, EdgeScope::all);
    auto        g2 = factor_graph(k, r, 1, mode, EdgeScope::as);
    bool linked = is_linked(r);
    report.details["linked"] = linked;
    if (!linked) {
      main.inapplicable("relation is not linked");
    } else {
      rectangularity(main, r, maximal_components(g1.scc_as, n1), maximal_components(g2.scc_as, n2));
    }
    for (Elem a = 0; a < n1; ++a) {
      ElementSet ra = image(r, singleton(n1, a));
      for (auto const& e : g1.edges.all()) {
        if (e.tail != a) {
          continue;
        }
        ElementSet rb = image(r, singleton(n1, e.head));
        for (Elem c : ra.members()) {
          if (!rb.contains(c)) {
            continue;
          }
          ++ft.examined;
          ElementSet reach = reach_within(g2.g_as, ra, c);
          if (!reach.is_subset_of(rb)) {
            ft.fail({{"a", a},
                     {"b", e.head},
                     {"type", to_string(e.type)},
                     {"c", c},
                     {"reachable", reach.members()},
                     {"image_of_b", rb.members()}});
          }
        }
      }
    }
    report.finish();
    return report;
  }

  Report linkage_rect_check(ClassContext const& k, Subpower const& r, Mode mode) {
    require_binary(r);
    Report report;
    report.kind     = "linkage-rect";
    report.instance = "R";
    auto& main      = report.add("block-rectangularity");
    if (!relation_hypotheses(report, k, r)) {
      main.inapplicable("hypotheses");
      report.finish();
      return report;
    }
    std::size_t n1 = r.factor(0).size(), n2 = r.factor(1).size();
    auto        g1  = factor_graph(k, r, 0, mode, EdgeScope::as);
    auto        g2  = factor_graph(k, r, 1, mode, EdgeScope::as);
    auto        lk1 = link_congruence(r, 0);
    auto        lk2 = link_congruence(r, 1);
    report.details["lk1"] = lk1.block_ids();
    report.details["lk2"] = lk2.block_ids();
    for (auto const& c1 : lk1.blocks()) {
      auto comps1 = maximal_within(g1.g_as, ElementSet::from(n1, c1));
      for (auto const& c2 : lk2.blocks()) {
        auto comps2 = maximal_within(g2.g_as, ElementSet::from(n2, c2));
        rectangularity(main, r, comps1, comps2);
      }
    }
    report.finish();
    return report;
  }

  Report umax_rect_check(ClassContext const& k, Subpower const& r, Mode mode) {
    require_binary(r);
    Report report;
    report.kind     = "umax-rect";
    report.instance = "R";
    auto& main      = report.add("umax-rectangularity");
    if (!relation_hypotheses(report, k, r)) {
      main.inapplicable("hypotheses");
      report.finish();
      return report;
    }
    std::size_t n1 = r.factor(0).size(), n2 = r.factor(1).size();
    auto        g1  = factor_graph(k, r, 0, mode, EdgeScope::as);
    auto        g2  = factor_graph(k, r, 1, mode, EdgeScope::all);
    auto        lk1 = link_congruence(r, 0);
    for (auto const& c1 : lk1.blocks()) {
      for (auto const& b1 : maximal_within(g1.g_as, ElementSet::from(n1, c1))) {
        ElementSet image_b1 = image(r, b1);
        ElementSet b2(n2);
        for (auto const& comp : maximal_within(g2.g_asm, image_b1)) {
          b2 |= comp;
        }
        ++main.examined;
        if (auto m = missing(r, b1, b2)) {
          main.fail({{"first", b1.members()},
                     {"image", image_b1.members()},
                     {"umax", b2.members()},
                     {"missing", {m->first, m->second}}});
        }
      }
    }
    report.finish();
    return report;
  }

  bool has_majority_term(ClassContext const& k) {
    auto const& f = k.ternary();
    for (std::size_t i = 0; i < f.size(); ++i) {
      bool ok = true;
      for (std::size_t b = 0; ok && b < k.bases().size(); ++b) {
        Elem n = static_cast<Elem>(k.bases()[b].size());
        for (Elem x = 0; ok && x < n; ++x) {
          for (Elem y = 0; ok && y < n; ++y) {
            if (x != y) {
              ok = f.value(i, b, {x, x, y}) == x && f.value(i, b, {x, y, x}) == x
                   && f.value(i, b, {y, x, x}) == x;
            }
          }
        }
      }
      if (ok) {
        return true;
      }
    }
    if (!f.complete()) {
      throw Error(ErrorKind::clone_truncated, "no majority term in a truncated ternary fragment");
    }
    return false;
  }

  namespace {

    // Membership tables of the binary projections.
    struct PairTables {
      std::size_t                         n = 0;
      std::vector<std::size_t>            sizes;
      std::vector<std::vector<char>>      member;  // [i * n + j][x * size_j + y]

      explicit PairTables(Subpower const& r) : n(r.arity()) {
        for (std::size_t i = 0; i < n; ++i) {
          sizes.push_back(r.factor(i).size());
        }
        member.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            member[i * n + j].assign(sizes[i] * sizes[j], 0);
          }
        }
        for (std::size_t t = 0; t < r.size(); ++t) {
          auto tuple = r.tuple(t);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              member[i * n + j][tuple[i] * sizes[j] + tuple[j]] = 1;
            }
          }
        }
      }

      bool has(std::size_t i, std::size_t j, Elem x, Elem y) const {
        return member[i * n + j][x * sizes[j] + y] != 0;
      }
    };

    // Depth-first enumeration of tuples; `allowed(i, prefix, v)` filters
    // the value v at coordinate i given the values before it.
    void enumerate(std::vector<std::size_t> const& sizes,
                   std::function<bool(std::size_t, std::vector<Elem> const&, Elem)> const& allowed,
                   std::function<void(std::vector<Elem> const&)> const&                 visit) {
      std::vector<Elem>                  prefix;
      std::function<void(std::size_t)>   go = [&](std::size_t i) {
        if (i == sizes.size()) {
          visit(prefix);
          return;
        }
        for (Elem v = 0; v < sizes[i]; ++v) {
          if (allowed(i, prefix, v)) {
            prefix.push_back(v);
            go(i + 1);
            prefix.pop_back();
          }
        }
      };
      go(0);
    }

  }  // namespace

  std::vector<std::vector<Elem>> pairwise_closure(Subpower const& r) {
    PairTables                     pairs(r);
    std::vector<std::vector<Elem>> out;
    enumerate(
        pairs.sizes,
        [&](std::size_t i, std::vector<Elem> const& prefix, Elem v) {
          for (std::size_t j = 0; j < i; ++j) {
            if (!pairs.has(j, i, prefix[j], v)) {
              return false;
            }
          }
          return pairs.has(i, i, v, v);
        },
        [&](std::vector<Elem> const& t) { out.push_back(t); });
    return out;
  }

  Report q2d_check(ClassContext const& k, Subpower const& r,
                   std::optional<std::vector<std::size_t>> const& pinned, Mode mode) {
    Report report;
    report.kind     = "q2d";
    report.instance = "R";
    auto& main      = report.add("quasi-2-decomposable");
    auto& pin       = report.add("pinned");
    auto& bp        = report.add("baker-pixley");
    auto& majw      = report.add("majority-witness");
    if (pinned) {
      if (pinned->empty()) {
        throw Error(ErrorKind::precondition, "the pinned coordinate set is empty");
      }
      for (auto c : *pinned) {
        if (c >= r.arity()) {
          throw Error(ErrorKind::precondition, "pinned coordinate out of range");
        }
      }
      report.details["pinned"] = *pinned;
    }
    if (r.arity() > k.caps().coordinates) {
      throw Error(ErrorKind::cap_exceeded, "relation arity exceeds the coordinate cap");
    }
    if (!relation_hypotheses(report, k, r)) {
      for (auto* c : {&main, &pin, &bp, &majw}) {
        c->inapplicable("hypotheses");
      }
      report.finish();
      return report;
    }
    std::size_t n     = r.arity();
    auto        bases = coordinate_bases(k, r);

    // as-analysis of every pr_ij R, i < j.
    struct PairGraph {
      Subpower      p;
      GraphAnalysis g;
    };
    std::map<std::pair<std::size_t, std::size_t>, PairGraph> pg;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Subpower p = project(r, {i, j});
        auto     g = analyze(realize(k, p), k, mode, EdgeScope::as);
        pg.emplace(std::pair{i, j}, PairGraph{std::move(p), std::move(g)});
      }
    }
    auto pair_id = [&](std::size_t i, std::size_t j, Elem x, Elem y) -> std::optional<std::size_t> {
      return pg.at({i, j}).p.find(std::vector<Elem>{x, y});
    };
    // Component of every tuple of R in every pr_ij R.
    std::vector<std::vector<std::size_t>> tuple_comp(r.size());
    for (std::size_t t = 0; t < r.size(); ++t) {
      auto tuple = r.tuple(t);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          auto id = *pair_id(i, j, tuple[i], tuple[j]);
          tuple_comp[t].push_back(pg.at({i, j}).g.scc_as.component_of[id]);
        }
      }
    }

    std::optional<Subpower>      px;
    std::optional<GraphAnalysis> gx;
    if (pinned) {
      px = project(r, *pinned);
      gx = analyze(realize(k, *px), k, mode, EdgeScope::as);
    } else {
      pin.inapplicable("no pinned coordinates given");
    }

    std::optional<bool> majority;
    try {
      majority = has_majority_term(k);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::clone_truncated) {
        throw;
      }
    }
    report.details["majority_term"] = majority ? json(*majority) : json("unknown");
    if (!majority || !*majority) {
      bp.inapplicable("no majority term");
      majw.inapplicable("no majority term");
    } else {
      for (auto const& t : pairwise_closure(r)) {
        ++bp.examined;
        if (!r.contains(t)) {
          bp.fail({{"tuple", t}});
        }
      }
    }

    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < n; ++i) {
      sizes.push_back(r.factor(i).size());
    }
    std::size_t pinned_candidates = 0;
    enumerate(
        sizes,
        [&](std::size_t i, std::vector<Elem> const& prefix, Elem v) {
          for (std::size_t j = 0; j < i; ++j) {
            auto id = pair_id(j, i, prefix[j], v);
            if (!id || !pg.at({j, i}).g.amax.contains(static_cast<Elem>(*id))) {
              return false;
            }
          }
          return true;
        },
        [&](std::vector<Elem> const& a) {
          ++main.examined;
          std::vector<std::size_t> want;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
              auto id = *pair_id(i, j, a[i], a[j]);
              want.push_back(pg.at({i, j}).g.scc_as.component_of[id]);
            }
          }
          bool check_pin = false;
          if (pinned) {
            std::vector<Elem> pa;
            for (auto c : *pinned) {
              pa.push_back(a[c]);
            }
            auto id   = px->find(pa);
            check_pin = id && gx->amax.contains(static_cast<Elem>(*id));
          }
          bool found = false, found_pinned = false;
          for (std::size_t t = 0; t < r.size(); ++t) {
            if (tuple_comp[t] != want) {
              continue;
            }
            found = true;
            if (check_pin) {
              bool agrees = true;
              for (auto c : *pinned) {
                agrees = agrees && r.tuple(t)[c] == a[c];
              }
              found_pinned = found_pinned || agrees;
            }
            if (!check_pin || found_pinned) {
              break;
            }
          }
          if (!found) {
            main.fail({{"candidate", a}});
          }
          if (check_pin) {
            ++pinned_candidates;
            ++pin.examined;
            if (!found_pinned) {
              pin.fail({{"candidate", a}});
            }
          }
          if (majority && *majority) {
            ++majw.examined;
            if (!r.contains(a)) {
              majw.fail({{"candidate", a}});
            }
          }
        });
    report.details["candidates"]        = main.examined;
    report.details["pinned_candidates"] = pinned_candidates;
    report.finish();
    return report;
  }

  QuasiMajority quasi_majority(ClassContext const& k, Mode mode) {
    QuasiMajority out;
    auto&         report = out.report;
    report.kind          = "qmaj";
    report.instance      = k.bases().front().name();
    auto& post           = report.add("postcondition");
    auto& comp           = report.add("as-component");
    for (auto const& f : class_hypotheses(k).failures) {
      report.failed_hypotheses.push_back(f);
    }
    if (!report.failed_hypotheses.empty()) {
      post.inapplicable("class hypotheses");
      comp.inapplicable("class hypotheses");
      report.finish();
      return out;
    }

    std::vector<std::size_t>   members;
    std::vector<Realization>   realized;
    std::vector<GraphAnalysis> graphs;
    for (std::size_t m = 0; m < k.members().size(); ++m) {
      if (k.members()[m].duplicate) {
        continue;
      }
      members.push_back(m);
      realized.push_back(Realization::of_member(k.members()[m]));
      graphs.push_back(analyze(realized.back(), k, mode, EdgeScope::as));
    }

    // Three coordinates per ordered pair (a,b), a != b, of every member.
    std::vector<FiniteAlgebra>     factors;
    std::vector<std::vector<Elem>> generators(3);
    std::vector<ElementSet>        targets;  // Ft^as(a) per coordinate
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto const& alg = k.members()[members[i]].algebra;
      for (Elem a = 0; a < alg.size(); ++a) {
        ElementSet ft = graphs[i].ft_as(a);
        for (Elem b = 0; b < alg.size(); ++b) {
          if (a == b) {
            continue;
          }
          Elem pattern[3][3] = {{a, a, b}, {a, b, a}, {b, a, a}};
          for (int c = 0; c < 3; ++c) {
            factors.push_back(alg);
            targets.push_back(ft);
            for (int g = 0; g < 3; ++g) {
              generators[g].push_back(pattern[g][c]);
            }
          }
        }
      }
    }
    report.details["coordinates"] = factors.size();
    if (factors.empty()) {
      out.term = Term::variable(3, 0);
    } else {
      GenerateOptions options;
      options.track        = true;
      options.cap          = k.caps().tuples;
      options.throw_on_cap = true;
      options.stop_when    = [&targets](std::span<Elem const> t) {
        for (std::size_t c = 0; c < t.size(); ++c) {
          if (!targets[c].contains(t[c])) {
            return false;
          }
        }
        return true;
      };
      auto rel = subpower_generate(factors, generators, options);
      report.details["relation_size"] = rel.size();
      if (!rel.stopped_at()) {
        throw Error(ErrorKind::search_exhausted,
                    "the generated relation has no tuple inside the as-filters");
      }
      out.term = extract_term(rel, *rel.stopped_at());
    }
    auto const& sig = k.bases().front();
    out.term_text   = out.term.to_string(sig);
    for (auto const& b : k.bases()) {
      out.per_base.push_back(out.term.op_table(b, "maj"));
    }
    report.details["term"] = out.term_text;

    for (std::size_t i = 0; i < members.size(); ++i) {
      auto const& x = realized[i];
      auto const& g = graphs[i];
      for (Elem a = 0; a < x.size(); ++a) {
        ElementSet ft = g.ft_as(a);
        bool       maximal = g.amax.contains(a);
        ElementSet as = g.as_component(a);
        for (Elem b = 0; b < x.size(); ++b) {
          Elem args[3][3] = {{a, a, b}, {a, b, a}, {b, a, a}};
          for (auto const& p : args) {
            Elem v = x.apply(k.bases(), out.term, std::span<Elem const>(p, 3));
            ++post.examined;
            if (!ft.contains(v)) {
              post.fail({{"member", x.algebra().name()},
                         {"args", {p[0], p[1], p[2]}},
                         {"value", v}});
            }
            if (maximal) {
              ++comp.examined;
              if (!as.contains(v)) {
                comp.fail({{"member", x.algebra().name()},
                           {"args", {p[0], p[1], p[2]}},
                           {"value", v}});
              }
            }
          }
        }
      }
    }
    report.finish();
    return out;
  }

  namespace {

    // Set partitions of 0..n-1 as restricted growth strings.
    void partitions(std::size_t n, std::function<void(std::vector<std::size_t> const&)> const& f) {
      std::vector<std::size_t>         rgs(n, 0);
      std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
        if (i == n) {
          f(rgs);
          return;
        }
        for (std::size_t b = 0; b <= used && b < n; ++b) {
          rgs[i] = b;
          go(i + 1, std::max(used, b + 1));
        }
      };
      if (n > 0) {
        go(0, 0);
      }
    }

    // pr_I R is the graph of bijections from its first coordinate.
    std::optional<TrivialBlock> bijection_block(Subpower const& r,
                                                std::vector<std::size_t> const& coords) {
      Subpower    p     = project(r, coords);
      std::size_t first = r.factor(coords[0]).size();
      if (p.size() != first) {
        return std::nullopt;
      }
      for (std::size_t c = 0; c < coords.size(); ++c) {
        if (r.factor(coords[c]).size() != first) {
          return std::nullopt;
        }
        ElementSet seen(first);
        for (std::size_t t = 0; t < p.size(); ++t) {
          if (!seen.insert(p.tuple(t)[c])) {
            return std::nullopt;
          }
        }
      }
      TrivialBlock b;
      b.coordinates = coords;
      b.tuples      = p.tuples();
      std::sort(b.tuples.begin(), b.tuples.end());
      return b;
    }

  }  // namespace

  std::optional<std::vector<TrivialBlock>> almost_trivial_decomposition(Subpower const& r,
                                                                          Caps const& caps) {
    std::size_t n = r.arity();
    if (n > caps.coordinates) {
      throw Error(ErrorKind::cap_exceeded, "relation arity exceeds the coordinate cap");
    }
    if (n == 0) {
      return std::vector<TrivialBlock>{};
    }
    // Finest first: more blocks, then restricted growth string order.
    std::vector<std::vector<std::size_t>> all;
    partitions(n, [&](std::vector<std::size_t> const& rgs) { all.push_back(rgs); });
    std::stable_sort(all.begin(), all.end(), [](auto const& l, auto const& r2) {
      return *std::max_element(l.begin(), l.end()) > *std::max_element(r2.begin(), r2.end());
    });
    std::map<std::vector<std::size_t>, std::optional<TrivialBlock>> cache;
    for (auto const& rgs : all) {
      std::size_t                           k = *std::max_element(rgs.begin(), rgs.end()) + 1;
      std::vector<std::vector<std::size_t>> blocks(k);
      for (std::size_t i = 0; i < n; ++i) {
        blocks[rgs[i]].push_back(i);
      }
      std::vector<TrivialBlock> out;
      std::size_t               product = 1;
      bool                      ok      = true;
      for (auto const& b : blocks) {
        auto it = cache.find(b);
        if (it == cache.end()) {
          it = cache.emplace(b, bijection_block(r, b)).first;
        }
        if (!it->second) {
          ok = false;
          break;
        }
        product *= it->second->tuples.size();
        out.push_back(*it->second);
      }
      if (ok && product == r.size()) {
        return out;
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<Elem>> reconstruct(std::vector<TrivialBlock> const& blocks,
                                             std::size_t                      arity) {
    std::vector<std::vector<Elem>> out{std::vector<Elem>(arity, 0)};
    for (auto const& b : blocks) {
      std::vector<std::vector<Elem>> next;
      for (auto const& partial : out) {
        for (auto const& t : b.tuples) {
          auto full = partial;
          for (std::size_t c = 0; c < b.coordinates.size(); ++c) {
            full[b.coordinates[c]] = t[c];
          }
          next.push_back(std::move(full));
        }
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {

    json blocks_json(std::vector<TrivialBlock> const& blocks) {
      json out = json::array();
      for (auto const& b : blocks) {
        out.push_back({{"coordinates", b.coordinates}, {"tuples", b.tuples}});
      }
      return out;
    }

  }  // namespace

  Report almost_trivial_check(Subpower const& r, Caps const& caps) {
    Report report;
    report.kind     = "almost-trivial";
    report.instance = "R";
    auto& main      = report.add("decomposition");
    auto& rebuild   = report.add("reconstruction");
    if (auto c = r.first_non_subdirect_coordinate()) {
      report.failed_hypotheses.push_back("coordinate " + std::to_string(*c)
                                         + " is not onto its factor");
      main.inapplicable("hypotheses");
      rebuild.inapplicable("hypotheses");
      report.finish();
      return report;
    }
    auto d = almost_trivial_decomposition(r, caps);
    main.examined = 1;
    if (!d) {
      main.fail({{"reason", "no coordinate partition into bijection blocks"}});
      rebuild.inapplicable("no decomposition");
    } else {
      report.details["blocks"] = blocks_json(*d);
      rebuild.examined         = 1;
      auto tuples              = r.tuples();
      std::sort(tuples.begin(), tuples.end());
      if (reconstruct(*d, r.arity()) != tuples) {
        rebuild.fail({{"reason", "product of blocks differs from the relation"}});
      }
    }
    report.finish();
    return report;
  }

  Report maxgen_suite(ClassContext const& k, Subpower const& r, Mode mode) {
    Report report;
    report.kind     = "maxgen";
    report.instance = "R";
    auto&       simple = report.add("almost-trivial-simple");
    auto&       direct = report.add("direct-product");
    auto&       comps  = report.add("component-product");
    std::size_t n      = r.arity();
    if (n > k.caps().coordinates) {
      throw Error(ErrorKind::cap_exceeded, "relation arity exceeds the coordinate cap");
    }
    if (!relation_hypotheses(report, k, r)) {
      for (auto* c : {&simple, &direct, &comps}) {
        c->inapplicable("hypotheses");
      }
      report.finish();
      return report;
    }

    // Maximal components of each factor and whether they generate it.
    std::vector<GraphAnalysis>           g(n);
    std::vector<std::vector<ElementSet>> generating(n);
    bool                                 all_simple = true, all_generated = true;
    for (std::size_t i = 0; i < n; ++i) {
      g[i]            = factor_graph(k, r, i, mode, EdgeScope::s);
      auto const& alg = r.factor(i);
      for (auto const& c : maximal_components(g[i].scc_s, alg.size())) {
        if (sg_closure(alg, c.members()).members.count() == alg.size()) {
          generating[i].push_back(c);
        }
      }
      all_simple    = all_simple && is_simple(alg);
      all_generated = all_generated && !generating[i].empty();
    }

    auto tuple_in = [&](std::span<Elem const> t, std::size_t i) {
      for (auto const& c : generating[i]) {
        if (c.contains(t[i])) {
          return true;
        }
      }
      return false;
    };

    // Simple maximal generated factors.
    if (!all_simple) {
      simple.inapplicable("a factor is not simple");
    }
    if (!all_generated) {
      simple.inapplicable("a factor is not generated by a maximal component");
    }
    if (simple.verdict == Verdict::pass) {
      bool meets_all = false;
      for (std::size_t t = 0; t < r.size() && !meets_all; ++t) {
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) {
          inside = tuple_in(r.tuple(t), i);
        }
        meets_all = inside;
      }
      if (!meets_all) {
        simple.inapplicable("R misses every product of generating maximal components");
      } else {
        simple.examined = 1;
        if (!almost_trivial_decomposition(r, k.caps())) {
          simple.fail({{"reason", "not almost trivial"}});
        }
      }
    }

    if (n < 2) {
      direct.inapplicable("needs two coordinates");
      comps.inapplicable("needs two coordinates");
      report.finish();
      return report;
    }
    std::vector<std::size_t> tail;
    for (std::size_t i = 1; i < n; ++i) {
      tail.push_back(i);
    }
    Subpower          p    = project(r, tail);
    Realization       xp   = realize(k, p);
    GraphAnalysis     gp   = analyze(xp, k, mode, EdgeScope::s);
    std::vector<Elem> down(r.size());
    for (std::size_t t = 0; t < r.size(); ++t) {
      auto              tuple = r.tuple(t);
      std::vector<Elem> rest(tuple.begin() + 1, tuple.end());
      down[t] = static_cast<Elem>(*p.find(rest));
    }

    // R = A1 x pr_{2..n} R.
    {
      std::vector<ElementSet> q_generating;
      for (auto const& c : maximal_components(gp.scc_s, p.size())) {
        if (sg_closure(xp.algebra(), c.members()).members.count() == p.size()) {
          q_generating.push_back(c);
        }
      }
      bool full_pairs = true;
      for (std::size_t i = 1; i < n; ++i) {
        full_pairs = full_pairs
                     && project(r, {0, i}).size() == r.factor(0).size() * r.factor(i).size();
      }
      bool meets_cq = false;
      for (std::size_t t = 0; t < r.size() && !meets_cq; ++t) {
        if (!tuple_in(r.tuple(t), 0)) {
          continue;
        }
        for (auto const& q : q_generating) {
          meets_cq = meets_cq || q.contains(down[t]);
        }
      }
      if (generating[0].empty()) {
        direct.inapplicable("the first factor is not generated by a maximal component");
      }
      if (q_generating.empty()) {
        direct.inapplicable("pr_{2..n} R is not generated by a maximal component");
      }
      if (!full_pairs) {
        direct.inapplicable("some pr_{1i} R is not the full product");
      }
      if (direct.verdict == Verdict::pass && !meets_cq) {
        direct.inapplicable("R misses C1 x Q for generating maximal components");
      }
      if (direct.verdict == Verdict::pass) {
        direct.examined = 1;
        if (r.size() != r.factor(0).size() * p.size()) {
          direct.fail({{"relation_size", r.size()},
                       {"expected", r.factor(0).size() * p.size()}});
        }
      }
    }

    // Products of maximal components.
    {
      bool linked = true;
      for (std::size_t i = 1; i < n; ++i) {
        linked = linked && is_linked(project(r, {0, i}));
      }
      if (!linked) {
        comps.inapplicable("some pr_{1i} R is not linked");
      } else {
        for (std::size_t t = 0; t < r.size(); ++t) {
          Elem a1 = r.tuple(t)[0];
          if (!g[0].max.contains(a1) || !gp.max.contains(down[t])) {
            continue;
          }
          ++comps.examined;
          auto const& c1 = g[0].scc_s.members[g[0].scc_s.component_of[a1]];
          auto const& c2 = gp.scc_s.members[gp.scc_s.component_of[down[t]]];
          for (Elem x : c1) {
            for (Elem y : c2) {
              std::vector<Elem> full{x};
              auto              rest = p.tuple(y);
              full.insert(full.end(), rest.begin(), rest.end());
              if (!r.contains(full)) {
                comps.fail({{"tuple", r.tuple_vector(t)}, {"missing", full}});
              }
            }
          }
        }
      }
    }
    report.finish();
    return report;
  }

}  // namespace alggraph
