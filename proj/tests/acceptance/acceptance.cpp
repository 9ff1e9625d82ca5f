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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. With a directory argument the campaign documents are
// written there as JSON.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "alggraph/campaign.hpp"
#include "alggraph/congruence.hpp"
#include "alggraph/corpus.hpp"
#include "alggraph/edges.hpp"
#include "alggraph/error.hpp"
#include "alggraph/io.hpp"
#include "alggraph/random.hpp"
#include "alggraph/relations.hpp"
#include "alggraph/verify.hpp"
#include "unit/support.hpp"

namespace {

  using namespace alggraph;
  using Clock = std::chrono::steady_clock;

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  std::filesystem::path g_out;

  void save(std::string const& name, CampaignResult const& r) {
    if (!g_out.empty()) {
      write_text(g_out / (name + ".json"), dump(r.document));
    }
  }

  // Sums a tally over check keys starting with `prefix`.
  CheckTally tally(CampaignResult const& r, std::string const& prefix) {
    CheckTally t;
    for (auto const& [key, v] : r.tally) {
      if (key.rfind(prefix, 0) == 0) {
        t.pass += v.pass;
        t.fail += v.fail;
        t.inapplicable += v.inapplicable;
      }
    }
    return t;
  }

  // Relations whose report list holds a report of the given kind.
  std::size_t relations_with(CampaignResult const& r, std::string const& kind) {
    std::size_t n = 0;
    for (auto const& inst : r.document["instances"]) {
      if (!inst.contains("relations")) {
        continue;
      }
      for (auto const& rel : inst["relations"]) {
        if (!rel.contains("reports")) {
          continue;
        }
        for (auto const& rep : rel["reports"]) {
          if (rep.value("kind", "") == kind) {
            ++n;
            break;
          }
        }
      }
    }
    return n;
  }

  CampaignResult campaign(std::string const& instances, std::size_t algebras,
                          std::size_t relations, bool corpus, std::string const& verifiers,
                          std::uint64_t seed) {
    CampaignSpec spec;
    spec.instances = parse_random_spec(instances);
    spec.algebras  = algebras;
    spec.relations = relations;
    spec.corpus    = corpus;
    spec.verifiers = parse_verifiers(verifiers);
    return run_campaign(spec, seed);
  }

  // Campaign parameters, shared with the reproducibility criterion.
  struct Plan {
    std::string   name, instances, verifiers;
    std::size_t   algebras, relations;
    bool          corpus;
    std::uint64_t seed;

    CampaignResult run() const {
      return campaign(instances, algebras, relations, corpus, verifiers, seed);
    }
  };

  Plan const kConnectivityBinary{"connectivity-binary", "size=2..3,ops=2,filter=smooth+omits1+exact",
                                 "connectivity", 200, 0, false, 3};
  Plan const kConnectivityTernary{"connectivity-ternary", "size=2,ops=3,filter=smooth+omits1+exact",
                                  "connectivity", 50, 0, false, 30};
  Plan const kRect{"rect",
                   "size=2..3,ops=2,filter=smooth+omits1+subdirect,rel-arity=2",
                   "rect,lifting", 170, 3, true, 4};
  Plan const kQ2dBinary{"q2d-binary",
                        "size=2..3,ops=2,filter=smooth+omits1+subdirect,rel-arity=2..4",
                        "q2d", 70, 3, true, 5};
  Plan const kQ2dTernary{"q2d-ternary",
                         "size=2,ops=3,filter=smooth+omits1+subdirect,rel-arity=2..4", "q2d", 40,
                         3, false, 6};

  // 1. The four two-element algebras get the four edge types.
  Outcome two_element_classification() {
    std::pair<char const*, EdgeType> const cases[] = {{"s2", EdgeType::semilattice},
                                                      {"m2", EdgeType::majority},
                                                      {"z2", EdgeType::affine},
                                                      {"proj2", EdgeType::unary}};
    Outcome            out;
    std::ostringstream d;
    for (auto const& [name, want] : cases) {
      auto got = classify_pair(*corpus_algebra(name), 0, 1).type;
      d << name << "=" << to_string(got) << " ";
      out.ok = out.ok && got == want;
    }
    out.detail = d.str();
    return out;
  }

  // 2. Closures against brute-force fixpoints.
  Outcome closure_oracles() {
    RandomSource rng(2026);
    std::size_t  instances = 0, mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::size_t              n = rng.between(1, 4);
      std::vector<std::size_t> arities;
      std::size_t              ops = rng.between(1, 2);
      for (std::size_t i = 0; i < ops; ++i) {
        arities.push_back(rng.between(1, 3));
      }
      auto a = random_algebra(rng, n, arities, "oracle");
      ++instances;

      std::set<Elem>    seed;
      std::vector<Elem> seed_list;
      for (std::size_t i = 0, k = rng.between(1, n); i < k; ++i) {
        Elem x = static_cast<Elem>(rng.below(n));
        seed.insert(x);
        seed_list.push_back(x);
      }
      if (testing::member_set(sg_closure(a, seed_list).members) != testing::naive_sg(a, seed)) {
        ++mismatches;
      }

      std::vector<std::pair<Elem, Elem>> pairs;
      for (std::size_t i = 0, k = rng.below(3); i < k; ++i) {
        pairs.emplace_back(static_cast<Elem>(rng.below(n)), static_cast<Elem>(rng.below(n)));
      }
      if (cg(a, pairs) != testing::naive_cg(a, pairs)) {
        ++mismatches;
      }

      std::size_t                    m = rng.between(1, n == 4 ? 2 : 3);
      std::vector<std::vector<Elem>> gens(rng.between(1, 3), std::vector<Elem>(m));
      for (auto& t : gens) {
        for (auto& x : t) {
          x = static_cast<Elem>(rng.below(n));
        }
      }
      auto r = subpower_generate(std::vector<FiniteAlgebra>(m, a), gens);
      if (testing::tuple_set(r) != testing::naive_subpower(a, m, gens)) {
        ++mismatches;
      }
    }
    return {mismatches == 0 && instances >= 1000,
            std::to_string(instances) + " instances, " + std::to_string(mismatches) +
                " mismatches"};
  }

  std::string tally_text(CheckTally const& t) {
    return std::to_string(t.pass) + " pass, " + std::to_string(t.fail) + " fail, " +
           std::to_string(t.inapplicable) + " inapplicable";
  }

  // 3. Connectivity over random smooth type 1 omitting algebras.
  Outcome connectivity_campaign() {
    auto        a = kConnectivityBinary.run();
    auto        b = kConnectivityTernary.run();
    save(kConnectivityBinary.name, a);
    save(kConnectivityTernary.name, b);
    auto        t = tally(a, "connectivity/");
    auto        u = tally(b, "connectivity/");
    std::size_t algebras = a.algebras + b.algebras;
    bool ok = a.failures + b.failures == 0 && a.errors + b.errors == 0 && algebras >= 200;
    return {ok, std::to_string(algebras) + " algebras; checks " +
                    tally_text({t.pass + u.pass, t.fail + u.fail,
                                t.inapplicable + u.inapplicable}) +
                    "; errors " + std::to_string(a.errors + b.errors)};
  }

  CampaignResult g_rect;

  // 4. Rectangularity over binary subpowers of corpus and random algebras.
  Outcome rect_campaign() {
    g_rect = kRect.run();
    save(kRect.name, g_rect);
    std::size_t relations = relations_with(g_rect, "rect");
    auto        rect      = tally(g_rect, "rect/");
    auto        linkage   = tally(g_rect, "linkage-rect/");
    auto        umax      = tally(g_rect, "umax-rect/");
    std::size_t errors    = 0;
    for (auto const& inst : g_rect.document["instances"]) {
      for (auto const& rel : inst.value("relations", Json::array())) {
        if (rel.contains("error")) {
          ++errors;
        }
        for (auto const& rep : rel.value("reports", Json::array())) {
          if (rep.contains("error") && rep.value("kind", "") == "rect") {
            ++errors;
          }
        }
      }
    }
    bool ok = relations >= 500 && rect.fail + linkage.fail + umax.fail == 0 && errors == 0;
    return {ok, std::to_string(relations) + " relations; rect " + tally_text(rect) +
                    "; linkage " + tally_text(linkage) + "; umax " + tally_text(umax)};
  }

  // 5. Quasi-2-decomposability, pinned, and 2-decomposability with a
  // majority term.
  Outcome q2d_campaign() {
    auto a = kQ2dBinary.run();
    auto b = kQ2dTernary.run();
    save(kQ2dBinary.name, a);
    save(kQ2dTernary.name, b);
    std::size_t relations = relations_with(a, "q2d") + relations_with(b, "q2d");
    auto        q         = tally(a, "q2d/");
    auto        r         = tally(b, "q2d/");
    auto        bp_a      = tally(a, "q2d/baker-pixley");
    auto        bp_b      = tally(b, "q2d/baker-pixley");
    auto        pin_a     = tally(a, "q2d/pinned");
    auto        pin_b     = tally(b, "q2d/pinned");
    bool ok = relations >= 200 && q.fail + r.fail == 0 && a.errors + b.errors == 0 &&
              bp_a.pass + bp_b.pass > 0 && pin_a.pass + pin_b.pass > 0;
    return {ok, std::to_string(relations) + " relations; all checks " +
                    tally_text({q.pass + r.pass, q.fail + r.fail,
                                q.inapplicable + r.inapplicable}) +
                    "; baker-pixley " + std::to_string(bp_a.pass + bp_b.pass) + " pass" +
                    "; pinned " + std::to_string(pin_a.pass + pin_b.pass) + " pass"};
  }

  // 6. Quasi-majority terms, checked pointwise and rerun for determinism.
  Outcome quasi_majority_terms() {
    Outcome            out;
    std::ostringstream d;
    for (std::string name : {"s2", "m2", "z2", "c3"}) {
      auto         a = *corpus_algebra(name);
      ClassContext k({a});
      auto         q = quasi_majority(k, Mode::exact);
      auto         g = analyze(Realization::of_base(a, 0), k, Mode::exact);
      auto const&  t = q.per_base.at(0).table;
      std::size_t  n = a.size();
      bool         pointwise = q.report.verdict == Verdict::pass;
      for (Elem x = 0; x < n; ++x) {
        auto ft = g.ft_as(x);
        for (Elem y = 0; y < n; ++y) {
          pointwise = pointwise && ft.contains(t[(x * n + x) * n + y]) &&
                      ft.contains(t[(x * n + y) * n + x]) && ft.contains(t[(y * n + x) * n + x]);
        }
      }
      ClassContext k2({a});
      auto         again = quasi_majority(k2, Mode::exact);
      bool         same  = again.per_base.at(0).table == t && again.term_text == q.term_text;
      d << name << ":" << (pointwise ? "ok" : "bad") << (same ? "" : "(nondeterministic)") << " ";
      out.ok = out.ok && pointwise && same;
    }
    out.detail = d.str();
    return out;
  }

  // 7. Lifting over every corpus congruence and the rectangularity
  // campaign's subpowers.
  Outcome lifting_suite() {
    CheckTally quotient;
    for (auto const& a : corpus_algebras()) {
      ClassContext k({a});
      for (auto const& r : quotient_lifting_suite(k, Realization::of_base(a, 0), Mode::exact)) {
        for (auto const& c : r.checks) {
          switch (c.verdict) {
            case Verdict::pass: ++quotient.pass; break;
            case Verdict::fail: ++quotient.fail; break;
            case Verdict::inapplicable: ++quotient.inapplicable; break;
          }
        }
      }
    }
    auto        product   = tally(g_rect, "lifting/");
    std::size_t relations = relations_with(g_rect, "lifting/product-edge");
    bool        ok        = quotient.fail == 0 && product.fail == 0 && relations > 0;
    return {ok, "quotients " + tally_text(quotient) + "; products over " +
                    std::to_string(relations) + " relations " + tally_text(product)};
  }

  // 8. Campaigns rerun with the same seeds serialize to the same bytes.
  Outcome reproducibility() {
    std::size_t same = 0, total = 0;
    for (auto const* plan :
         {&kConnectivityBinary, &kConnectivityTernary, &kRect, &kQ2dBinary, &kQ2dTernary}) {
      ++total;
      if (dump(plan->run().document) == dump(plan->run().document)) {
        ++same;
      }
    }
    return {same == total, std::to_string(same) + "/" + std::to_string(total) +
                               " campaigns byte-identical"};
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    g_out = argv[1];
    std::filesystem::create_directories(g_out);
  }
  struct Criterion {
    int                      number;
    char const*              name;
    double                   limit_seconds;
    std::function<Outcome()> run;
  };
  Criterion const criteria[] = {
      {1, "two-element classification", 1, two_element_classification},
      {2, "closure oracles", 60, closure_oracles},
      {3, "connectivity campaign", 600, connectivity_campaign},
      {4, "rectangularity campaign", 600, rect_campaign},
      {5, "q2d campaign", 900, q2d_campaign},
      {6, "quasi-majority", 120, quasi_majority_terms},
      {7, "lifting suite", 600, lifting_suite},
      {8, "reproducibility", 1800, reproducibility},
  };
  bool all = true;
  for (auto const& c : criteria) {
    Outcome out;
    auto    start = Clock::now();
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool   ok      = out.ok && seconds < c.limit_seconds;
    all            = all && ok;
    std::printf("%s criterion %d: %s (%s; %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL",
                c.number, c.name, out.detail.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
