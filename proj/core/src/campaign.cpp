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

#include "alggraph/campaign.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "alggraph/corpus.hpp"
#include "alggraph/error.hpp"
#include "alggraph/io.hpp"
#include "alggraph/relations.hpp"

namespace alggraph {

  namespace {

    constexpr std::pair<Verifier, char const*> kNames[] = {
        {Verifier::connectivity, "connectivity"},
        {Verifier::lifting, "lifting"},
        {Verifier::qmaj, "qmaj"},
        {Verifier::rect, "rect"},
        {Verifier::q2d, "q2d"},
        {Verifier::almost_trivial, "almost-trivial"},
        {Verifier::maxgen, "maxgen"},
    };

    class Runner {
     public:
      Runner(CampaignSpec const& spec, CampaignResult& out) : spec_(spec), out_(out) {}

      bool wants(Verifier v) const {
        return std::find(spec_.verifiers.begin(), spec_.verifiers.end(), v)
               != spec_.verifiers.end();
      }

      // Runs f, recording its reports or the error it raised.
      void run(Json& reports, std::string const& what,
               std::function<std::vector<Report>()> const& f) {
        try {
          for (auto const& r : f()) {
            record(r);
            reports.push_back(to_json(r));
          }
        } catch (Error const& e) {
          ++out_.errors;
          reports.push_back({{"kind", what},
                             {"error", std::string(to_string(e.kind()))},
                             {"message", e.what()}});
        }
      }

      // HS of the distinct factors, built once per instance: the ternary
      // fragment dominates the cost of most checks.
      ClassContext const& context(std::vector<FiniteAlgebra> const& factors) {
        std::vector<std::size_t>   key;
        std::vector<FiniteAlgebra> bases;
        for (auto const& f : factors) {
          if (std::find(bases.begin(), bases.end(), f) != bases.end()) {
            continue;
          }
          bases.push_back(f);
          key.push_back(static_cast<std::size_t>(
              std::find(pool_.begin(), pool_.end(), f) - pool_.begin()));
        }
        auto& slot = contexts_[key];
        if (!slot) {
          slot = std::make_unique<ClassContext>(std::move(bases), spec_.caps);
        }
        return *slot;
      }

      Json algebra_reports(FiniteAlgebra const& a) {
        Json reports = Json::array();
        auto mode    = spec_.mode;
        if (wants(Verifier::connectivity)) {
          run(reports, "connectivity", [&] {
            return std::vector{verify_connectivity(context({a}), Realization::of_base(a, 0), mode)};
          });
        }
        if (wants(Verifier::lifting)) {
          run(reports, "lifting", [&] {
            return quotient_lifting_suite(context({a}), Realization::of_base(a, 0), mode);
          });
        }
        if (wants(Verifier::qmaj)) {
          run(reports, "qmaj", [&] {
            auto q = quasi_majority(context({a}), mode);
            if (!q.per_base.empty()) {
              q.report.details["table"] = q.per_base.front().table;
            }
            return std::vector{q.report};
          });
        }
        return reports;
      }

      Json relation_reports(Subpower const& r, InstanceStream& stream) {
        Json reports = Json::array();
        auto mode    = spec_.mode;
        auto caps    = spec_.caps;
        // Drawn up front so the stream does not depend on which verifiers
        // throw.
        auto pinned = stream.next_coordinates(r.arity());
        auto k_of   = [&]() -> ClassContext const& { return context(r.factors()); };
        if (wants(Verifier::rect) && r.arity() == 2) {
          run(reports, "rect", [&] {
            auto const& k = k_of();
            return std::vector{rect_check(k, r, mode), linkage_rect_check(k, r, mode),
                               umax_rect_check(k, r, mode)};
          });
        }
        if (wants(Verifier::q2d)) {
          run(reports, "q2d", [&] {
            auto const& k = k_of();
            return std::vector{q2d_check(k, r, pinned, mode)};
          });
        }
        if (wants(Verifier::lifting)) {
          run(reports, "lifting", [&] { return product_lifting_suite(k_of(), r, mode); });
        }
        if (wants(Verifier::almost_trivial)) {
          run(reports, "almost-trivial", [&] {
            return std::vector{almost_trivial_check(r, caps)};
          });
        }
        if (wants(Verifier::maxgen)) {
          run(reports, "maxgen", [&] { return std::vector{maxgen_suite(k_of(), r, mode)}; });
        }
        return reports;
      }

      Json instance(FiniteAlgebra const& a, std::vector<FiniteAlgebra> const& pool,
                    InstanceStream& stream) {
        ++out_.algebras;
        pool_ = pool;
        contexts_.clear();
        Json inst = {{"algebra", to_json(a)}, {"reports", algebra_reports(a)}};
        Json rels = Json::array();
        for (std::size_t i = 0; i < spec_.relations; ++i) {
          ++out_.relations;
          Json rj;
          try {
            auto r = stream.next_relation(pool);
            rj     = {{"relation", to_json(r)}, {"reports", relation_reports(r, stream)}};
          } catch (Error const& e) {
            if (e.kind() != ErrorKind::cap_exceeded && e.kind() != ErrorKind::filter_starvation) {
              throw;
            }
            ++out_.errors;
            rj = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
          }
          rels.push_back(std::move(rj));
        }
        if (spec_.relations > 0) {
          inst["relations"] = std::move(rels);
        }
        return inst;
      }

     private:
      void record(Report const& r) {
        for (auto const& c : r.checks) {
          auto& t = out_.tally[r.kind + "/" + c.name];
          switch (c.verdict) {
            case Verdict::pass: ++t.pass; break;
            case Verdict::fail:
              ++t.fail;
              // Not being almost trivial is an answer, not a refuted claim.
              if (!(r.kind == "almost-trivial" && c.name == "decomposition")) {
                ++out_.failures;
              }
              break;
            case Verdict::inapplicable: ++t.inapplicable; break;
          }
        }
      }

      CampaignSpec const& spec_;
      CampaignResult&     out_;

      std::vector<FiniteAlgebra>                                          pool_;
      std::map<std::vector<std::size_t>, std::unique_ptr<ClassContext>> contexts_;
    };

  }  // namespace

  char const* to_string(Verifier v) {
    for (auto const& [k, name] : kNames) {
      if (k == v) {
        return name;
      }
    }
    return "unknown";
  }

  std::optional<Verifier> verifier_from_string(std::string const& s) {
    for (auto const& [k, name] : kNames) {
      if (s == name) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::vector<Verifier> parse_verifiers(std::string const& text) {
    std::vector<Verifier> out;
    std::size_t           start = 0;
    while (start <= text.size()) {
      auto end  = text.find(',', start);
      auto item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (!item.empty()) {
        auto v = verifier_from_string(item);
        if (!v) {
          throw Error(ErrorKind::parse, "unknown verifier \"" + item + "\"");
        }
        out.push_back(*v);
      }
      if (end == std::string::npos) {
        break;
      }
      start = end + 1;
    }
    return out;
  }

  nlohmann::json CampaignResult::summary() const {
    Json checks = Json::object();
    for (auto const& [name, t] : tally) {
      checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"inapplicable", t.inapplicable}};
    }
    return {{"algebras", algebras},
            {"relations", relations},
            {"failures", failures},
            {"errors", errors},
            {"checks", checks}};
  }

  CampaignResult run_campaign(CampaignSpec const& spec, std::uint64_t seed) {
    CampaignResult out;
    Runner         runner(spec, out);
    InstanceStream stream(spec.instances, seed, spec.caps);
    Json           instances = Json::array();
    if (spec.corpus) {
      for (auto const& a : corpus_algebras()) {
        instances.push_back(runner.instance(a, {a}, stream));
      }
    }
    for (std::size_t i = 0; i < spec.algebras; ++i) {
      auto a = stream.next_algebra();
      instances.push_back(runner.instance(a, {a}, stream));
    }
    Json verifiers = Json::array();
    for (auto v : spec.verifiers) {
      verifiers.push_back(to_string(v));
    }
    out.document = {{"seed", seed},
                    {"spec", spec.instances.to_string()},
                    {"mode", to_string(spec.mode)},
                    {"verifiers", verifiers},
                    {"instances", std::move(instances)},
                    {"acceptance", {{"accepted", stream.accepted()}, {"drawn", stream.drawn()}}}};
    out.document["summary"] = out.summary();
    return out;
  }

}  // namespace alggraph
