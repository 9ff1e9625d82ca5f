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

// Instance checks of the connectivity and lifting statements. A check
// whose hypotheses fail is inapplicable, never passed or failed.

#ifndef ALGGRAPH_VERIFY_HPP_
#define ALGGRAPH_VERIFY_HPP_

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alggraph/graph.hpp"
#include "alggraph/realization.hpp"
#include "alggraph/subpower.hpp"
#include "alggraph/term_context.hpp"
#include "alggraph/thin.hpp"

namespace alggraph {

  enum class Verdict { pass, fail, inapplicable };
  char const* to_string(Verdict v);

  inline constexpr std::size_t kCounterexampleLimit = 16;

  struct Check {
    std::string                 name;
    Verdict                     verdict = Verdict::pass;
    std::vector<std::string>    failed_hypotheses;
    std::size_t                 examined = 0;
    std::size_t                 failures = 0;
    std::vector<nlohmann::json> counterexamples;

    void fail(nlohmann::json counterexample);
    void inapplicable(std::string hypothesis);
  };

  struct Report {
    std::string              kind;
    std::string              instance;
    Verdict                  verdict = Verdict::pass;
    std::vector<std::string> failed_hypotheses;
    // checks.front() is the main statement; the rest are supporting
    // instance checks.
    // A deque so references returned by add() stay valid.
    std::deque<Check> checks;
    nlohmann::json     details = nlohmann::json::object();

    Check& add(std::string name);
    // fail if any check failed, else inapplicable if the report's or the
    // main check's hypotheses failed, else pass.
    void finish();
  };

  // Smoothness and type 1 omission over every member of K, and whether the
  // clone fragments are complete.
  struct ClassHypotheses {
    bool                     smooth      = true;
    bool                     omits_type1 = true;
    bool                     complete    = true;
    std::vector<std::string> failures;

    bool holds() const noexcept { return smooth && omits_type1; }
  };
  ClassHypotheses class_hypotheses(ClassContext const& k);

  // Thin edges and graphs of x. Exact mode throws Error(clone_truncated)
  // on a truncated ternary fragment.
  GraphAnalysis analyze(Realization const& x, ClassContext const& k, Mode mode,
                        EdgeScope scope = EdgeScope::all);

  // K for a relation: the distinct factors, in order of first appearance.
  ClassContext class_of_factors(Subpower const& r, Caps const& caps);
  // Index into k.bases() of every factor of r. Throws Error(precondition)
  // if a factor is not a base.
  std::vector<std::size_t> coordinate_bases(ClassContext const& k, Subpower const& r);
  Realization              realize(ClassContext const& k, Subpower const& r, std::string name = {});

  // Oriented connectivity, special paths between maximal and between
  // as-maximal elements, asm-paths between u-maximal elements, and a unique
  // u-maximal component.
  Report verify_connectivity(ClassContext const& k, Realization const& x, Mode mode);
  Report verify_connectivity(FiniteAlgebra const& a, Caps const& caps, Mode mode);

  enum class LiftingCase {
    quotient_edge,
    quotient_path,
    quotient_max,
    product_edge,
    product_path,
    product_max,
    as_product,
  };
  char const*                to_string(LiftingCase c);
  std::optional<LiftingCase> lifting_case_from_string(std::string const& s);

  // x in K and a congruence theta of x.
  Report verify_quotient_lifting(ClassContext const& k, Realization const& x,
                                 Partition const& theta, LiftingCase c, Mode mode);
  // r subdirect over bases of k, projected to `coords`.
  Report verify_product_lifting(ClassContext const& k, Subpower const& r,
                                std::vector<std::size_t> const& coords, LiftingCase c, Mode mode);
  // r binary subdirect.
  Report verify_as_product(ClassContext const& k, Subpower const& r, Mode mode);

  // Every quotient case for every congruence of x.
  std::vector<Report> quotient_lifting_suite(ClassContext const& k, Realization const& x,
                                             Mode mode);
  // Every product case for every nonempty proper coordinate set, and the
  // as-product case when r is binary.
  std::vector<Report> product_lifting_suite(ClassContext const& k, Subpower const& r, Mode mode);

}  // namespace alggraph

#endif  // ALGGRAPH_VERIFY_HPP_
