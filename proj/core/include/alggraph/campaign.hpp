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

// Verification campaigns over a seeded instance stream. The result holds
// no timings or addresses, so a rerun with the same seed and CampaignSpec
// serializes to the same bytes.

#ifndef ALGGRAPH_CAMPAIGN_HPP_
#define ALGGRAPH_CAMPAIGN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alggraph/random.hpp"
#include "alggraph/thin.hpp"

namespace alggraph {

  enum class Verifier {
    connectivity,    // per algebra
    lifting,         // quotients per algebra, products per relation
    qmaj,            // per algebra
    rect,            // binary relations: rect, linkage and umax variants
    q2d,             // per relation, with a random pinned set
    almost_trivial,  // per relation
    maxgen,          // per relation
  };
  char const*             to_string(Verifier v);
  std::optional<Verifier> verifier_from_string(std::string const& s);
  // "connectivity,rect,..."; throws Error(parse).
  std::vector<Verifier> parse_verifiers(std::string const& text);

  struct CampaignSpec {
    RandomSpec            instances;
    std::size_t           algebras  = 10;
    std::size_t           relations = 0;  // per algebra
    bool                  corpus    = false;  // corpus algebras before random ones
    std::vector<Verifier> verifiers;
    Mode                  mode = Mode::exact;
    Caps                  caps;
  };

  struct CheckTally {
    std::size_t pass = 0, fail = 0, inapplicable = 0;
  };

  struct CampaignResult {
    nlohmann::json                    document;  // instances and reports
    std::map<std::string, CheckTally> tally;     // by "kind/check"
    std::size_t                       algebras  = 0;
    std::size_t                       relations = 0;
    // Failed checks, except almost-trivial decompositions that do not exist.
    std::size_t                       failures  = 0;
    std::size_t                       errors    = 0;  // verifiers that threw

    nlohmann::json summary() const;
  };

  CampaignResult run_campaign(CampaignSpec const& spec, std::uint64_t seed);

}  // namespace alggraph

#endif  // ALGGRAPH_CAMPAIGN_HPP_
