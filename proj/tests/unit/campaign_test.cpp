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

#include <gtest/gtest.h>

#include "alggraph/campaign.hpp"
#include "alggraph/corpus.hpp"
#include "alggraph/error.hpp"
#include "alggraph/io.hpp"

namespace alggraph {
  namespace {

    CampaignSpec small_spec() {
      CampaignSpec spec;
      spec.instances = parse_random_spec("size=2..3,ops=2,filter=smooth+omits1+subdirect");
      spec.algebras  = 4;
      spec.relations = 2;
      spec.verifiers = parse_verifiers("connectivity,lifting,qmaj,rect,q2d,almost-trivial,maxgen");
      return spec;
    }

    TEST(Campaign, RerunIsByteIdentical) {
      auto spec = small_spec();
      auto a    = run_campaign(spec, 17);
      auto b    = run_campaign(spec, 17);
      EXPECT_EQ(dump(a.document), dump(b.document));
      EXPECT_EQ(a.failures, 0u);
      EXPECT_EQ(a.errors, 0u);
    }

    TEST(Campaign, SeedChangesInstances) {
      auto spec = small_spec();
      EXPECT_NE(dump(run_campaign(spec, 1).document), dump(run_campaign(spec, 2).document));
    }

    TEST(Campaign, CountsAndSummary) {
      auto spec   = small_spec();
      spec.corpus = true;
      auto r      = run_campaign(spec, 3);
      EXPECT_EQ(r.algebras, spec.algebras + corpus_algebras().size());
      EXPECT_EQ(r.relations, r.algebras * spec.relations);
      auto s = r.document["summary"];
      EXPECT_EQ(s["algebras"], r.algebras);
      EXPECT_TRUE(s["checks"].contains("connectivity/unique-umax"));
      EXPECT_EQ(r.document["seed"], 3);
    }

    TEST(Campaign, VerifierNames) {
      auto v = parse_verifiers("rect,,q2d");
      EXPECT_EQ(v, (std::vector<Verifier>{Verifier::rect, Verifier::q2d}));
      EXPECT_THROW(parse_verifiers("rect,magic"), Error);
      EXPECT_EQ(verifier_from_string("almost-trivial"), Verifier::almost_trivial);
    }

  }  // namespace
}  // namespace alggraph
