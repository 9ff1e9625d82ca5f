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

// Seeded random algebras and subpowers. A stream depends only on the seed
// and the spec: draws go through std::mt19937_64 and a bounded draw
// defined here, not through the implementation-defined std distributions.

#ifndef ALGGRAPH_RANDOM_HPP_
#define ALGGRAPH_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alggraph/algebra.hpp"
#include "alggraph/caps.hpp"
#include "alggraph/subpower.hpp"

namespace alggraph {

  // Text form: comma separated key=value pairs, e.g.
  //   size=2..3,ops=2+3,filter=smooth+omits1,rel-arity=2..4,gens=1..3
  // ops lists operation arities (named f, g, h, ...). Filters: smooth,
  // omits1, exact (the two-valued ternary fragment is complete, so exact
  // mode applies), subdirect (relations only).
  struct RandomSpec {
    std::size_t              min_size = 2;
    std::size_t              max_size = 3;
    std::vector<std::size_t> arities{2};
    bool                     smooth      = false;
    bool                     omits_type1 = false;
    bool                     exact       = false;
    std::size_t              min_rel_arity = 2;
    std::size_t              max_rel_arity = 2;
    std::size_t              min_generators = 1;
    std::size_t              max_generators = 3;
    bool                     subdirect      = false;

    std::string to_string() const;
  };

  // Throws Error(parse) on unknown keys or malformed values and
  // Error(precondition) on empty ranges.
  RandomSpec parse_random_spec(std::string const& text);

  class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    // Uniform on 0..bound-1 by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

   private:
    std::mt19937_64 engine_;
  };

  // Off-diagonal table entries uniform; diagonal forced so the algebra is
  // idempotent.
  FiniteAlgebra random_algebra(RandomSource& rng, std::size_t size,
                               std::vector<std::size_t> const& arities, std::string name);

  class InstanceStream {
   public:
    InstanceStream(RandomSpec spec, std::uint64_t seed, Caps caps = {});

    // The next algebra passing the filters. Throws Error(filter_starvation)
    // after caps.rejection consecutive rejections, with the acceptance
    // rate so far in the message.
    FiniteAlgebra next_algebra();
    // A subpower of the given factors generated by random tuples; factors
    // are chosen from `pool` per coordinate. Subdirectness is enforced by
    // rejection when the RandomSpec asks for it.
    Subpower next_relation(std::vector<FiniteAlgebra> const& pool);
    // A nonempty subset of 0..n-1, sorted.
    std::vector<std::size_t> next_coordinates(std::size_t n);

    std::size_t accepted() const noexcept { return accepted_; }
    std::size_t drawn() const noexcept { return drawn_; }
    RandomSpec const& spec() const noexcept { return spec_; }

   private:
    RandomSpec   spec_;
    Caps         caps_;
    RandomSource rng_;
    std::size_t  accepted_ = 0;
    std::size_t  drawn_    = 0;
  };

}  // namespace alggraph

#endif  // ALGGRAPH_RANDOM_HPP_
