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

#ifndef ALGGRAPH_CAPS_HPP_
#define ALGGRAPH_CAPS_HPP_

#include <cstddef>
#include <string>

namespace alggraph {

  // Resource bounds shared by every search in the library.
  struct Caps {
    std::size_t clone          = 100'000;     // term-operation tables
    std::size_t tuples         = 1'000'000;   // subpower tuples
    std::size_t coordinates    = 6;           // relation arity
    std::size_t hs_members     = 4'096;       // members of HS(A)
    std::size_t congruences    = 100'000;     // congruence lattice size
    std::size_t table_entries  = 20'000'000;  // materialized op-table cells
    std::size_t subuniverses   = 4'096;
    std::size_t rejection      = 20'000;      // random filter budget
    std::size_t work           = 2'000'000'000;  // operation applications per closure

    friend bool operator==(Caps const&, Caps const&) = default;
  };

  // Parses "clone=5000,tuples=100000" style overrides on top of `base`.
  // Unknown keys and malformed values raise Error(parse).
  Caps parse_caps(std::string const& spec, Caps base = {});

  // Defaults overridden by the ALGGRAPH_CAPS environment variable, if set.
  Caps caps_from_environment(Caps base = {});

}  // namespace alggraph

#endif  // ALGGRAPH_CAPS_HPP_
