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

#include "alggraph/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "alggraph/error.hpp"

namespace alggraph {

  Caps parse_caps(std::string const& spec, Caps base) {
    std::istringstream in(spec);
    std::string        item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) {
        continue;
      }
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::parse, "cap override without '=': " + item);
      }
      std::string key   = item.substr(0, eq);
      std::string value = item.substr(eq + 1);
      std::size_t parsed = 0;
      try {
        std::size_t used = 0;
        parsed           = std::stoull(value, &used);
        if (used != value.size()) {
          throw std::invalid_argument(value);
        }
      } catch (std::exception const&) {
        throw Error(ErrorKind::parse, "bad cap value for " + key + ": " + value);
      }
      if (key == "clone") {
        base.clone = parsed;
      } else if (key == "tuples") {
        base.tuples = parsed;
      } else if (key == "coordinates") {
        base.coordinates = parsed;
      } else if (key == "hs_members") {
        base.hs_members = parsed;
      } else if (key == "congruences") {
        base.congruences = parsed;
      } else if (key == "table_entries") {
        base.table_entries = parsed;
      } else if (key == "subuniverses") {
        base.subuniverses = parsed;
      } else if (key == "rejection") {
        base.rejection = parsed;
      } else if (key == "work") {
        base.work = parsed;
      } else {
        throw Error(ErrorKind::parse, "unknown cap: " + key);
      }
    }
    return base;
  }

  Caps caps_from_environment(Caps base) {
    char const* env = std::getenv("ALGGRAPH_CAPS");
    if (env == nullptr) {
      return base;
    }
    return parse_caps(env, base);
  }

}  // namespace alggraph
