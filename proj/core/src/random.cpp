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

#include "alggraph/random.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "alggraph/edges.hpp"
#include "alggraph/error.hpp"
#include "alggraph/term_context.hpp"

namespace alggraph {

  namespace {

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       in(s);
      while (std::getline(in, cur, sep)) {
        out.push_back(cur);
      }
      return out;
    }

    std::size_t number(std::string const& s, std::string const& key) {
      std::size_t v   = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw Error(ErrorKind::parse, "bad number \"" + s + "\" for " + key);
      }
      return v;
    }

    // "3" or "2..4".
    std::pair<std::size_t, std::size_t> range(std::string const& s, std::string const& key) {
      auto dots = s.find("..");
      if (dots == std::string::npos) {
        auto v = number(s, key);
        return {v, v};
      }
      auto lo = number(s.substr(0, dots), key), hi = number(s.substr(dots + 2), key);
      if (lo > hi) {
        throw Error(ErrorKind::precondition, "empty range for " + key);
      }
      return {lo, hi};
    }

    std::string range_text(std::size_t lo, std::size_t hi) {
      return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
    }

  }  // namespace

  std::string RandomSpec::to_string() const {
    std::string out = "size=" + range_text(min_size, max_size) + ",ops=";
    for (std::size_t i = 0; i < arities.size(); ++i) {
      out += (i ? "+" : "") + std::to_string(arities[i]);
    }
    std::vector<std::string> filters;
    if (smooth) {
      filters.emplace_back("smooth");
    }
    if (omits_type1) {
      filters.emplace_back("omits1");
    }
    if (exact) {
      filters.emplace_back("exact");
    }
    if (subdirect) {
      filters.emplace_back("subdirect");
    }
    if (!filters.empty()) {
      out += ",filter=";
      for (std::size_t i = 0; i < filters.size(); ++i) {
        out += (i ? "+" : "") + filters[i];
      }
    }
    out += ",rel-arity=" + range_text(min_rel_arity, max_rel_arity);
    out += ",gens=" + range_text(min_generators, max_generators);
    return out;
  }

  RandomSpec parse_random_spec(std::string const& text) {
    RandomSpec spec;
    for (auto const& item : split(text, ',')) {
      if (item.empty()) {
        continue;
      }
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::parse, "expected key=value, got \"" + item + "\"");
      }
      auto key = item.substr(0, eq), value = item.substr(eq + 1);
      if (key == "size") {
        std::tie(spec.min_size, spec.max_size) = range(value, key);
        if (spec.min_size < 1) {
          throw Error(ErrorKind::precondition, "size must be positive");
        }
      } else if (key == "ops") {
        spec.arities.clear();
        for (auto const& a : split(value, '+')) {
          auto k = number(a, key);
          if (k < 1) {
            throw Error(ErrorKind::precondition, "operation arity must be positive");
          }
          spec.arities.push_back(k);
        }
        if (spec.arities.empty()) {
          throw Error(ErrorKind::precondition, "no operations");
        }
      } else if (key == "filter") {
        for (auto const& f : split(value, '+')) {
          if (f == "smooth") {
            spec.smooth = true;
          } else if (f == "omits1") {
            spec.omits_type1 = true;
          } else if (f == "exact") {
            spec.exact = true;
          } else if (f == "subdirect") {
            spec.subdirect = true;
          } else if (f != "idempotent") {
            throw Error(ErrorKind::parse, "unknown filter \"" + f + "\"");
          }
        }
      } else if (key == "rel-arity") {
        std::tie(spec.min_rel_arity, spec.max_rel_arity) = range(value, key);
        if (spec.min_rel_arity < 1) {
          throw Error(ErrorKind::precondition, "relation arity must be positive");
        }
      } else if (key == "gens") {
        std::tie(spec.min_generators, spec.max_generators) = range(value, key);
        if (spec.min_generators < 1) {
          throw Error(ErrorKind::precondition, "at least one generator is needed");
        }
      } else {
        throw Error(ErrorKind::parse, "unknown key \"" + key + "\"");
      }
    }
    return spec;
  }

  std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) {
      throw Error(ErrorKind::precondition, "empty draw");
    }
    // Reject the top partial block so every residue is equally likely.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                          - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  FiniteAlgebra random_algebra(RandomSource& rng, std::size_t size,
                               std::vector<std::size_t> const& arities, std::string name) {
    std::vector<OpTable> ops;
    for (std::size_t o = 0; o < arities.size(); ++o) {
      std::string op_name = o < 3 ? std::string(1, "fgh"[o]) : "f" + std::to_string(o);
      OpTable     op{op_name, arities[o], {}};
      std::size_t cells = checked_power(size, arities[o], std::size_t{1} << 24);
      for (std::size_t i = 0; i < cells; ++i) {
        auto point    = table_point(size, arities[o], i);
        bool diagonal = std::all_of(point.begin(), point.end(),
                                    [&](Elem v) { return v == point[0]; });
        op.table.push_back(diagonal ? point[0] : static_cast<Elem>(rng.below(size)));
      }
      ops.push_back(std::move(op));
    }
    return FiniteAlgebra(std::move(name), size, std::move(ops));
  }

  InstanceStream::InstanceStream(RandomSpec spec, std::uint64_t seed, Caps caps)
      : spec_(std::move(spec)), caps_(caps), rng_(seed) {}

  FiniteAlgebra InstanceStream::next_algebra() {
    for (std::size_t rejected = 0;; ++rejected) {
      if (rejected >= caps_.rejection) {
        std::ostringstream msg;
        msg << "accepted " << accepted_ << " of " << drawn_ << " draws (rate "
            << (drawn_ ? static_cast<double>(accepted_) / static_cast<double>(drawn_) : 0.0)
            << ") for " << spec_.to_string();
        throw Error(ErrorKind::filter_starvation, msg.str());
      }
      std::size_t n = rng_.between(spec_.min_size, spec_.max_size);
      ++drawn_;
      auto a = random_algebra(rng_, n, spec_.arities, "random-" + std::to_string(drawn_));
      try {
        if (spec_.smooth || spec_.omits_type1) {
          auto edges = edge_graph(a, caps_);
          if (spec_.omits_type1 && !omits_type1(edges)) {
            continue;
          }
          if (spec_.smooth && !is_smooth(a, edges).smooth) {
            continue;
          }
        }
        if (spec_.exact && !ClassContext({a}, caps_).complete()) {
          continue;
        }
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::cap_exceeded) {
          continue;
        }
        throw;
      }
      ++accepted_;
      return a;
    }
  }

  Subpower InstanceStream::next_relation(std::vector<FiniteAlgebra> const& pool) {
    if (pool.empty()) {
      throw Error(ErrorKind::precondition, "no factors to draw from");
    }
    for (std::size_t rejected = 0; rejected < caps_.rejection; ++rejected) {
      std::size_t                n = rng_.between(spec_.min_rel_arity, spec_.max_rel_arity);
      std::vector<FiniteAlgebra> factors;
      for (std::size_t i = 0; i < n; ++i) {
        factors.push_back(pool[rng_.below(pool.size())]);
      }
      std::size_t                    g = rng_.between(spec_.min_generators, spec_.max_generators);
      std::vector<std::vector<Elem>> gens(g, std::vector<Elem>(n));
      for (auto& t : gens) {
        for (std::size_t i = 0; i < n; ++i) {
          t[i] = static_cast<Elem>(rng_.below(factors[i].size()));
        }
      }
      GenerateOptions options;
      options.cap  = caps_.tuples;
      options.work = caps_.work;
      auto r       = subpower_generate(std::move(factors), gens, options);
      if (spec_.subdirect && !r.is_subdirect()) {
        continue;
      }
      return r;
    }
    throw Error(ErrorKind::filter_starvation,
                "no subdirect relation within the rejection budget for " + spec_.to_string());
  }

  std::vector<std::size_t> InstanceStream::next_coordinates(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::precondition, "no coordinates");
    }
    std::uint64_t mask = 1 + rng_.below((std::uint64_t{1} << n) - 1);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        out.push_back(i);
      }
    }
    return out;
  }

}  // namespace alggraph
