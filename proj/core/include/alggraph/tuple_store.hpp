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

#ifndef ALGGRAPH_TUPLE_STORE_HPP_
#define ALGGRAPH_TUPLE_STORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "alggraph/types.hpp"

namespace alggraph {

  // Insertion-ordered set of fixed-width tuples with open-addressing lookup.
  class TupleStore {
   public:
    TupleStore() = default;
    explicit TupleStore(std::size_t width);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return count_; }

    std::span<Elem const> operator[](std::size_t i) const {
      return {data_.data() + i * width_, width_};
    }

    std::optional<std::size_t> find(std::span<Elem const> t) const;
    bool contains(std::span<Elem const> t) const { return find(t).has_value(); }

    // Returns (index, inserted).
    std::pair<std::size_t, bool> insert(std::span<Elem const> t);

    std::vector<Elem> const& data() const noexcept { return data_; }

   private:
    std::uint64_t hash(std::span<Elem const> t) const noexcept;
    void          grow();

    std::size_t                width_ = 0;
    std::size_t                count_ = 0;
    std::vector<Elem>          data_;
    std::vector<std::uint32_t> slots_;  // 0 = empty, else index + 1
  };

}  // namespace alggraph

#endif  // ALGGRAPH_TUPLE_STORE_HPP_
