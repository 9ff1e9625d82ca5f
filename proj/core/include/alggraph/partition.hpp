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

#ifndef ALGGRAPH_PARTITION_HPP_
#define ALGGRAPH_PARTITION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "alggraph/types.hpp"

namespace alggraph {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t x);
    // Returns true if x and y were in different sets.
    bool        unite(std::size_t x, std::size_t y);
    std::size_t size() const noexcept { return parent_.size(); }

   private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
  };

  // An equivalence relation on 0..n-1, stored as block ids normalised to
  // first-occurrence order (the first element is in block 0, the next new
  // block is 1, and so on).
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> block_id);

    static Partition equality(std::size_t n);
    static Partition full(std::size_t n);
    static Partition from_union_find(UnionFind& uf);
    static Partition from_blocks(std::size_t                            n,
                                 std::vector<std::vector<Elem>> const& blocks);

    std::size_t size() const noexcept { return block_id_.size(); }
    std::size_t number_of_blocks() const noexcept { return blocks_; }
    std::size_t block(Elem x) const { return block_id_.at(x); }
    bool same(Elem x, Elem y) const { return block_id_.at(x) == block_id_.at(y); }
    std::vector<std::size_t> const& block_ids() const noexcept { return block_id_; }

    std::vector<std::vector<Elem>> blocks() const;
    std::vector<Elem>              block_of(Elem x) const;

    bool is_equality() const noexcept { return blocks_ == block_id_.size(); }
    bool is_full() const noexcept { return blocks_ <= 1; }

    // this ⊆ other as relations.
    bool refines(Partition const& other) const;

    Partition join(Partition const& other) const;
    Partition meet(Partition const& other) const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const& a, Partition const& b) {
      return a.block_id_ <=> b.block_id_;
    }

   private:
    std::vector<std::size_t> block_id_;
    std::size_t              blocks_ = 0;
  };

  // Reflexive, symmetric relation on 0..n-1.
  class Tolerance {
   public:
    Tolerance() = default;
    explicit Tolerance(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool        related(Elem x, Elem y) const { return bits_[x * n_ + y] != 0; }
    void        relate(Elem x, Elem y);

    // Transitive closure.
    Partition closure() const;

    friend bool operator==(Tolerance const&, Tolerance const&) = default;

   private:
    std::size_t       n_ = 0;
    std::vector<char> bits_;
  };

}  // namespace alggraph

#endif  // ALGGRAPH_PARTITION_HPP_
