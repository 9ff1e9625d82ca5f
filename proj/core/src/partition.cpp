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

#include "alggraph/partition.hpp"

#include <limits>
#include <numeric>

#include "alggraph/error.hpp"

namespace alggraph {

  UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  bool UnionFind::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (rank_[x] < rank_[y]) {
      std::swap(x, y);
    }
    parent_[y] = x;
    if (rank_[x] == rank_[y]) {
      ++rank_[x];
    }
    return true;
  }

  Partition::Partition(std::vector<std::size_t> block_id) {
    // Renormalise to first-occurrence order.
    constexpr auto    unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> remap;
    block_id_.resize(block_id.size());
    for (std::size_t i = 0; i < block_id.size(); ++i) {
      std::size_t b = block_id[i];
      if (b >= remap.size()) {
        remap.resize(b + 1, unset);
      }
      if (remap[b] == unset) {
        remap[b] = blocks_++;
      }
      block_id_[i] = remap[b];
    }
  }

  Partition Partition::equality(std::size_t n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return Partition(std::move(ids));
  }

  Partition Partition::full(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  Partition Partition::from_union_find(UnionFind& uf) {
    std::vector<std::size_t> ids(uf.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ids[i] = uf.find(i);
    }
    return Partition(std::move(ids));
  }

  Partition Partition::from_blocks(std::size_t                            n,
                                   std::vector<std::vector<Elem>> const& blocks) {
    constexpr auto           unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> ids(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (Elem x : blocks[b]) {
        if (x >= n || ids[x] != unset) {
          throw Error(ErrorKind::precondition, "blocks do not partition the universe");
        }
        ids[x] = b;
      }
    }
    for (auto id : ids) {
      if (id == unset) {
        throw Error(ErrorKind::precondition, "blocks do not cover the universe");
      }
    }
    return Partition(std::move(ids));
  }

  std::vector<std::vector<Elem>> Partition::blocks() const {
    std::vector<std::vector<Elem>> out(blocks_);
    for (std::size_t i = 0; i < block_id_.size(); ++i) {
      out[block_id_[i]].push_back(static_cast<Elem>(i));
    }
    return out;
  }

  std::vector<Elem> Partition::block_of(Elem x) const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < block_id_.size(); ++i) {
      if (block_id_[i] == block_id_[x]) {
        out.push_back(static_cast<Elem>(i));
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    if (other.size() != size()) {
      return false;
    }
    // Each of our blocks must map into a single block of other.
    std::vector<std::size_t> image(blocks_, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < block_id_.size(); ++i) {
      auto& slot = image[block_id_[i]];
      if (slot == std::numeric_limits<std::size_t>::max()) {
        slot = other.block_id_[i];
      } else if (slot != other.block_id_[i]) {
        return false;
      }
    }
    return true;
  }

  Partition Partition::join(Partition const& other) const {
    UnionFind uf(size());
    std::vector<std::size_t> first_a(blocks_, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> first_b(other.blocks_,
                                     std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < size(); ++i) {
      auto& fa = first_a[block_id_[i]];
      auto& fb = first_b[other.block_id_[i]];
      if (fa == std::numeric_limits<std::size_t>::max()) {
        fa = i;
      } else {
        uf.unite(fa, i);
      }
      if (fb == std::numeric_limits<std::size_t>::max()) {
        fb = i;
      } else {
        uf.unite(fb, i);
      }
    }
    return from_union_find(uf);
  }

  Partition Partition::meet(Partition const& other) const {
    std::vector<std::size_t> ids(size());
    for (std::size_t i = 0; i < size(); ++i) {
      ids[i] = block_id_[i] * (other.blocks_ + 1) + other.block_id_[i];
    }
    return Partition(std::move(ids));
  }

  Tolerance::Tolerance(std::size_t n) : n_(n), bits_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
      bits_[i * n + i] = 1;
    }
  }

  void Tolerance::relate(Elem x, Elem y) {
    bits_[x * n_ + y] = 1;
    bits_[y * n_ + x] = 1;
  }

  Partition Tolerance::closure() const {
    UnionFind uf(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = x + 1; y < n_; ++y) {
        if (bits_[x * n_ + y] != 0) {
          uf.unite(x, y);
        }
      }
    }
    return Partition::from_union_find(uf);
  }

}  // namespace alggraph
