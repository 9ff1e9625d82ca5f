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

#include "alggraph/tuple_store.hpp"

#include <algorithm>
#include <bit>

namespace alggraph {

  TupleStore::TupleStore(std::size_t width) : width_(width), slots_(64, 0) {}

  std::uint64_t TupleStore::hash(std::span<Elem const> t) const noexcept {
    // Four independent multiply lanes, folded and avalanched at the end.
    constexpr std::uint64_t k = 0x9e3779b97f4a7c15ULL;
    std::uint64_t           lane[4] = {1, 2, 3, 4};
    std::size_t             i       = 0;
    for (; i + 4 <= t.size(); i += 4) {
      for (std::size_t j = 0; j < 4; ++j) {
        lane[j] = (lane[j] ^ t[i + j]) * k;
      }
    }
    for (; i < t.size(); ++i) {
      lane[i % 4] = (lane[i % 4] ^ t[i]) * k;
    }
    std::uint64_t h = lane[0] ^ std::rotl(lane[1], 17) ^ std::rotl(lane[2], 31) ^ std::rotl(lane[3], 47);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  }

  std::optional<std::size_t> TupleStore::find(std::span<Elem const> t) const {
    if (slots_.empty()) {
      return std::nullopt;
    }
    std::size_t mask = slots_.size() - 1;
    std::size_t pos  = hash(t) & mask;
    while (true) {
      std::uint32_t s = slots_[pos];
      if (s == 0) {
        return std::nullopt;
      }
      std::size_t i = s - 1;
      if (std::equal(t.begin(), t.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * width_))) {
        return i;
      }
      pos = (pos + 1) & mask;
    }
  }

  std::pair<std::size_t, bool> TupleStore::insert(std::span<Elem const> t) {
    if (slots_.empty()) {
      slots_.assign(64, 0);
    }
    if ((count_ + 1) * 2 > slots_.size()) {
      grow();
    }
    std::size_t mask = slots_.size() - 1;
    std::size_t pos  = hash(t) & mask;
    while (true) {
      std::uint32_t s = slots_[pos];
      if (s == 0) {
        break;
      }
      std::size_t i = s - 1;
      if (std::equal(t.begin(), t.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * width_))) {
        return {i, false};
      }
      pos = (pos + 1) & mask;
    }
    data_.insert(data_.end(), t.begin(), t.end());
    slots_[pos] = static_cast<std::uint32_t>(count_ + 1);
    return {count_++, true};
  }

  void TupleStore::grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
    std::size_t                mask = fresh.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t pos = hash((*this)[i]) & mask;
      while (fresh[pos] != 0) {
        pos = (pos + 1) & mask;
      }
      fresh[pos] = static_cast<std::uint32_t>(i + 1);
    }
    slots_ = std::move(fresh);
  }

}  // namespace alggraph
