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

#ifndef ALGGRAPH_TYPES_HPP_
#define ALGGRAPH_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace alggraph {

  // Elements of a finite universe are 0..n-1.
  using Elem = std::uint32_t;

  // A subset of 0..n-1, stored as a bitset.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Elem> members)
        : ElementSet(universe) {
      for (Elem x : members) {
        insert(x);
      }
    }

    static ElementSet full(std::size_t universe) {
      ElementSet s(universe);
      for (std::size_t x = 0; x < universe; ++x) {
        s.insert(static_cast<Elem>(x));
      }
      return s;
    }

    static ElementSet from(std::size_t universe, std::vector<Elem> const& xs) {
      ElementSet s(universe);
      for (Elem x : xs) {
        s.insert(x);
      }
      return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Elem x) const noexcept {
      return x < universe_ && ((words_[x / 64] >> (x % 64)) & 1U) != 0;
    }

    // Returns true if x was not already present.
    bool insert(Elem x) {
      std::uint64_t& w   = words_[x / 64];
      std::uint64_t  bit = std::uint64_t{1} << (x % 64);
      bool           was = (w & bit) != 0;
      w |= bit;
      return !was;
    }

    void erase(Elem x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(__builtin_popcountll(w));
      }
      return c;
    }

    bool empty() const noexcept { return count() == 0; }

    std::vector<Elem> members() const {
      std::vector<Elem> out;
      for (std::size_t x = 0; x < universe_; ++x) {
        if (contains(static_cast<Elem>(x))) {
          out.push_back(static_cast<Elem>(x));
        }
      }
      return out;
    }

    bool is_subset_of(ElementSet const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
        if ((words_[i] & ~o) != 0) {
          return false;
        }
      }
      return true;
    }

    ElementSet& operator|=(ElementSet const& other) {
      for (std::size_t i = 0; i < words_.size() && i < other.words_.size();
           ++i) {
        words_[i] |= other.words_[i];
      }
      return *this;
    }

    ElementSet& operator&=(ElementSet const& other) {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
      }
      return *this;
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;
    friend auto operator<=>(ElementSet const& a, ElementSet const& b) {
      return a.words_ <=> b.words_;
    }

   private:
    std::size_t                universe_ = 0;
    std::vector<std::uint64_t> words_;
  };

}  // namespace alggraph

#endif  // ALGGRAPH_TYPES_HPP_
