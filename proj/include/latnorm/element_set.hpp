// Copyright 2026 The latnorm Authors
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

#ifndef LATNORM_ELEMENT_SET_HPP
#define LATNORM_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "latnorm/error.hpp"

namespace latnorm {

using ElementId = std::uint32_t;

/// Fixed-length bit vector sized at construction.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  std::optional<std::size_t> first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0)
        return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return std::nullopt;
  }

  /// Highest set index, if any.
  std::optional<std::size_t> last() const noexcept {
    for (std::size_t k = words_.size(); k-- > 0;) {
      if (words_[k] != 0)
        return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    }
    return std::nullopt;
  }

  bool is_subset_of(const DynamicBitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }
  bool intersects(const DynamicBitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  DynamicBitset& operator|=(const DynamicBitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  DynamicBitset& operator&=(const DynamicBitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// Set difference.
  DynamicBitset& operator-=(const DynamicBitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }
  friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
  friend DynamicBitset operator-(DynamicBitset a, const DynamicBitset& b) { return a -= b; }
  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(k * 64 + bit);
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subset of the elements of one particular lattice. Mixing sets that
/// belong to different lattices raises LatticeMismatch.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::uint64_t lattice_id, std::size_t universe)
      : lattice_id_(lattice_id), bits_(universe) {}
  ElementSet(std::uint64_t lattice_id, DynamicBitset bits)
      : lattice_id_(lattice_id), bits_(std::move(bits)) {}

  std::uint64_t lattice_id() const noexcept { return lattice_id_; }
  std::size_t universe() const noexcept { return bits_.size(); }
  const DynamicBitset& bits() const noexcept { return bits_; }

  bool contains(ElementId x) const noexcept {
    return x < bits_.size() && bits_.test(x);
  }
  void insert(ElementId x) {
    check_member(x);
    bits_.set(x);
  }
  void erase(ElementId x) {
    check_member(x);
    bits_.reset(x);
  }

  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  std::vector<ElementId> members() const {
    std::vector<ElementId> out;
    bits_.for_each([&](std::size_t i) { out.push_back(static_cast<ElementId>(i)); });
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    check_same(other);
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator|=(const ElementSet& o) {
    check_same(o);
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    check_same(o);
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    check_same(o);
    bits_ -= o.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.lattice_id_ == b.lattice_id_ && a.bits_ == b.bits_;
  }

 private:
  void check_same(const ElementSet& o) const {
    if (o.lattice_id_ != lattice_id_ || o.bits_.size() != bits_.size())
      throw Error(ErrorKind::LatticeMismatch,
                  "element sets belong to different lattices");
  }
  void check_member(ElementId x) const {
    if (x >= bits_.size())
      throw Error(ErrorKind::InvalidArgument, "element id out of range");
  }

  std::uint64_t lattice_id_ = 0;
  DynamicBitset bits_;
};

}  // namespace latnorm

#endif  // LATNORM_ELEMENT_SET_HPP
