// Copyright 2026 The mbd Authors
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

#ifndef MBD_VALUE_SET_HPP_
#define MBD_VALUE_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mbd {

/// Largest domain a ValueSet can hold.
inline constexpr std::size_t kMaxDomainSize = 64;

/// A subset of one domain, stored as a bitmask over value indices.
/// Iteration and comparison follow domain declaration order.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  constexpr ValueSet(std::initializer_list<std::size_t> indices) {
    for (std::size_t i : indices) insert(i);
  }

  static constexpr ValueSet full(std::size_t domain_size) {
    ValueSet s;
    s.bits_ = domain_size >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << domain_size) - 1;
    return s;
  }
  static constexpr ValueSet single(std::size_t index) {
    ValueSet s;
    s.insert(index);
    return s;
  }
  static constexpr ValueSet from_bits(std::uint64_t bits) {
    ValueSet s;
    s.bits_ = bits;
    return s;
  }

  constexpr void insert(std::size_t index) { bits_ |= std::uint64_t{1} << index; }
  constexpr void erase(std::size_t index) { bits_ &= ~(std::uint64_t{1} << index); }
  constexpr bool contains(std::size_t index) const {
    return index < 64 && ((bits_ >> index) & 1U) != 0;
  }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool is_subset_of(ValueSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ValueSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Index of the lowest member. Undefined on an empty set.
  constexpr std::size_t front() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  constexpr ValueSet operator&(ValueSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ValueSet operator|(ValueSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ValueSet& operator|=(ValueSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ValueSet& operator&=(ValueSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(ValueSet, ValueSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace mbd

#endif  // MBD_VALUE_SET_HPP_
