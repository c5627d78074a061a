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

#ifndef MBD_MODE_ASSIGNMENT_HPP_
#define MBD_MODE_ASSIGNMENT_HPP_

#include <compare>
#include <cstddef>
#include <iterator>
#include <vector>

#include "mbd/model.hpp"

namespace mbd {

/// One behavioral mode per component, by declaration index. Total by
/// construction when produced by mode_assignments().
class ModeAssignment {
 public:
  ModeAssignment() = default;
  explicit ModeAssignment(std::vector<std::size_t> modes)
      : modes_(std::move(modes)) {}

  std::size_t size() const { return modes_.size(); }
  std::size_t operator[](std::size_t component) const {
    return modes_[component];
  }
  const std::vector<std::size_t>& modes() const { return modes_; }

  /// Components not in their first declared mode.
  std::size_t fault_count() const;

  friend bool operator==(const ModeAssignment&,
                         const ModeAssignment&) = default;
  friend auto operator<=>(const ModeAssignment&,
                          const ModeAssignment&) = default;

 private:
  std::vector<std::size_t> modes_;
};

/// Lazy odometer over all mode assignments. The first component is the
/// most significant digit and modes advance in declaration order, so the
/// sequence is lexicographic.
class ModeAssignmentRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ModeAssignment;
    using difference_type = std::ptrdiff_t;
    using pointer = const ModeAssignment*;
    using reference = const ModeAssignment&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class ModeAssignmentRange;
    iterator(const std::vector<std::size_t>* counts, bool done);

    const std::vector<std::size_t>* counts_ = nullptr;
    ModeAssignment current_;
    bool done_ = true;
  };

  explicit ModeAssignmentRange(std::vector<std::size_t> mode_counts)
      : counts_(std::move(mode_counts)) {}

  iterator begin() const;
  iterator end() const { return iterator(&counts_, true); }

  /// Product of the per-component mode counts.
  std::size_t size() const;

 private:
  std::vector<std::size_t> counts_;
};

ModeAssignmentRange mode_assignments(const SystemModel& model);

}  // namespace mbd

#endif  // MBD_MODE_ASSIGNMENT_HPP_
