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

#include "mbd/mode_assignment.hpp"

#include <algorithm>

namespace mbd {

std::size_t ModeAssignment::fault_count() const {
  return static_cast<std::size_t>(
      std::count_if(modes_.begin(), modes_.end(),
                    [](std::size_t m) { return m != 0; }));
}

ModeAssignmentRange::iterator::iterator(const std::vector<std::size_t>* counts,
                                        bool done)
    : counts_(counts), done_(done) {
  if (!done_) {
    current_ = ModeAssignment(std::vector<std::size_t>(counts_->size(), 0));
  }
}

ModeAssignmentRange::iterator& ModeAssignmentRange::iterator::operator++() {
  std::vector<std::size_t> modes = current_.modes();
  std::size_t i = modes.size();
  while (i > 0) {
    --i;
    if (++modes[i] < (*counts_)[i]) {
      current_ = ModeAssignment(std::move(modes));
      return *this;
    }
    modes[i] = 0;
  }
  done_ = true;
  current_ = ModeAssignment();
  return *this;
}

ModeAssignmentRange::iterator ModeAssignmentRange::begin() const {
  bool empty = std::any_of(counts_.begin(), counts_.end(),
                           [](std::size_t n) { return n == 0; });
  return iterator(&counts_, empty);
}

std::size_t ModeAssignmentRange::size() const {
  std::size_t n = 1;
  for (std::size_t c : counts_) n *= c;
  return n;
}

ModeAssignmentRange mode_assignments(const SystemModel& model) {
  std::vector<std::size_t> counts;
  counts.reserve(model.components.size());
  for (const Component& c : model.components) counts.push_back(c.modes.size());
  return ModeAssignmentRange(std::move(counts));
}

}  // namespace mbd
