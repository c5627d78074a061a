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

#ifndef MBD_PROBLEM_HPP_
#define MBD_PROBLEM_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mbd/compiled_model.hpp"
#include "mbd/value_set.hpp"

namespace mbd {

/// Parameter -> value. Used for contexts and for assumption sets.
using Bindings = std::map<ParamIndex, ValueIndex>;
using Context = Bindings;
/// Bindings of assumable parameters; unbound assumables range freely.
using AssumptionSet = Bindings;

/// The admissible values O of an observable parameter.
struct Observation {
  ParamIndex parameter = 0;
  ValueSet values;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct DiagnosticProblem {
  std::shared_ptr<const Model> model;
  Context cxt;
  /// At most one per parameter, in the order given.
  std::vector<Observation> obs;
  /// Observed parameters whose observation must be implied, not merely
  /// matched. Empty gives consistency-based diagnosis; all of obs gives
  /// abductive diagnosis.
  std::vector<ParamIndex> obs_plus;

  const Observation* find_observation(ParamIndex p) const;
  bool in_obs_plus(ParamIndex p) const;
  /// Copy with a different abductive subset.
  DiagnosticProblem with_obs_plus(std::vector<ParamIndex> obs_plus) const;
};

/// Human-readable invariant violations of `problem`; empty means valid.
std::vector<std::string> check_problem(const DiagnosticProblem& problem);

/// Throws Error carrying the first violation, if any.
void require_valid(const DiagnosticProblem& problem);

}  // namespace mbd

#endif  // MBD_PROBLEM_HPP_
