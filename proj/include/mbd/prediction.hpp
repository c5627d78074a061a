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

/// @file prediction.hpp
/// Solutions of MODEL + F + CXT (+ assumption bindings) and their
/// projections onto single parameters.
///
/// The prediction for a parameter is exactly the set of values it takes
/// across all solutions, so it is never empty when a solution exists. An
/// empty solution set is reported as std::nullopt ("inconsistent") rather
/// than as an empty prediction.
///
/// Search runs over parameters in declaration order and values in domain
/// order, so solutions come out lexicographically. Generalized arc
/// consistency at the root and forward checking during search only prune
/// values that occur in no solution; the result is the same set a plain
/// enumeration of the Cartesian product would give.

#ifndef MBD_PREDICTION_HPP_
#define MBD_PREDICTION_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mbd/compiled_model.hpp"
#include "mbd/mode_assignment.hpp"
#include "mbd/problem.hpp"
#include "mbd/value_set.hpp"

namespace mbd {

/// One value per parameter, indexed by ParamIndex. Unbound assumables are
/// ordinary solution variables and appear here too.
using Assignment = std::vector<ValueIndex>;

/// Prediction per parameter, indexed by ParamIndex.
using Predictions = std::vector<ValueSet>;

/// Called once per solution; return false to stop the search.
using SolutionVisitor = std::function<bool(std::span<const ValueIndex>)>;

/// Enumerates solutions in lexicographic order. Throws Error when `f` is not
/// total, `cxt` does not bind exactly the context parameters, or
/// `assumptions` binds a non-assumable parameter.
void for_each_solution(const Model& model, const ModeAssignment& f,
                       const Context& cxt, const AssumptionSet& assumptions,
                       const SolutionVisitor& visit);

std::vector<Assignment> solve(const Model& model, const ModeAssignment& f,
                              const Context& cxt,
                              const AssumptionSet& assumptions = {});

/// nullopt when MODEL + F + CXT + assumptions has no solution.
std::optional<ValueSet> predict(const Model& model, const ModeAssignment& f,
                                const Context& cxt,
                                const AssumptionSet& assumptions, ParamIndex p);

/// All projections from a single search; nullopt when inconsistent.
std::optional<Predictions> predict_all(const Model& model,
                                       const ModeAssignment& f,
                                       const Context& cxt,
                                       const AssumptionSet& assumptions = {});

inline bool is_deterministic(ValueSet prediction) {
  return prediction.size() == 1;
}

}  // namespace mbd

#endif  // MBD_PREDICTION_HPP_
