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

#include "mbd/problem.hpp"

#include <algorithm>
#include <set>

namespace mbd {

const Observation* DiagnosticProblem::find_observation(ParamIndex p) const {
  auto it = std::find_if(obs.begin(), obs.end(),
                         [p](const Observation& o) { return o.parameter == p; });
  return it == obs.end() ? nullptr : &*it;
}

bool DiagnosticProblem::in_obs_plus(ParamIndex p) const {
  return std::find(obs_plus.begin(), obs_plus.end(), p) != obs_plus.end();
}

DiagnosticProblem DiagnosticProblem::with_obs_plus(
    std::vector<ParamIndex> plus) const {
  DiagnosticProblem copy = *this;
  copy.obs_plus = std::move(plus);
  return copy;
}

std::vector<std::string> check_problem(const DiagnosticProblem& problem) {
  std::vector<std::string> out;
  if (!problem.model) return {"problem has no model"};
  const Model& m = *problem.model;
  auto name = [&](ParamIndex p) -> std::string {
    return p < m.parameter_count() ? "'" + m.parameter(p).name + "'"
                                   : "#" + std::to_string(p);
  };

  for (const auto& [p, v] : problem.cxt) {
    if (p >= m.parameter_count()) {
      out.push_back("context binds unknown parameter " + name(p));
    } else if (m.role(p) != Role::kContext) {
      out.push_back("context binds " + name(p) + ", which is not a context parameter");
    } else if (v >= m.domain_size(p)) {
      out.push_back("context value out of domain for " + name(p));
    }
  }
  for (ParamIndex p : m.parameters_with(Role::kContext)) {
    if (!problem.cxt.contains(p)) {
      out.push_back("context parameter " + name(p) + " is not bound");
    }
  }

  std::set<ParamIndex> observed;
  for (const Observation& o : problem.obs) {
    if (o.parameter >= m.parameter_count()) {
      out.push_back("observation of unknown parameter " + name(o.parameter));
      continue;
    }
    if (m.role(o.parameter) != Role::kObservable) {
      out.push_back(name(o.parameter) + " is not observable");
    }
    if (o.values.empty()) {
      out.push_back("empty observation for " + name(o.parameter));
    } else if (!o.values.is_subset_of(ValueSet::full(m.domain_size(o.parameter)))) {
      out.push_back("observation outside the domain of " + name(o.parameter));
    }
    if (!observed.insert(o.parameter).second) {
      out.push_back(name(o.parameter) + " observed more than once");
    }
  }
  for (ParamIndex p : problem.obs_plus) {
    if (!observed.contains(p)) {
      out.push_back("explained parameter " + name(p) + " is not observed");
    }
  }
  return out;
}

void require_valid(const DiagnosticProblem& problem) {
  if (auto errors = check_problem(problem); !errors.empty()) {
    throw Error("invalid problem: " + errors.front());
  }
}

}  // namespace mbd
