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

#include "mbd/diagnosis.hpp"

#include <algorithm>

namespace mbd {

MatchVerdict match(ValueSet prediction, ValueSet observation) {
  return {prediction.intersects(observation),
          prediction.is_subset_of(observation)};
}

CandidateStatus evaluate(const DiagnosticProblem& problem,
                         const std::optional<Predictions>& predictions) {
  if (!predictions) return CandidateStatus::kInconsistent;
  bool implied = true;
  for (const Observation& o : problem.obs) {
    const MatchVerdict v = match((*predictions)[o.parameter], o.values);
    if (!v.consistent) return CandidateStatus::kRefuted;
    if (!v.implies && problem.in_obs_plus(o.parameter)) implied = false;
  }
  return implied ? CandidateStatus::kDiagnosis
                 : CandidateStatus::kConsistentOnly;
}

CandidateStatus evaluate(const DiagnosticProblem& problem,
                         const ModeAssignment& f,
                         const AssumptionSet& assumptions) {
  return evaluate(problem,
                  predict_all(*problem.model, f, problem.cxt, assumptions));
}

std::vector<Diagnosis> diagnose(const DiagnosticProblem& problem) {
  require_valid(problem);
  std::vector<Diagnosis> out;
  for (const ModeAssignment& f : problem.model->mode_assignments()) {
    if (evaluate(problem, f) == CandidateStatus::kDiagnosis) {
      out.push_back({f, {}});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Diagnosis& a, const Diagnosis& b) {
                     return a.fault_count() < b.fault_count();
                   });
  return out;
}

std::vector<Context> all_contexts(const Model& model) {
  const auto& params = model.parameters_with(Role::kContext);
  std::vector<Context> out;
  std::vector<ValueIndex> digit(params.size(), 0);
  bool more = true;
  while (more) {
    Context cxt;
    for (std::size_t i = 0; i < params.size(); ++i) cxt[params[i]] = digit[i];
    out.push_back(std::move(cxt));
    more = false;
    for (std::size_t i = params.size(); i-- > 0;) {
      if (++digit[i] < model.domain_size(params[i])) {
        more = true;
        break;
      }
      digit[i] = 0;
    }
  }
  return out;
}

PredictivenessReport check_fully_predictive(const Model& model) {
  PredictivenessReport report;
  const auto& observable = model.parameters_with(Role::kObservable);
  for (const Context& cxt : all_contexts(model)) {
    for (const ModeAssignment& f : model.mode_assignments()) {
      auto predictions = predict_all(model, f, cxt);
      if (!predictions) {
        report.inconsistent.push_back({cxt, f});
        continue;
      }
      for (ParamIndex p : observable) {
        if (!is_deterministic((*predictions)[p])) {
          report.witnesses.push_back({cxt, f, p, (*predictions)[p]});
        }
      }
    }
  }
  report.fully_predictive =
      report.witnesses.empty() && report.inconsistent.empty();
  return report;
}

Property1Result verify_property1(const DiagnosticProblem& problem) {
  require_valid(problem);
  if (!check_fully_predictive(*problem.model).fully_predictive) {
    throw Error("model not fully predictive");
  }
  const std::size_t n = problem.obs.size();
  auto subset = [&](std::size_t mask) {
    std::vector<ParamIndex> plus;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) plus.push_back(problem.obs[i].parameter);
    }
    return plus;
  };

  const std::vector<ParamIndex> base_plus = subset(0);
  const std::vector<Diagnosis> base = diagnose(problem.with_obs_plus(base_plus));
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<ParamIndex> plus = subset(mask);
    std::vector<Diagnosis> result = diagnose(problem.with_obs_plus(plus));
    if (result != base) {
      return {false, Property1Counterexample{base_plus, base, std::move(plus),
                                             std::move(result)}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace mbd
