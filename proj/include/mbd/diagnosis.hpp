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

/// @file diagnosis.hpp
/// Diagnosis along the consistency-based / abductive spectrum.
///
/// A mode assignment F is a diagnosis of (CXT, OBS, OBS+) when MODEL + F +
/// CXT has solutions, the prediction for every observed parameter meets
/// its observation, and the prediction for every parameter in OBS+ lies
/// inside its observation. Both conditions are checked per parameter.
/// With OBS+ empty this is consistency-based diagnosis; with OBS+ = OBS it
/// is abductive diagnosis. On fully predictive models the two coincide.

#ifndef MBD_DIAGNOSIS_HPP_
#define MBD_DIAGNOSIS_HPP_

#include <optional>
#include <vector>

#include "mbd/compiled_model.hpp"
#include "mbd/mode_assignment.hpp"
#include "mbd/prediction.hpp"
#include "mbd/problem.hpp"
#include "mbd/value_set.hpp"

namespace mbd {

struct MatchVerdict {
  bool consistent = false;  // S and O intersect
  bool implies = false;     // S is a subset of O

  friend bool operator==(const MatchVerdict&, const MatchVerdict&) = default;
};

MatchVerdict match(ValueSet prediction, ValueSet observation);

struct Diagnosis {
  ModeAssignment modes;
  /// Empty unless produced by abductive refinement.
  AssumptionSet assumptions;

  std::size_t fault_count() const { return modes.fault_count(); }

  friend bool operator==(const Diagnosis&, const Diagnosis&) = default;
};

enum class CandidateStatus {
  kInconsistent,     // MODEL + F + CXT (+ assumptions) has no solution
  kRefuted,          // some observation gets a disjoint prediction
  kConsistentOnly,   // consistent with OBS, but some OBS+ not implied
  kDiagnosis,        // consistent with OBS and implies OBS+
};

/// Where one candidate stands against a problem.
CandidateStatus evaluate(const DiagnosticProblem& problem,
                         const ModeAssignment& f,
                         const AssumptionSet& assumptions = {});

/// Same, from predictions already computed for the candidate.
CandidateStatus evaluate(const DiagnosticProblem& problem,
                         const std::optional<Predictions>& predictions);

/// All diagnoses with empty assumption sets, ordered by fault count and
/// then by mode_assignments() order. Throws Error on an invalid problem.
std::vector<Diagnosis> diagnose(const DiagnosticProblem& problem);

struct NondeterminismWitness {
  Context cxt;
  ModeAssignment modes;
  ParamIndex parameter = 0;
  ValueSet prediction;
};

struct InconsistencyWitness {
  Context cxt;
  ModeAssignment modes;
};

struct PredictivenessReport {
  bool fully_predictive = true;
  std::vector<NondeterminismWitness> witnesses;
  std::vector<InconsistencyWitness> inconsistent;
};

/// Checks every context x every mode assignment, assumables unbound.
PredictivenessReport check_fully_predictive(const Model& model);

/// Every total binding of the context parameters, first parameter most
/// significant.
std::vector<Context> all_contexts(const Model& model);

struct Property1Counterexample {
  std::vector<ParamIndex> obs_plus_a;
  std::vector<Diagnosis> diagnoses_a;
  std::vector<ParamIndex> obs_plus_b;
  std::vector<Diagnosis> diagnoses_b;
};

struct Property1Result {
  bool holds = true;
  std::optional<Property1Counterexample> counterexample;
};

/// Runs diagnose() for every OBS+ subset of `problem.obs` (problem.obs_plus
/// is ignored) and compares the results. Throws Error if the model is not
/// fully predictive.
Property1Result verify_property1(const DiagnosticProblem& problem);

}  // namespace mbd

#endif  // MBD_DIAGNOSIS_HPP_
