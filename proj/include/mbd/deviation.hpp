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

/// @file deviation.hpp
/// Qualitative deviation models and least-presumptive explanations.
///
/// A base equation `x = y - z` becomes a constraint on the signs of the
/// deviations: d_x in [d_y] (-) [d_z]. The operator is ambiguous on
/// opposite signs, so each binary step carries an assumable magnitude
/// comparison that, once bound, makes the result unique. explain() searches
/// for the fewest such bindings under which a candidate implies OBS+.

#ifndef MBD_DEVIATION_HPP_
#define MBD_DEVIATION_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbd/compiled_model.hpp"
#include "mbd/dsl.hpp"
#include "mbd/model.hpp"
#include "mbd/problem.hpp"
#include "mbd/sign_algebra.hpp"

namespace mbd {

struct Term {
  bool negative = false;
  std::string variable;

  friend bool operator==(const Term&, const Term&) = default;
};

/// lhs = +/- v1 +/- v2 ...; `derivative` marks d/dt on the left.
struct BaseEquation {
  std::string lhs;
  bool derivative = false;
  std::vector<Term> rhs;

  friend bool operator==(const BaseEquation&, const BaseEquation&) = default;
};

/// Parses a .deq file: one equation per line, e.g. `d/dt level = in - out`.
/// Blank lines and `#` comments are ignored.
ParseResult<std::vector<BaseEquation>> parse_equations(
    std::string_view text, std::string file = "<input>");

/// Parameters plus always-active constraints, ready to be merged with
/// hand-written components.
struct DeviationFragment {
  std::vector<Parameter> parameters;
  std::vector<Constraint> constraints;

  /// `param` lines followed by one `always` block.
  std::string to_text() const;
  /// Appends to `model`; throws Error on a parameter name clash.
  void merge_into(SystemModel& model) const;
};

/// Deviation parameter names: d_<var>, or dd_<var> under d/dt.
std::string deviation_name(std::string_view variable, bool derivative = false);

/// Role overrides for deviation parameters, keyed by variable name (the
/// derivative parameter of `x` is keyed "d/dt x").
using RoleOverrides = std::map<std::string, Role>;

/// Compiles base equations in order. Left-hand deviations are observable
/// and all others internal unless overridden; fold intermediates are named
/// t1, t2, ... and magnitude assumables m1, m2, ... Throws Error on an empty
/// right-hand side, a variable repeated on a right-hand side, or a
/// variable defined by two equations.
DeviationFragment compile_deviations(const std::vector<BaseEquation>& equations,
                                     const RoleOverrides& roles = {});

/// A bound magnitude assumable read back as a comparison |a| ? |b|.
struct MagnitudeAssumption {
  std::string a;
  std::string b;
  Magnitude comparison = Magnitude::kEq;

  /// "|d_in| < |d_out|".
  std::string to_string() const;
};

/// nullopt unless `p` is the `via` parameter of some sign constraint.
std::optional<MagnitudeAssumption> magnitude_assumption(const Model& model,
                                                        ParamIndex p,
                                                        ValueIndex v);

struct Explanation {
  ModeAssignment modes;
  AssumptionSet assumptions;
  /// The OBS+ parameters implied under `assumptions`.
  std::vector<ParamIndex> covered_obs_plus;
};

/// Subset-minimal assumption sets under which `f` implies every OBS+
/// observation and stays consistent with OBS. Candidates are tried by
/// increasing size, assumables ordered by name and values by domain
/// order. Returns [{}] when `f` already implies OBS+, and [] when nothing
/// works. Throws Error unless `f` is consistent with OBS.
std::vector<Explanation> explain(const DiagnosticProblem& problem,
                                 const ModeAssignment& f);

}  // namespace mbd

#endif  // MBD_DEVIATION_HPP_
