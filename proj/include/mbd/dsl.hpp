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

/// @file dsl.hpp
/// Text formats for models (.mbd) and diagnostic problems (.dxp).
///
///   domain Bit = { 0, 1 }
///   param in1 : Bit context
///   param out : Bit observable
///   component a1 {
///     mode ok { rel(in1, in2, out) in { (0,0,0), (0,1,0), (1,0,0), (1,1,1) } }
///     mode stuck0 { out == 0 }
///   }
///   always { signsub(d_in, d_out, dd_level) via m1 }
///
///   cxt in1=1 in2=1; obs out={0}; explain out;
///
/// `#` starts a comment. Constraints inside a block may be separated by
/// `;`. The Sign and Magnitude domains are builtin; Sign values may be
/// written `-`, `0`, `+`. A `via m` whose m is never declared declares m
/// as an assumable Magnitude parameter.

#ifndef MBD_DSL_HPP_
#define MBD_DSL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbd/compiled_model.hpp"
#include "mbd/model.hpp"
#include "mbd/problem.hpp"

namespace mbd {

struct SourceSpan {
  std::string file;
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ParseError {
  SourceSpan span;
  std::string message;
  /// Token kinds or keywords that would have been accepted, if known.
  std::vector<std::string> expected;

  /// "file:line:col: message".
  std::string to_string() const;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseError> errors;

  bool ok() const { return value.has_value(); }
};

/// Syntax only: a successful result may still fail validate_model().
ParseResult<SystemModel> parse_model(std::string_view text,
                                     std::string file = "<input>");

/// Reports syntax errors and semantic errors (unknown parameter, value
/// outside the domain, role mismatch, explain of an unobserved parameter,
/// unbound context parameter) with locations.
ParseResult<DiagnosticProblem> parse_problem(
    std::string_view text, std::shared_ptr<const Model> model,
    std::string file = "<input>");

/// Canonical text: domains, parameters, components, then one `always`
/// block. Builtin domains are not written out.
std::string serialize_model(const SystemModel& model);

std::string serialize_constraint(const Constraint& c);

}  // namespace mbd

#endif  // MBD_DSL_HPP_
