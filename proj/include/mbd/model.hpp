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

/// @file model.hpp
/// Declarative description of a system: value domains, parameters,
/// components with mutually exclusive behavioral modes, and the
/// constraints attached to them.
///
/// Everything here refers to other declarations by name. A SystemModel is
/// plain data and may be ill-formed; validate_model() reports every
/// problem, and Model (compiled_model.hpp) is the checked, indexed form the
/// engines run on.

#ifndef MBD_MODEL_HPP_
#define MBD_MODEL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kSignDomain = "Sign";
inline constexpr std::string_view kMagnitudeDomain = "Magnitude";

struct Domain {
  std::string name;
  std::vector<std::string> values;
  bool builtin = false;

  /// Position of `value` in the declaration order, if present.
  std::optional<std::size_t> index_of(std::string_view value) const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

/// Sign = {minus, zero, plus}; Magnitude = {lt, eq, gt}.
std::vector<Domain> builtin_domains();

/// Maps the input aliases "-", "0", "+" to the canonical Sign value names
/// when `domain` is Sign; returns `value` unchanged otherwise.
std::string_view canonical_value(std::string_view domain,
                                 std::string_view value);

enum class Role { kInternal, kContext, kObservable, kAssumable };

std::string_view role_name(Role role);

struct Parameter {
  std::string name;
  std::string domain;
  Role role = Role::kInternal;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

enum class ConstraintKind {
  kRelation,         // rel(p1, ..., pn) in { tuples }
  kEqualsConstant,   // p == value
  kEqualsParameter,  // p == q
  kSignSum,          // c in [a] (+) [b]
  kSignSub,          // c in [a] (-) [b]
};

struct Constraint {
  ConstraintKind kind = ConstraintKind::kRelation;
  std::vector<std::string> scope;
  /// Allowed tuples, kRelation only.
  std::vector<std::vector<std::string>> tuples;
  /// Right-hand value, kEqualsConstant only.
  std::string constant;
  /// Assumable over Magnitude comparing |a| with |b|; sign constraints only.
  std::optional<std::string> magnitude;

  static Constraint relation(std::vector<std::string> scope,
                             std::vector<std::vector<std::string>> tuples);
  static Constraint equals(std::string param, std::string value);
  static Constraint same(std::string lhs, std::string rhs);
  static Constraint sign_sum(std::string a, std::string b, std::string c,
                             std::optional<std::string> magnitude = {});
  static Constraint sign_sub(std::string a, std::string b, std::string c,
                             std::optional<std::string> magnitude = {});

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Mode {
  std::string name;
  std::vector<Constraint> constraints;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// The first declared mode is conventionally the nominal one; every other
/// mode counts as a fault.
struct Component {
  std::string name;
  std::vector<Mode> modes;

  friend bool operator==(const Component&, const Component&) = default;
};

struct SystemModel {
  std::vector<Domain> domains = builtin_domains();
  std::vector<Parameter> parameters;
  std::vector<Component> components;
  /// Mode-independent constraints, always active.
  std::vector<Constraint> structural;

  const Domain* find_domain(std::string_view name) const;
  const Parameter* find_parameter(std::string_view name) const;
  const Component* find_component(std::string_view name) const;

  friend bool operator==(const SystemModel&, const SystemModel&) = default;
};

enum class ViolationKind {
  kDuplicateDomain,
  kDuplicateValue,
  kEmptyDomain,
  kDomainTooLarge,
  kDuplicateParameter,
  kUndeclaredDomain,
  kNoComponents,
  kDuplicateComponent,
  kNoModes,
  kDuplicateMode,
  kUndeclaredParameter,
  kArityMismatch,
  kValueNotInDomain,
  kDomainMismatch,
  kAmbiguousValue,
  kBadMagnitude,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// e.g. "component a1, mode ok", "always", "param x", "domain Bit".
  std::string location;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Returns every invariant violation of `model`; empty means valid.
std::vector<Violation> validate_model(const SystemModel& model);

}  // namespace mbd

#endif  // MBD_MODEL_HPP_
