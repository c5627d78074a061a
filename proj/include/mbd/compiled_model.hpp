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

#ifndef MBD_COMPILED_MODEL_HPP_
#define MBD_COMPILED_MODEL_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbd/mode_assignment.hpp"
#include "mbd/model.hpp"
#include "mbd/value_set.hpp"

namespace mbd {

using ParamIndex = std::size_t;
using ValueIndex = std::size_t;

/// A constraint in extensional form over parameter indices. Scope entries
/// may repeat; a tuple is allowed iff its mixed-radix code is set.
class Table {
 public:
  Table(std::vector<ParamIndex> scope, std::vector<std::size_t> sizes);

  const std::vector<ParamIndex>& scope() const { return scope_; }
  std::size_t arity() const { return scope_.size(); }

  void allow(std::span<const ValueIndex> tuple);
  bool allows(std::span<const ValueIndex> tuple) const;
  /// Reads the tuple out of a full assignment indexed by parameter.
  bool allows_assignment(std::span<const ValueIndex> assignment) const;

 private:
  std::size_t code(std::span<const ValueIndex> tuple) const;

  std::vector<ParamIndex> scope_;
  std::vector<std::size_t> strides_;
  std::vector<bool> allowed_;
};

class ModelError : public Error {
 public:
  explicit ModelError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A validated SystemModel with every name resolved to an index and every
/// constraint compiled to a Table. Immutable once built; safe to share.
class Model {
 public:
  /// Throws ModelError listing the violations if `model` is invalid.
  explicit Model(SystemModel model);

  static std::shared_ptr<const Model> compile(SystemModel model) {
    return std::make_shared<const Model>(std::move(model));
  }

  const SystemModel& description() const { return model_; }

  std::size_t parameter_count() const { return model_.parameters.size(); }
  const Parameter& parameter(ParamIndex p) const { return model_.parameters[p]; }
  const Domain& domain(ParamIndex p) const {
    return model_.domains[param_domain_[p]];
  }
  std::size_t domain_size(ParamIndex p) const { return domain(p).values.size(); }
  Role role(ParamIndex p) const { return model_.parameters[p].role; }
  const std::string& value_name(ParamIndex p, ValueIndex v) const {
    return domain(p).values[v];
  }

  std::optional<ParamIndex> find_parameter(std::string_view name) const;
  /// Accepts the Sign aliases "-", "0", "+".
  std::optional<ValueIndex> find_value(ParamIndex p,
                                       std::string_view value) const;

  /// Parameters with `role`, in declaration order.
  const std::vector<ParamIndex>& parameters_with(Role role) const;

  std::size_t component_count() const { return model_.components.size(); }
  const Component& component(std::size_t c) const {
    return model_.components[c];
  }
  std::optional<std::size_t> find_component(std::string_view name) const;
  std::optional<std::size_t> find_mode(std::size_t component,
                                       std::string_view mode) const;

  const std::vector<Table>& structural() const { return structural_; }
  const std::vector<Table>& mode_constraints(std::size_t component,
                                             std::size_t mode) const {
    return modes_[component][mode];
  }

  ModeAssignmentRange mode_assignments() const {
    return mbd::mode_assignments(model_);
  }
  /// Throws Error unless `f` assigns a declared mode to every component.
  void check_total(const ModeAssignment& f) const;

  /// Builds a mode assignment from component=mode names; throws Error on
  /// unknown names or a missing component.
  ModeAssignment assignment(
      const std::vector<std::pair<std::string, std::string>>& modes) const;

  /// "a1=stuck0 b1=ok".
  std::string format(const ModeAssignment& f) const;
  /// "{zero,low}" in domain order.
  std::string format(ParamIndex p, ValueSet values) const;

 private:
  Table to_table(const Constraint& c) const;

  SystemModel model_;
  std::vector<std::size_t> param_domain_;
  std::vector<std::vector<ParamIndex>> by_role_;
  std::vector<Table> structural_;
  std::vector<std::vector<std::vector<Table>>> modes_;
};

}  // namespace mbd

#endif  // MBD_COMPILED_MODEL_HPP_
