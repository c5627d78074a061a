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

#include "mbd/compiled_model.hpp"

#include <algorithm>
#include <array>

#include "mbd/sign_algebra.hpp"

namespace mbd {

Table::Table(std::vector<ParamIndex> scope, std::vector<std::size_t> sizes)
    : scope_(std::move(scope)), strides_(sizes.size()) {
  std::size_t total = 1;
  for (std::size_t i = sizes.size(); i-- > 0;) {
    strides_[i] = total;
    total *= sizes[i];
  }
  allowed_.assign(total, false);
}

std::size_t Table::code(std::span<const ValueIndex> tuple) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) c += tuple[i] * strides_[i];
  return c;
}

void Table::allow(std::span<const ValueIndex> tuple) {
  allowed_[code(tuple)] = true;
}

bool Table::allows(std::span<const ValueIndex> tuple) const {
  return allowed_[code(tuple)];
}

bool Table::allows_assignment(std::span<const ValueIndex> assignment) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < scope_.size(); ++i) {
    c += assignment[scope_[i]] * strides_[i];
  }
  return allowed_[c];
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg = "invalid model:";
  for (const Violation& v : violations) {
    msg += "\n  ";
    msg += violation_kind_name(v.kind);
    msg += " at " + v.location + ": " + v.message;
  }
  return msg;
}

}  // namespace

ModelError::ModelError(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

Model::Model(SystemModel model) : model_(std::move(model)) {
  if (auto violations = validate_model(model_); !violations.empty()) {
    throw ModelError(std::move(violations));
  }
  by_role_.resize(4);
  for (std::size_t p = 0; p < model_.parameters.size(); ++p) {
    const Parameter& param = model_.parameters[p];
    const Domain* d = model_.find_domain(param.domain);
    param_domain_.push_back(static_cast<std::size_t>(d - model_.domains.data()));
    by_role_[static_cast<std::size_t>(param.role)].push_back(p);
  }
  for (const Constraint& c : model_.structural) {
    structural_.push_back(to_table(c));
  }
  for (const Component& comp : model_.components) {
    auto& per_mode = modes_.emplace_back();
    for (const Mode& mode : comp.modes) {
      auto& tables = per_mode.emplace_back();
      for (const Constraint& c : mode.constraints) tables.push_back(to_table(c));
    }
  }
}

Table Model::to_table(const Constraint& c) const {
  std::vector<ParamIndex> scope;
  std::vector<std::size_t> sizes;
  for (const std::string& name : c.scope) {
    ParamIndex p = *find_parameter(name);
    scope.push_back(p);
    sizes.push_back(domain_size(p));
  }

  switch (c.kind) {
    case ConstraintKind::kRelation: {
      Table t(std::move(scope), std::move(sizes));
      std::vector<ValueIndex> tuple(t.arity());
      for (const auto& row : c.tuples) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          tuple[i] = *find_value(t.scope()[i], row[i]);
        }
        t.allow(tuple);
      }
      return t;
    }
    case ConstraintKind::kEqualsConstant: {
      Table t(std::move(scope), std::move(sizes));
      const std::array<ValueIndex, 1> v = {*find_value(t.scope()[0], c.constant)};
      t.allow(v);
      return t;
    }
    case ConstraintKind::kEqualsParameter: {
      const std::size_t n = sizes[0];
      Table t(std::move(scope), std::move(sizes));
      for (ValueIndex v = 0; v < n; ++v) {
        const std::array<ValueIndex, 2> pair = {v, v};
        t.allow(pair);
      }
      return t;
    }
    case ConstraintKind::kSignSum:
    case ConstraintKind::kSignSub: {
      const bool sub = c.kind == ConstraintKind::kSignSub;
      const bool refined = c.magnitude.has_value();
      if (refined) {
        ParamIndex m = *find_parameter(*c.magnitude);
        scope.push_back(m);
        sizes.push_back(domain_size(m));
      }
      Table t(std::move(scope), std::move(sizes));
      for (Sign a : kAllSigns) {
        for (Sign b : kAllSigns) {
          for (Magnitude m : kAllMagnitudes) {
            SignSet result = refined ? (sub ? sign_sub_refined(a, b, m)
                                            : sign_add_refined(a, b, m))
                                     : (sub ? sign_sub(a, b) : sign_add(a, b));
            for (ValueIndex r : result.indices()) {
              std::array<ValueIndex, 4> tuple = {static_cast<ValueIndex>(a),
                                                 static_cast<ValueIndex>(b), r,
                                                 static_cast<ValueIndex>(m)};
              t.allow(std::span<const ValueIndex>(tuple.data(), t.arity()));
            }
            if (!refined) break;
          }
        }
      }
      return t;
    }
  }
  throw Error("unknown constraint kind");
}

std::optional<ParamIndex> Model::find_parameter(std::string_view name) const {
  const auto& ps = model_.parameters;
  auto it = std::find_if(ps.begin(), ps.end(),
                         [&](const Parameter& p) { return p.name == name; });
  if (it == ps.end()) return std::nullopt;
  return static_cast<ParamIndex>(it - ps.begin());
}

std::optional<ValueIndex> Model::find_value(ParamIndex p,
                                            std::string_view value) const {
  const Domain& d = domain(p);
  return d.index_of(canonical_value(d.name, value));
}

const std::vector<ParamIndex>& Model::parameters_with(Role role) const {
  return by_role_[static_cast<std::size_t>(role)];
}

std::optional<std::size_t> Model::find_component(std::string_view name) const {
  const auto& cs = model_.components;
  auto it = std::find_if(cs.begin(), cs.end(),
                         [&](const Component& c) { return c.name == name; });
  if (it == cs.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cs.begin());
}

std::optional<std::size_t> Model::find_mode(std::size_t component,
                                            std::string_view mode) const {
  const auto& ms = model_.components[component].modes;
  auto it = std::find_if(ms.begin(), ms.end(),
                         [&](const Mode& m) { return m.name == mode; });
  if (it == ms.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ms.begin());
}

void Model::check_total(const ModeAssignment& f) const {
  if (f.size() != component_count()) {
    throw Error("mode assignment covers " + std::to_string(f.size()) +
                " components, model has " + std::to_string(component_count()));
  }
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c] >= model_.components[c].modes.size()) {
      throw Error("mode index out of range for component '" +
                  model_.components[c].name + "'");
    }
  }
}

ModeAssignment Model::assignment(
    const std::vector<std::pair<std::string, std::string>>& modes) const {
  std::vector<std::size_t> out(component_count(), 0);
  std::vector<bool> seen(component_count(), false);
  for (const auto& [comp, mode] : modes) {
    auto c = find_component(comp);
    if (!c) throw Error("unknown component '" + comp + "'");
    auto m = find_mode(*c, mode);
    if (!m) throw Error("component '" + comp + "' has no mode '" + mode + "'");
    out[*c] = *m;
    seen[*c] = true;
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (!seen[c]) {
      throw Error("no mode given for component '" +
                  model_.components[c].name + "'");
    }
  }
  return ModeAssignment(std::move(out));
}

std::string Model::format(const ModeAssignment& f) const {
  std::string out;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (c > 0) out += ' ';
    out += model_.components[c].name + "=" +
           model_.components[c].modes[f[c]].name;
  }
  return out;
}

std::string Model::format(ParamIndex p, ValueSet values) const {
  std::string out = "{";
  bool first = true;
  for (ValueIndex v : values.indices()) {
    if (!first) out += ',';
    out += value_name(p, v);
    first = false;
  }
  return out + "}";
}

}  // namespace mbd
