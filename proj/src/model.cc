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

#include "mbd/model.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mbd/value_set.hpp"

namespace mbd {

std::optional<std::size_t> Domain::index_of(std::string_view value) const {
  auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

std::vector<Domain> builtin_domains() {
  return {
      Domain{std::string(kSignDomain), {"minus", "zero", "plus"}, true},
      Domain{std::string(kMagnitudeDomain), {"lt", "eq", "gt"}, true},
  };
}

std::string_view canonical_value(std::string_view domain,
                                 std::string_view value) {
  if (domain != kSignDomain) return value;
  if (value == "-") return "minus";
  if (value == "0") return "zero";
  if (value == "+") return "plus";
  return value;
}

std::string_view role_name(Role role) {
  switch (role) {
    case Role::kInternal: return "internal";
    case Role::kContext: return "context";
    case Role::kObservable: return "observable";
    case Role::kAssumable: return "assumable";
  }
  return "internal";
}

Constraint Constraint::relation(std::vector<std::string> scope,
                                std::vector<std::vector<std::string>> tuples) {
  Constraint c;
  c.kind = ConstraintKind::kRelation;
  c.scope = std::move(scope);
  c.tuples = std::move(tuples);
  return c;
}

Constraint Constraint::equals(std::string param, std::string value) {
  Constraint c;
  c.kind = ConstraintKind::kEqualsConstant;
  c.scope = {std::move(param)};
  c.constant = std::move(value);
  return c;
}

Constraint Constraint::same(std::string lhs, std::string rhs) {
  Constraint c;
  c.kind = ConstraintKind::kEqualsParameter;
  c.scope = {std::move(lhs), std::move(rhs)};
  return c;
}

Constraint Constraint::sign_sum(std::string a, std::string b, std::string c,
                                std::optional<std::string> magnitude) {
  Constraint k;
  k.kind = ConstraintKind::kSignSum;
  k.scope = {std::move(a), std::move(b), std::move(c)};
  k.magnitude = std::move(magnitude);
  return k;
}

Constraint Constraint::sign_sub(std::string a, std::string b, std::string c,
                                std::optional<std::string> magnitude) {
  Constraint k = sign_sum(std::move(a), std::move(b), std::move(c),
                          std::move(magnitude));
  k.kind = ConstraintKind::kSignSub;
  return k;
}

const Domain* SystemModel::find_domain(std::string_view name) const {
  auto it = std::find_if(domains.begin(), domains.end(),
                         [&](const Domain& d) { return d.name == name; });
  return it == domains.end() ? nullptr : &*it;
}

const Parameter* SystemModel::find_parameter(std::string_view name) const {
  auto it = std::find_if(parameters.begin(), parameters.end(),
                         [&](const Parameter& p) { return p.name == name; });
  return it == parameters.end() ? nullptr : &*it;
}

const Component* SystemModel::find_component(std::string_view name) const {
  auto it = std::find_if(components.begin(), components.end(),
                         [&](const Component& c) { return c.name == name; });
  return it == components.end() ? nullptr : &*it;
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDuplicateDomain: return "duplicate-domain";
    case ViolationKind::kDuplicateValue: return "duplicate-value";
    case ViolationKind::kEmptyDomain: return "empty-domain";
    case ViolationKind::kDomainTooLarge: return "domain-too-large";
    case ViolationKind::kDuplicateParameter: return "duplicate-parameter";
    case ViolationKind::kUndeclaredDomain: return "undeclared-domain";
    case ViolationKind::kNoComponents: return "no-components";
    case ViolationKind::kDuplicateComponent: return "duplicate-component";
    case ViolationKind::kNoModes: return "no-modes";
    case ViolationKind::kDuplicateMode: return "duplicate-mode";
    case ViolationKind::kUndeclaredParameter: return "undeclared-parameter";
    case ViolationKind::kArityMismatch: return "arity-mismatch";
    case ViolationKind::kValueNotInDomain: return "value-not-in-domain";
    case ViolationKind::kDomainMismatch: return "domain-mismatch";
    case ViolationKind::kAmbiguousValue: return "ambiguous-value";
    case ViolationKind::kBadMagnitude: return "bad-magnitude";
  }
  return "unknown";
}

namespace {

class Validator {
 public:
  explicit Validator(const SystemModel& model) : model_(model) {}

  std::vector<Violation> run() {
    check_domains();
    check_parameters();
    if (model_.components.empty()) {
      add(ViolationKind::kNoComponents, "model",
          "model declares no components");
    }
    std::set<std::string> seen;
    for (const Component& comp : model_.components) {
      const std::string where = "component " + comp.name;
      if (!seen.insert(comp.name).second) {
        add(ViolationKind::kDuplicateComponent, where,
            "component '" + comp.name + "' declared more than once");
      }
      if (comp.modes.empty()) {
        add(ViolationKind::kNoModes, where, "component has no modes");
      }
      std::set<std::string> mode_names;
      for (const Mode& mode : comp.modes) {
        const std::string mode_where = where + ", mode " + mode.name;
        if (!mode_names.insert(mode.name).second) {
          add(ViolationKind::kDuplicateMode, mode_where,
              "mode '" + mode.name + "' declared more than once");
        }
        for (const Constraint& c : mode.constraints) check(c, mode_where);
      }
    }
    for (const Constraint& c : model_.structural) check(c, "always");
    return std::move(out_);
  }

 private:
  void add(ViolationKind kind, std::string location, std::string message) {
    out_.push_back({kind, std::move(location), std::move(message)});
  }

  void check_domains() {
    std::set<std::string> names;
    for (const Domain& d : model_.domains) {
      const std::string where = "domain " + d.name;
      if (!names.insert(d.name).second) {
        add(ViolationKind::kDuplicateDomain, where,
            "domain '" + d.name + "' declared more than once");
      }
      if (d.values.empty()) {
        add(ViolationKind::kEmptyDomain, where, "domain has no values");
      }
      if (d.values.size() > kMaxDomainSize) {
        add(ViolationKind::kDomainTooLarge, where,
            "domain has more than " + std::to_string(kMaxDomainSize) +
                " values");
      }
      std::set<std::string> values;
      for (const std::string& v : d.values) {
        if (!values.insert(v).second) {
          add(ViolationKind::kDuplicateValue, where,
              "value '" + v + "' listed more than once");
        }
      }
    }
  }

  void check_parameters() {
    std::set<std::string> names;
    for (const Parameter& p : model_.parameters) {
      const std::string where = "param " + p.name;
      if (!names.insert(p.name).second) {
        add(ViolationKind::kDuplicateParameter, where,
            "parameter '" + p.name + "' declared more than once");
      }
      if (model_.find_domain(p.domain) == nullptr) {
        add(ViolationKind::kUndeclaredDomain, where,
            "undeclared domain '" + p.domain + "'");
      }
    }
  }

  // Domain of a declared parameter, or nullptr (after reporting) otherwise.
  const Domain* domain_of(const std::string& param, const std::string& where) {
    const Parameter* p = model_.find_parameter(param);
    if (p == nullptr) {
      add(ViolationKind::kUndeclaredParameter, where,
          "constraint references undeclared parameter '" + param + "'");
      return nullptr;
    }
    return model_.find_domain(p->domain);
  }

  void check_value(const Domain* d, const std::string& param,
                   const std::string& value, const std::string& where) {
    if (d != nullptr && !d->index_of(value)) {
      add(ViolationKind::kValueNotInDomain, where,
          "value '" + value + "' is not in the domain of '" + param + "'");
    }
  }

  void check(const Constraint& c, const std::string& where) {
    std::vector<const Domain*> doms;
    for (const std::string& p : c.scope) doms.push_back(domain_of(p, where));

    switch (c.kind) {
      case ConstraintKind::kRelation:
        if (c.scope.empty()) {
          add(ViolationKind::kArityMismatch, where, "relation has empty scope");
          return;
        }
        for (const auto& tuple : c.tuples) {
          if (tuple.size() != c.scope.size()) {
            add(ViolationKind::kArityMismatch, where,
                "tuple of arity " + std::to_string(tuple.size()) +
                    " in relation of arity " + std::to_string(c.scope.size()));
            continue;
          }
          for (std::size_t i = 0; i < tuple.size(); ++i) {
            check_value(doms[i], c.scope[i], tuple[i], where);
          }
        }
        break;
      case ConstraintKind::kEqualsConstant:
        if (c.scope.size() != 1) {
          add(ViolationKind::kArityMismatch, where,
              "equality to a constant takes one parameter");
          return;
        }
        check_value(doms[0], c.scope[0], c.constant, where);
        if (model_.find_parameter(c.constant) != nullptr) {
          add(ViolationKind::kAmbiguousValue, where,
              "constant '" + c.constant + "' is also a parameter name");
        }
        break;
      case ConstraintKind::kEqualsParameter:
        if (c.scope.size() != 2) {
          add(ViolationKind::kArityMismatch, where,
              "parameter equality takes two parameters");
          return;
        }
        if (doms[0] != nullptr && doms[1] != nullptr && doms[0] != doms[1]) {
          add(ViolationKind::kDomainMismatch, where,
              "'" + c.scope[0] + "' and '" + c.scope[1] +
                  "' have different domains");
        }
        break;
      case ConstraintKind::kSignSum:
      case ConstraintKind::kSignSub:
        if (c.scope.size() != 3) {
          add(ViolationKind::kArityMismatch, where,
              "sign operator takes three parameters");
          return;
        }
        for (std::size_t i = 0; i < 3; ++i) {
          if (doms[i] != nullptr && doms[i]->name != kSignDomain) {
            add(ViolationKind::kDomainMismatch, where,
                "operand '" + c.scope[i] + "' of a sign operator has domain '" +
                    doms[i]->name + "', expected Sign");
          }
        }
        if (c.magnitude) {
          const Parameter* m = model_.find_parameter(*c.magnitude);
          if (m == nullptr) {
            add(ViolationKind::kUndeclaredParameter, where,
                "constraint references undeclared parameter '" +
                    *c.magnitude + "'");
          } else if (m->domain != kMagnitudeDomain ||
                     m->role != Role::kAssumable) {
            add(ViolationKind::kBadMagnitude, where,
                "'" + *c.magnitude +
                    "' must be an assumable parameter over Magnitude");
          }
        }
        break;
    }
  }

  const SystemModel& model_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate_model(const SystemModel& model) {
  return Validator(model).run();
}

}  // namespace mbd
