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

/// @file oracle.hpp
/// Reference semantics for tests. Works on the name-based SystemModel and
/// enumerates the full Cartesian product of parameter domains, checking
/// each constraint directly. Sign operators are evaluated by integer
/// arithmetic over representative magnitudes rather than through the sign
/// tables, so this shares no code path with the engine.

#ifndef MBD_TESTS_ORACLE_HPP_
#define MBD_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mbd/model.hpp"

namespace oracle {

using Names = std::map<std::string, std::string>;
using Row = std::vector<std::string>;  // one value per parameter

inline int sign_of(const std::string& v) {
  if (v == "minus" || v == "-") return -1;
  if (v == "plus" || v == "+") return 1;
  return 0;
}

inline int cmp_code(const std::string& m) {
  return m == "lt" ? -1 : m == "gt" ? 1 : 0;
}

inline int sgn(int x) { return (x > 0) - (x < 0); }

/// Integers with the given sign and magnitude 1..range.
inline std::vector<int> representatives(int sign, int range = 4) {
  if (sign == 0) return {0};
  std::vector<int> out;
  for (int k = 1; k <= range; ++k) out.push_back(sign * k);
  return out;
}

/// c in [a] (+/-) [b], optionally refined by m comparing |a| with |b|.
/// The comparison only binds when the effective operands have opposite
/// signs.
inline bool sign_relation(bool subtract, int a, int b, int c,
                          std::optional<int> m) {
  const int eb = subtract ? -b : b;
  const bool opposite = a * eb < 0;
  for (int x : representatives(a)) {
    for (int y : representatives(b)) {
      const int ey = subtract ? -y : y;
      if (sgn(x + ey) != c) continue;
      if (m && opposite && sgn(std::abs(x) - std::abs(y)) != *m) continue;
      return true;
    }
  }
  return false;
}

inline bool holds(const mbd::SystemModel& model, const mbd::Constraint& c,
                  const Names& row) {
  using mbd::ConstraintKind;
  auto val = [&](const std::string& p) { return row.at(p); };
  auto canon = [&](const std::string& p, const std::string& v) {
    return std::string(
        mbd::canonical_value(model.find_parameter(p)->domain, v));
  };
  switch (c.kind) {
    case ConstraintKind::kRelation:
      return std::any_of(c.tuples.begin(), c.tuples.end(), [&](const Row& t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (canon(c.scope[i], t[i]) != val(c.scope[i])) return false;
        }
        return true;
      });
    case ConstraintKind::kEqualsConstant:
      return val(c.scope[0]) == canon(c.scope[0], c.constant);
    case ConstraintKind::kEqualsParameter:
      return val(c.scope[0]) == val(c.scope[1]);
    case ConstraintKind::kSignSum:
    case ConstraintKind::kSignSub: {
      std::optional<int> m;
      if (c.magnitude) m = cmp_code(val(*c.magnitude));
      return sign_relation(c.kind == ConstraintKind::kSignSub,
                           sign_of(val(c.scope[0])), sign_of(val(c.scope[1])),
                           sign_of(val(c.scope[2])), m);
    }
  }
  return false;
}

/// All solutions, parameter 0 most significant, values in domain order.
/// `modes` names one mode per component, in component order.
inline std::vector<Row> solutions(const mbd::SystemModel& model,
                                  const std::vector<std::string>& modes,
                                  const Names& fixed) {
  std::vector<const mbd::Constraint*> active;
  for (const auto& c : model.structural) active.push_back(&c);
  for (std::size_t i = 0; i < model.components.size(); ++i) {
    for (const auto& mode : model.components[i].modes) {
      if (mode.name != modes.at(i)) continue;
      for (const auto& c : mode.constraints) active.push_back(&c);
    }
  }
  const auto& params = model.parameters;
  std::vector<const std::vector<std::string>*> doms;
  for (const auto& p : params) doms.push_back(&model.find_domain(p.domain)->values);

  std::vector<Row> out;
  std::vector<std::size_t> digit(params.size(), 0);
  while (true) {
    Names row;
    for (std::size_t i = 0; i < params.size(); ++i) {
      row[params[i].name] = (*doms[i])[digit[i]];
    }
    bool ok = true;
    for (const auto& [p, v] : fixed) {
      if (row.at(p) != v) ok = false;
    }
    for (const mbd::Constraint* c : active) {
      if (!ok) break;
      ok = holds(model, *c, row);
    }
    if (ok) {
      Row r;
      for (const auto& p : params) r.push_back(row[p.name]);
      out.push_back(std::move(r));
    }
    std::size_t i = params.size();
    while (i > 0) {
      --i;
      if (++digit[i] < doms[i]->size()) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
    if (params.empty()) return out;
  }
}

/// Projection per parameter name; nullopt when there is no solution.
inline std::optional<std::map<std::string, std::set<std::string>>> project(
    const mbd::SystemModel& model, const std::vector<std::string>& modes,
    const Names& fixed) {
  auto rows = solutions(model, modes, fixed);
  if (rows.empty()) return std::nullopt;
  std::map<std::string, std::set<std::string>> out;
  for (const auto& p : model.parameters) out[p.name];
  for (const Row& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out[model.parameters[i].name].insert(r[i]);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // MBD_TESTS_ORACLE_HPP_
