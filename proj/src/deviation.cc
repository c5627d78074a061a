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

#include "mbd/deviation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mbd/diagnosis.hpp"
#include "mbd/prediction.hpp"

namespace mbd {

namespace {

// Cursor over one line of a .deq file.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t number, const std::string& file)
      : line_(line), number_(number), file_(file) {}

  void skip_space() {
    while (i_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[i_])) != 0) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= line_.size() || line_[i_] == '#';
  }
  bool eat(std::string_view s) {
    skip_space();
    if (line_.substr(i_, s.size()) != s) return false;
    i_ += s.size();
    return true;
  }
  std::optional<std::string> identifier() {
    skip_space();
    std::size_t j = i_;
    if (j >= line_.size() || std::isalpha(static_cast<unsigned char>(line_[j])) == 0) {
      return std::nullopt;
    }
    while (j < line_.size() &&
           (std::isalnum(static_cast<unsigned char>(line_[j])) != 0 || line_[j] == '_')) {
      ++j;
    }
    std::string out(line_.substr(i_, j - i_));
    i_ = j;
    return out;
  }
  ParseError error(std::string message, std::vector<std::string> expected) {
    skip_space();
    return {{file_, number_, i_ + 1}, std::move(message), std::move(expected)};
  }

 private:
  std::string_view line_;
  std::size_t number_;
  const std::string& file_;
  std::size_t i_ = 0;
};

std::optional<BaseEquation> parse_line(LineScanner& s,
                                       std::vector<ParseError>& errors) {
  BaseEquation eq;
  if (s.eat("d/dt")) eq.derivative = true;
  auto lhs = s.identifier();
  if (!lhs) {
    errors.push_back(s.error("expected variable", {"variable"}));
    return std::nullopt;
  }
  eq.lhs = *lhs;
  if (!s.eat("=")) {
    errors.push_back(s.error("expected '='", {"'='"}));
    return std::nullopt;
  }
  bool negative = false;
  if (s.eat("-")) {
    negative = true;
  } else {
    s.eat("+");
  }
  while (true) {
    auto v = s.identifier();
    if (!v) {
      errors.push_back(s.error("expected variable", {"variable"}));
      return std::nullopt;
    }
    eq.rhs.push_back({negative, *v});
    if (s.done()) break;
    if (s.eat("+")) {
      negative = false;
    } else if (s.eat("-")) {
      negative = true;
    } else {
      errors.push_back(s.error("expected '+', '-' or end of line",
                               {"'+'", "'-'", "end of line"}));
      return std::nullopt;
    }
  }
  return eq;
}

}  // namespace

ParseResult<std::vector<BaseEquation>> parse_equations(std::string_view text,
                                                       std::string file) {
  std::vector<BaseEquation> out;
  std::vector<ParseError> errors;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    LineScanner s(text.substr(pos, nl - pos), ++number, file);
    pos = nl + 1;
    if (s.done()) continue;
    if (auto eq = parse_line(s, errors)) out.push_back(std::move(*eq));
  }
  if (out.empty() && errors.empty()) {
    errors.push_back({{file, 1, 1}, "expected equation", {"equation"}});
  }
  if (!errors.empty()) return {std::nullopt, std::move(errors)};
  return {std::move(out), {}};
}

std::string deviation_name(std::string_view variable, bool derivative) {
  return (derivative ? "dd_" : "d_") + std::string(variable);
}

std::string DeviationFragment::to_text() const {
  SystemModel m;
  m.domains.clear();
  m.parameters = parameters;
  m.structural = constraints;
  return serialize_model(m);
}

void DeviationFragment::merge_into(SystemModel& model) const {
  for (const Parameter& p : parameters) {
    if (model.find_parameter(p.name) != nullptr) {
      throw Error("parameter '" + p.name + "' already declared");
    }
    model.parameters.push_back(p);
  }
  model.structural.insert(model.structural.end(), constraints.begin(),
                          constraints.end());
}

namespace {

// Emits parameters and constraints for a list of equations.
class DeviationCompiler {
 public:
  explicit DeviationCompiler(const RoleOverrides& roles) : roles_(roles) {}

  DeviationFragment run(const std::vector<BaseEquation>& equations) {
    std::set<std::string> defined;
    for (const BaseEquation& eq : equations) {
      if (eq.rhs.empty()) {
        throw Error("equation for '" + eq.lhs + "' has an empty right-hand side");
      }
      std::set<std::string> seen;
      for (const Term& t : eq.rhs) {
        if (!seen.insert(t.variable).second) {
          throw Error("variable '" + t.variable +
                      "' repeats on the right-hand side of '" + eq.lhs + "'");
        }
      }
      if (!defined.insert(eq.lhs).second) {
        throw Error("variable '" + eq.lhs + "' is defined by two equations");
      }
      lhs_keys_.insert(key(eq.lhs, eq.derivative));
    }
    for (const BaseEquation& eq : equations) compile(eq);
    return std::move(out_);
  }

 private:
  static std::string key(const std::string& var, bool derivative) {
    return derivative ? "d/dt " + var : var;
  }

  std::string deviation(const std::string& var, bool derivative = false) {
    std::string name = deviation_name(var, derivative);
    if (declared_.insert(name).second) {
      const std::string k = key(var, derivative);
      Role role = lhs_keys_.contains(k) ? Role::kObservable : Role::kInternal;
      if (auto it = roles_.find(k); it != roles_.end()) role = it->second;
      out_.parameters.push_back({name, std::string(kSignDomain), role});
    }
    return name;
  }

  std::string fresh_intermediate() {
    std::string name = "t" + std::to_string(++intermediates_);
    out_.parameters.push_back({name, std::string(kSignDomain), Role::kInternal});
    return name;
  }

  std::string fresh_magnitude() {
    std::string name = "m" + std::to_string(++magnitudes_);
    out_.parameters.push_back({name, std::string(kMagnitudeDomain), Role::kAssumable});
    return name;
  }

  void negation(const std::string& x, const std::string& y) {
    out_.constraints.push_back(Constraint::relation(
        {x, y}, {{"minus", "plus"}, {"zero", "zero"}, {"plus", "minus"}}));
  }

  // The running partial sum is `acc`, or its negation when `negated`.
  void compile(const BaseEquation& eq) {
    const std::string target = deviation(eq.lhs, eq.derivative);
    std::string acc = deviation(eq.rhs[0].variable);
    bool negated = eq.rhs[0].negative;
    if (eq.rhs.size() == 1) {
      if (negated) {
        negation(target, acc);
      } else {
        out_.constraints.push_back(Constraint::same(target, acc));
      }
      return;
    }
    for (std::size_t i = 1; i < eq.rhs.size(); ++i) {
      const std::string term = deviation(eq.rhs[i].variable);
      const bool minus = eq.rhs[i].negative;
      // -acc + term = term - acc; -acc - term = -(acc + term).
      const bool sum = negated == minus;
      const bool result_negated = negated && minus;
      const bool last = i + 1 == eq.rhs.size();
      const std::string out =
          last && !result_negated ? target : fresh_intermediate();
      const std::string a = negated && !minus ? term : acc;
      const std::string b = negated && !minus ? acc : term;
      const std::string m = fresh_magnitude();
      out_.constraints.push_back(sum ? Constraint::sign_sum(a, b, out, m)
                                     : Constraint::sign_sub(a, b, out, m));
      acc = out;
      negated = result_negated;
    }
    if (negated) negation(target, acc);
  }

  const RoleOverrides& roles_;
  DeviationFragment out_;
  std::set<std::string> declared_;
  std::set<std::string> lhs_keys_;
  std::size_t intermediates_ = 0;
  std::size_t magnitudes_ = 0;
};

}  // namespace

DeviationFragment compile_deviations(const std::vector<BaseEquation>& equations,
                                     const RoleOverrides& roles) {
  return DeviationCompiler(roles).run(equations);
}

std::string MagnitudeAssumption::to_string() const {
  return "|" + a + "| " + std::string(magnitude_symbol(comparison)) + " |" + b + "|";
}

std::optional<MagnitudeAssumption> magnitude_assumption(const Model& model,
                                                        ParamIndex p,
                                                        ValueIndex v) {
  const std::string& name = model.parameter(p).name;
  auto find = [&](const std::vector<Constraint>& cs)
      -> std::optional<MagnitudeAssumption> {
    for (const Constraint& c : cs) {
      if (c.magnitude && *c.magnitude == name) {
        return MagnitudeAssumption{c.scope[0], c.scope[1],
                                   static_cast<Magnitude>(v)};
      }
    }
    return std::nullopt;
  };
  const SystemModel& m = model.description();
  if (auto found = find(m.structural)) return found;
  for (const Component& comp : m.components) {
    for (const Mode& mode : comp.modes) {
      if (auto found = find(mode.constraints)) return found;
    }
  }
  return std::nullopt;
}

std::vector<Explanation> explain(const DiagnosticProblem& problem,
                                 const ModeAssignment& f) {
  require_valid(problem);
  const Model& model = *problem.model;
  if (evaluate(problem.with_obs_plus({}), f) != CandidateStatus::kDiagnosis) {
    throw Error("candidate " + model.format(f) +
                " is not consistent with the observations");
  }

  std::vector<ParamIndex> assumables = model.parameters_with(Role::kAssumable);
  std::sort(assumables.begin(), assumables.end(),
            [&](ParamIndex x, ParamIndex y) {
              return model.parameter(x).name < model.parameter(y).name;
            });

  auto subsumes = [](const AssumptionSet& small, const AssumptionSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };

  std::vector<Explanation> out;
  const std::size_t n = assumables.size();
  for (std::size_t k = 0; k <= n; ++k) {
    // Index combinations of size k in lexicographic order.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<ValueIndex> digit(k, 0);
      bool more_values = true;
      while (more_values) {
        AssumptionSet a;
        for (std::size_t i = 0; i < k; ++i) a[assumables[pick[i]]] = digit[i];
        const bool redundant = std::any_of(
            out.begin(), out.end(),
            [&](const Explanation& e) { return subsumes(e.assumptions, a); });
        if (!redundant &&
            evaluate(problem, f, a) == CandidateStatus::kDiagnosis) {
          out.push_back({f, std::move(a), problem.obs_plus});
        }
        more_values = false;
        for (std::size_t i = k; i-- > 0;) {
          if (++digit[i] < model.domain_size(assumables[pick[i]])) {
            more_values = true;
            break;
          }
          digit[i] = 0;
        }
      }
      // Next combination.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!out.empty() && out.front().assumptions.empty()) break;
  }
  return out;
}

}  // namespace mbd
