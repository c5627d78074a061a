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

#include "mbd/prediction.hpp"

#include <algorithm>

namespace mbd {

namespace {

void check_inputs(const Model& model, const ModeAssignment& f,
                  const Context& cxt, const AssumptionSet& assumptions) {
  model.check_total(f);
  auto bound = [&](const Bindings& b, Role role, const char* what) {
    for (const auto& [p, v] : b) {
      if (p >= model.parameter_count() || model.role(p) != role) {
        throw Error(std::string(what) + " binds a parameter that is not " +
                    std::string(role_name(role)));
      }
      if (v >= model.domain_size(p)) {
        throw Error(std::string(what) + " value out of domain for '" +
                    model.parameter(p).name + "'");
      }
    }
  };
  bound(cxt, Role::kContext, "context");
  bound(assumptions, Role::kAssumable, "assumption set");
  for (ParamIndex p : model.parameters_with(Role::kContext)) {
    if (!cxt.contains(p)) {
      throw Error("context parameter '" + model.parameter(p).name +
                  "' is not bound");
    }
  }
}

// Backtracking search with forward checking over compiled tables.
class Search {
 public:
  Search(const Model& model, const ModeAssignment& f, const Context& cxt,
         const AssumptionSet& assumptions)
      : n_(model.parameter_count()), watches_by_var_(n_) {
    root_.reserve(n_);
    for (ParamIndex p = 0; p < n_; ++p) {
      root_.push_back(ValueSet::full(model.domain_size(p)));
    }
    for (const auto& [p, v] : cxt) root_[p] &= ValueSet::single(v);
    for (const auto& [p, v] : assumptions) root_[p] &= ValueSet::single(v);

    for (const Table& t : model.structural()) add(t);
    for (std::size_t c = 0; c < f.size(); ++c) {
      for (const Table& t : model.mode_constraints(c, f[c])) add(t);
    }
    for (const Watch& w : watches_) {
      for (ParamIndex p : w.vars) watches_by_var_[p].push_back(&w);
    }
  }

  void run(const SolutionVisitor& visit) {
    visit_ = &visit;
    std::vector<ValueSet> dom = root_;
    if (!arc_consistency(dom)) return;
    assignment_.assign(n_, 0);
    descend(0, std::move(dom));
  }

 private:
  struct Watch {
    const Table* table;
    std::vector<ParamIndex> vars;       // distinct, ascending
    std::vector<std::size_t> position;  // scope position -> index in vars
  };

  void add(const Table& t) {
    Watch w{&t, t.scope(), {}};
    std::sort(w.vars.begin(), w.vars.end());
    w.vars.erase(std::unique(w.vars.begin(), w.vars.end()), w.vars.end());
    for (ParamIndex p : t.scope()) {
      w.position.push_back(static_cast<std::size_t>(
          std::lower_bound(w.vars.begin(), w.vars.end(), p) - w.vars.begin()));
    }
    watches_.push_back(std::move(w));
  }

  // Restricts every variable of `w` to the values with a support in the
  // table under `dom`. Returns false on a domain wipeout.
  bool revise(const Watch& w, std::vector<ValueSet>& dom,
              bool* changed) const {
    const std::size_t k = w.vars.size();
    std::vector<std::vector<ValueIndex>> choices(k);
    for (std::size_t i = 0; i < k; ++i) {
      choices[i] = dom[w.vars[i]].indices();
      if (choices[i].empty()) return false;
    }
    std::vector<ValueSet> support(k);
    std::vector<std::size_t> digit(k, 0);
    std::vector<ValueIndex> tuple(w.position.size());
    bool more = true;
    while (more) {
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        tuple[i] = choices[w.position[i]][digit[w.position[i]]];
      }
      if (w.table->allows(tuple)) {
        for (std::size_t i = 0; i < k; ++i) {
          support[i].insert(choices[i][digit[i]]);
        }
      }
      more = false;
      for (std::size_t i = k; i-- > 0;) {
        if (++digit[i] < choices[i].size()) {
          more = true;
          break;
        }
        digit[i] = 0;
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (support[i].empty()) return false;
      if (support[i] != dom[w.vars[i]]) {
        dom[w.vars[i]] = support[i];
        if (changed != nullptr) *changed = true;
      }
    }
    return true;
  }

  bool arc_consistency(std::vector<ValueSet>& dom) {
    for (const ValueSet& d : dom) {
      if (d.empty()) return false;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Watch& w : watches_) {
        if (!revise(w, dom, &changed)) return false;
      }
    }
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool descend(ParamIndex k, std::vector<ValueSet> dom) {
    if (k == n_) return (*visit_)(assignment_);
    for (ValueIndex v : dom[k].indices()) {
      std::vector<ValueSet> next = dom;
      next[k] = ValueSet::single(v);
      assignment_[k] = v;
      if (!forward_check(k, next)) continue;
      if (!descend(k + 1, std::move(next))) return false;
    }
    return true;
  }

  // Revises each table touching `k` that has at most one unassigned
  // variable left. Every table is revised at the latest when its highest
  // variable is assigned, which makes it fully checked.
  bool forward_check(ParamIndex k, std::vector<ValueSet>& dom) const {
    for (const Watch* w : watches_by_var_[k]) {
      const auto open = static_cast<std::size_t>(
          w->vars.end() -
          std::upper_bound(w->vars.begin(), w->vars.end(), k));
      if (open <= 1 && !revise(*w, dom, nullptr)) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<ValueSet> root_;
  std::vector<Watch> watches_;
  std::vector<std::vector<const Watch*>> watches_by_var_;
  Assignment assignment_;
  const SolutionVisitor* visit_ = nullptr;
};

}  // namespace

void for_each_solution(const Model& model, const ModeAssignment& f,
                       const Context& cxt, const AssumptionSet& assumptions,
                       const SolutionVisitor& visit) {
  check_inputs(model, f, cxt, assumptions);
  Search(model, f, cxt, assumptions).run(visit);
}

std::vector<Assignment> solve(const Model& model, const ModeAssignment& f,
                              const Context& cxt,
                              const AssumptionSet& assumptions) {
  std::vector<Assignment> out;
  for_each_solution(model, f, cxt, assumptions,
                    [&](std::span<const ValueIndex> s) {
                      out.emplace_back(s.begin(), s.end());
                      return true;
                    });
  return out;
}

std::optional<ValueSet> predict(const Model& model, const ModeAssignment& f,
                                const Context& cxt,
                                const AssumptionSet& assumptions,
                                ParamIndex p) {
  if (p >= model.parameter_count()) throw Error("unknown parameter index");
  const ValueSet full = ValueSet::full(model.domain_size(p));
  ValueSet seen;
  bool any = false;
  for_each_solution(model, f, cxt, assumptions,
                    [&](std::span<const ValueIndex> s) {
                      any = true;
                      seen.insert(s[p]);
                      return seen != full;
                    });
  if (!any) return std::nullopt;
  return seen;
}

std::optional<Predictions> predict_all(const Model& model,
                                       const ModeAssignment& f,
                                       const Context& cxt,
                                       const AssumptionSet& assumptions) {
  const std::size_t n = model.parameter_count();
  Predictions seen(n);
  std::vector<ValueSet> full(n);
  for (ParamIndex p = 0; p < n; ++p) full[p] = ValueSet::full(model.domain_size(p));
  std::size_t saturated = 0;
  bool any = false;
  for_each_solution(model, f, cxt, assumptions,
                    [&](std::span<const ValueIndex> s) {
                      any = true;
                      for (ParamIndex p = 0; p < n; ++p) {
                        if (seen[p] == full[p]) continue;
                        seen[p].insert(s[p]);
                        if (seen[p] == full[p]) ++saturated;
                      }
                      return saturated < n;
                    });
  if (!any) return std::nullopt;
  return seen;
}

}  // namespace mbd
