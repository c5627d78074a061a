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

#include <cstdlib>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "mbd/deviation.hpp"
#include "mbd/diagnosis.hpp"
#include "mbd/dsl.hpp"
#include "oracle.hpp"

using namespace mbd;

namespace {

std::vector<BaseEquation> equations(const std::string& text) {
  auto r = parse_equations(text);
  REQUIRE(r.ok());
  return *r.value;
}

SystemModel with_fragment(const DeviationFragment& frag) {
  SystemModel m;
  m.components.push_back({"system", {{"ok", {}}}});
  frag.merge_into(m);
  return m;
}

// Sign tuples over (rhs terms..., lhs) reachable by integers.
std::set<std::vector<int>> real_signs(const BaseEquation& eq) {
  std::set<std::vector<int>> out;
  const std::size_t n = eq.rhs.size();
  std::vector<int> x(n, -3);
  while (true) {
    int sum = 0;
    std::vector<int> row;
    for (std::size_t i = 0; i < n; ++i) {
      sum += eq.rhs[i].negative ? -x[i] : x[i];
      row.push_back(oracle::sgn(x[i]));
    }
    row.push_back(oracle::sgn(sum));
    out.insert(row);
    std::size_t i = n;
    bool more = false;
    while (i > 0) {
      --i;
      if (++x[i] <= 3) {
        more = true;
        break;
      }
      x[i] = -3;
    }
    if (!more) break;
  }
  return out;
}

std::set<std::vector<int>> compiled_signs(const BaseEquation& eq) {
  const SystemModel m = with_fragment(compile_deviations({eq}));
  std::vector<std::size_t> cols;
  auto col = [&](const std::string& name) {
    for (std::size_t i = 0; i < m.parameters.size(); ++i) {
      if (m.parameters[i].name == name) return i;
    }
    FAIL("missing " << name);
    return std::size_t{0};
  };
  for (const Term& t : eq.rhs) cols.push_back(col(deviation_name(t.variable)));
  cols.push_back(col(deviation_name(eq.lhs, eq.derivative)));
  std::set<std::vector<int>> out;
  for (const auto& row : oracle::solutions(m, {"ok"}, {})) {
    std::vector<int> r;
    for (std::size_t c : cols) r.push_back(oracle::sign_of(row[c]));
    out.insert(r);
  }
  return out;
}

}  // namespace

TEST_CASE("equation parsing") {
  const auto eqs = equations("# tank\nd/dt level = in - out\nx = y\n\ns = -a + b + c\n");
  REQUIRE(eqs.size() == 3);
  CHECK(eqs[0] == BaseEquation{"level", true, {{false, "in"}, {true, "out"}}});
  CHECK(eqs[1] == BaseEquation{"x", false, {{false, "y"}}});
  CHECK(eqs[2].rhs[0] == Term{true, "a"});

  for (const char* bad : {"", "x = ", "x y", "= y", "x = y +", "x = y * z"}) {
    CAPTURE(bad);
    const auto r = parse_equations(bad, "bad.deq");
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.errors.empty());
    CHECK(r.errors[0].span.file == "bad.deq");
    CHECK(r.errors[0].span.line == 1);
  }
  CHECK(parse_equations("x = y\nz = = w\n").errors.at(0).span.line == 2);
}

TEST_CASE("tank equation") {
  const auto frag = compile_deviations(equations("d/dt level = in - out"));
  CHECK(frag.constraints ==
        std::vector<Constraint>{Constraint::sign_sub("d_in", "d_out", "dd_level",
                                                     std::string("m1"))});
  REQUIRE(frag.parameters.size() == 4);
  CHECK(frag.parameters[0] == Parameter{"dd_level", "Sign", Role::kObservable});
  CHECK(frag.parameters[3] == Parameter{"m1", "Magnitude", Role::kAssumable});
  const std::string text = frag.to_text();
  CHECK(text.find("param dd_level : Sign observable") != std::string::npos);
  CHECK(text.find("signsub(d_in, d_out, dd_level) via m1") != std::string::npos);
}

TEST_CASE("single term is an equality") {
  const auto frag = compile_deviations(equations("x = y"));
  CHECK(frag.constraints == std::vector<Constraint>{Constraint::same("d_x", "d_y")});
}

TEST_CASE("three terms fold through an intermediate") {
  const auto frag = compile_deviations(equations("s = a + b + c"));
  CHECK(frag.constraints ==
        std::vector<Constraint>{
            Constraint::sign_sum("d_a", "d_b", "t1", std::string("m1")),
            Constraint::sign_sum("t1", "d_c", "d_s", std::string("m2"))});
}

TEST_CASE("role overrides") {
  const auto frag =
      compile_deviations(equations("d/dt level = in - out"),
                         {{"in", Role::kObservable}, {"d/dt level", Role::kInternal}});
  CHECK(frag.parameters[0].role == Role::kInternal);
  CHECK(frag.parameters[1].role == Role::kObservable);
}

TEST_CASE("compiler rejects malformed systems") {
  CHECK_THROWS_AS(compile_deviations({{"x", false, {}}}), Error);
  CHECK_THROWS_AS(compile_deviations(equations("x = y + y")), Error);
  CHECK_THROWS_AS(compile_deviations(equations("x = y\nx = z")), Error);
}

TEST_CASE("fragment text parses back to the same declarations") {
  gen::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto frag = compile_deviations(gen::random_equations(rng));
    const auto r = parse_model(frag.to_text() + "component system { mode ok { } }\n");
    REQUIRE(r.ok());
    CHECK(r.value->parameters == frag.parameters);
    CHECK(r.value->structural == frag.constraints);
  }
}

TEST_CASE("two-term compilation equals the sign tables") {
  for (const char* text : {"c = a + b", "c = a - b"}) {
    const auto eq = equations(text)[0];
    const bool sub = eq.rhs[1].negative;
    std::set<std::vector<int>> table;
    for (Sign a : kAllSigns) {
      for (Sign b : kAllSigns) {
        for (std::size_t c : (sub ? sign_sub(a, b) : sign_add(a, b)).indices()) {
          table.insert({static_cast<int>(a) - 1, static_cast<int>(b) - 1,
                        static_cast<int>(c) - 1});
        }
      }
    }
    CHECK(compiled_signs(eq) == table);
  }
}

TEST_CASE("folded sums match integer arithmetic") {
  for (const char* text :
       {"s = a + b + c", "s = a - b - c", "s = -a + b", "s = -a - b", "s = -a",
        "s = a - b + c", "s = -a - b + c"}) {
    CAPTURE(text);
    const auto eq = equations(text)[0];
    CHECK(compiled_signs(eq) == real_signs(eq));
  }
  gen::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    auto eq = gen::random_equations(rng)[0];
    eq.rhs.erase(std::remove_if(eq.rhs.begin(), eq.rhs.end(),
                                [&](const Term& t) { return t.variable == eq.lhs; }),
                 eq.rhs.end());
    if (eq.rhs.empty()) continue;
    CHECK(compiled_signs(eq) == real_signs(eq));
  }
}

TEST_CASE("zero deviation satisfies every compiled fragment") {
  gen::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const SystemModel m = with_fragment(compile_deviations(gen::random_equations(rng)));
    // Magnitudes are free when no operand pair is opposite; try each.
    for (const char* mag : {"lt", "eq", "gt"}) {
      oracle::Names row;
      for (const auto& p : m.parameters) {
        row[p.name] = p.domain == kSignDomain ? "zero" : mag;
      }
      for (const auto& c : m.structural) {
        CHECK(oracle::holds(m, c, row));
      }
    }
    const auto model = Model::compile(m);
    Assignment zero;
    for (ParamIndex p = 0; p < model->parameter_count(); ++p) {
      zero.push_back(model->parameter(p).domain == kSignDomain ? 1 : 0);
    }
    for (const Table& t : model->structural()) CHECK(t.allows_assignment(zero));

    SystemModel pinned = m;
    for (const auto& p : m.parameters) {
      if (p.domain == kSignDomain) {
        pinned.components[0].modes[0].constraints.push_back(
            Constraint::equals(p.name, "zero"));
      }
    }
    const auto pm = Model::compile(pinned);
    CHECK(predict_all(*pm, ModeAssignment({0}), {}).has_value());
  }
}

TEST_CASE("explain on the fixtures") {
  const auto tank = fixtures::model("tank.mbd");
  const auto tp = fixtures::problem(tank, "compensate.dxp")
                      .with_obs_plus({*tank->find_parameter("dd_level")});
  const auto f = tank->assignment({{"pump", "blocked"}, {"controller", "reacting"}});
  const auto ex = explain(tp, f);
  REQUIRE(ex.size() == 1);
  const ParamIndex m1 = *tank->find_parameter("m1");
  CHECK(ex[0].assumptions == AssumptionSet{{m1, 0}});
  CHECK(ex[0].covered_obs_plus == tp.obs_plus);
  const auto ma = magnitude_assumption(*tank, m1, 0);
  REQUIRE(ma);
  CHECK(ma->to_string() == "|d_in| < |d_out|");

  const auto battery = fixtures::model("battery.mbd");
  const auto bp = fixtures::problem(battery, "battery_low.dxp").with_obs_plus({0});
  const auto bx = explain(bp, battery->assignment({{"b1", "flat"}}));
  REQUIRE(bx.size() == 1);
  const ParamIndex level = *battery->find_parameter("flat_level");
  CHECK(bx[0].assumptions == AssumptionSet{{level, *battery->find_value(level, "low")}});
  CHECK_FALSE(magnitude_assumption(*battery, level, 1).has_value());
  CHECK_THROWS_AS(explain(bp, battery->assignment({{"b1", "ok"}})), Error);

  const auto gate = fixtures::model("andgate.mbd");
  const auto gx = explain(fixtures::problem(gate, "out0_explain.dxp"),
                          gate->assignment({{"a1", "stuck0"}}));
  REQUIRE(gx.size() == 1);
  CHECK(gx[0].assumptions.empty());
}

TEST_CASE("explanations are sound and minimal") {
  gen::Rng rng(53);
  int explained = 0;
  for (int i = 0; i < 400; ++i) {
    const auto m = Model::compile(gen::random_model(rng));
    if (m->parameters_with(Role::kAssumable).empty()) continue;
    auto p = gen::random_problem(rng, m);
    std::vector<ParamIndex> all;
    for (const auto& o : p.obs) all.push_back(o.parameter);
    p = p.with_obs_plus(all);
    for (const ModeAssignment& f : m->mode_assignments()) {
      if (evaluate(p.with_obs_plus({}), f) != CandidateStatus::kDiagnosis) continue;
      const auto ex = explain(p, f);
      for (const Explanation& e : ex) {
        ++explained;
        const auto pred = predict_all(*m, f, p.cxt, e.assumptions);
        REQUIRE(pred);
        for (const Observation& o : p.obs) {
          CHECK(match((*pred)[o.parameter], o.values).implies);
        }
        for (const auto& [q, v] : e.assumptions) {
          AssumptionSet fewer = e.assumptions;
          fewer.erase(q);
          CHECK(evaluate(p, f, fewer) != CandidateStatus::kDiagnosis);
        }
      }
      for (std::size_t a = 0; a < ex.size(); ++a) {
        for (std::size_t b = 0; b < ex.size(); ++b) {
          if (a == b) continue;
          CHECK_FALSE(std::includes(ex[b].assumptions.begin(), ex[b].assumptions.end(),
                                    ex[a].assumptions.begin(), ex[a].assumptions.end()));
        }
        if (a > 0) CHECK(ex[a - 1].assumptions.size() <= ex[a].assumptions.size());
      }
    }
  }
  CHECK(explained > 20);
}
