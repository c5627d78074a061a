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

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "mbd/prediction.hpp"
#include "oracle.hpp"

using namespace mbd;

namespace {

Context bind(const Model& m, const std::vector<std::pair<std::string, std::string>>& kv) {
  Context cxt;
  for (const auto& [k, v] : kv) {
    const ParamIndex p = *m.find_parameter(k);
    cxt[p] = *m.find_value(p, v);
  }
  return cxt;
}

ValueSet values(const Model& m, const std::string& param,
                const std::vector<std::string>& names) {
  const ParamIndex p = *m.find_parameter(param);
  ValueSet s;
  for (const auto& n : names) s.insert(*m.find_value(p, n));
  return s;
}

}  // namespace

TEST_CASE("gate solutions") {
  const auto m = fixtures::model("andgate.mbd");
  const ParamIndex out = *m->find_parameter("out");
  const Context cxt = bind(*m, {{"in1", "1"}, {"in2", "1"}});

  const auto ok = solve(*m, m->assignment({{"a1", "ok"}}), cxt);
  REQUIRE(ok.size() == 1);
  CHECK(ok[0][out] == 1);
  const auto stuck = solve(*m, m->assignment({{"a1", "stuck0"}}), cxt);
  REQUIRE(stuck.size() == 1);
  CHECK(stuck[0][out] == 0);

  const auto all = predict_all(*m, m->assignment({{"a1", "ok"}}),
                               bind(*m, {{"in1", "0"}, {"in2", "1"}}));
  REQUIRE(all);
  CHECK((*all)[out] == ValueSet::single(0));
}

TEST_CASE("stuck gate predicts 0 in every context") {
  const auto m = fixtures::model("andgate.mbd");
  const ParamIndex out = *m->find_parameter("out");
  for (const char* a : {"0", "1"}) {
    for (const char* b : {"0", "1"}) {
      CHECK(predict(*m, m->assignment({{"a1", "stuck0"}}),
                    bind(*m, {{"in1", a}, {"in2", b}}), {}, out) ==
            ValueSet::single(0));
    }
  }
}

TEST_CASE("tank with a blocked pump and reacting controller") {
  const auto m = fixtures::model("tank.mbd");
  const auto f = m->assignment({{"pump", "blocked"}, {"controller", "reacting"}});
  const auto rows = solve(*m, f, {});
  CHECK(rows.size() == 3);
  const ParamIndex dd = *m->find_parameter("dd_level");
  const ParamIndex m1 = *m->find_parameter("m1");
  std::set<std::pair<ValueIndex, ValueIndex>> seen;
  for (const auto& r : rows) seen.insert({r[dd], r[m1]});
  // |d_in| < |d_out| gives plus, equal gives zero, greater gives minus.
  CHECK(seen == std::set<std::pair<ValueIndex, ValueIndex>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(predict(*m, f, {}, {}, dd) == ValueSet::full(3));
}

TEST_CASE("unconstrained parameter predicts its whole domain") {
  const auto m = fixtures::model("tank.mbd");
  const auto f = m->assignment({{"pump", "ok"}, {"controller", "stuck"}});
  const ParamIndex m1 = *m->find_parameter("m1");
  CHECK(predict(*m, f, {}, {}, m1) == ValueSet::full(3));
}

TEST_CASE("contradictory model is inconsistent") {
  const auto m = fixtures::model("contradictory.mbd");
  const auto f = m->assignment({{"c", "stuck0"}});
  CHECK_FALSE(predict(*m, f, {}, {}, 0).has_value());
  CHECK_FALSE(predict_all(*m, f, {}).has_value());
  CHECK(solve(*m, f, {}).empty());
}

TEST_CASE("battery projections with and without the flat level") {
  const auto m = fixtures::model("battery.mbd");
  const auto f = m->assignment({{"b1", "flat"}});
  const ParamIndex v = *m->find_parameter("voltage");
  const auto open = predict_all(*m, f, {});
  REQUIRE(open);
  CHECK((*open)[v] == values(*m, "voltage", {"zero", "low"}));
  const auto low = predict_all(*m, f, {}, bind(*m, {{"flat_level", "low"}}));
  REQUIRE(low);
  CHECK((*low)[v] == values(*m, "voltage", {"low"}));

  // Oracle agreement on the same three cases.
  const auto want = oracle::project(m->description(), {"flat"}, {});
  CHECK(want->at("voltage") == std::set<std::string>{"zero", "low"});
  const auto want_low =
      oracle::project(m->description(), {"flat"}, {{"flat_level", "low"}});
  CHECK(want_low->at("voltage") == std::set<std::string>{"low"});
}

TEST_CASE("bad inputs are rejected") {
  const auto m = fixtures::model("andgate.mbd");
  const auto f = m->assignment({{"a1", "ok"}});
  const ParamIndex out = *m->find_parameter("out");
  CHECK_THROWS_AS(solve(*m, ModeAssignment({5}), {}), Error);
  CHECK_THROWS_AS(solve(*m, f, {{out, 0}}), Error);
  CHECK_THROWS_AS(solve(*m, f, {{*m->find_parameter("in1"), 7}}), Error);
  CHECK_THROWS_AS(solve(*m, f, {}, {{out, 0}}), Error);
}

TEST_CASE("engine equals enumeration on random instances") {
  gen::Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const SystemModel sm = gen::random_model(rng);
    const auto m = Model::compile(sm);
    const ModeAssignment f = gen::random_modes(rng, *m);
    const Context cxt = gen::random_context(rng, *m);
    std::vector<std::string> modes;
    for (std::size_t c = 0; c < m->component_count(); ++c) {
      modes.push_back(m->component(c).modes[f[c]].name);
    }
    oracle::Names fixed;
    for (const auto& [p, v] : cxt) fixed[m->parameter(p).name] = m->value_name(p, v);

    const auto want = oracle::solutions(sm, modes, fixed);
    const auto got = solve(*m, f, cxt);
    REQUIRE(want.size() == got.size());
    for (std::size_t r = 0; r < got.size(); ++r) {
      for (ParamIndex p = 0; p < m->parameter_count(); ++p) {
        CHECK(m->value_name(p, got[r][p]) == want[r][p]);
      }
    }
    const auto proj = oracle::project(sm, modes, fixed);
    const auto all = predict_all(*m, f, cxt);
    REQUIRE(proj.has_value() == all.has_value());
    if (!all) continue;
    for (ParamIndex p = 0; p < m->parameter_count(); ++p) {
      std::set<std::string> names;
      for (std::size_t v : (*all)[p].indices()) names.insert(m->value_name(p, v));
      CHECK(names == proj->at(m->parameter(p).name));
      CHECK_FALSE((*all)[p].empty());
      CHECK(predict(*m, f, cxt, {}, p) == (*all)[p]);
    }
  }
}

TEST_CASE("binding more assumptions never widens a prediction") {
  gen::Rng rng(19);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto m = Model::compile(gen::random_model(rng));
    const auto& assumable = m->parameters_with(Role::kAssumable);
    if (assumable.empty()) continue;
    const ModeAssignment f = gen::random_modes(rng, *m);
    const Context cxt = gen::random_context(rng, *m);
    AssumptionSet bigger;
    for (ParamIndex p : assumable) bigger[p] = gen::uniform(rng, 0, m->domain_size(p) - 1);
    const auto base = predict_all(*m, f, cxt);
    const auto narrowed = predict_all(*m, f, cxt, bigger);
    ++checked;
    if (!base) {
      CHECK_FALSE(narrowed.has_value());
      continue;
    }
    if (!narrowed) continue;
    for (ParamIndex p = 0; p < m->parameter_count(); ++p) {
      CHECK((*narrowed)[p].is_subset_of((*base)[p]));
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("visitor can stop early") {
  const auto m = fixtures::model("tank.mbd");
  const auto f = m->assignment({{"pump", "blocked"}, {"controller", "reacting"}});
  int calls = 0;
  for_each_solution(*m, f, {}, {}, [&](std::span<const ValueIndex>) {
    ++calls;
    return false;
  });
  CHECK(calls == 1);
}
