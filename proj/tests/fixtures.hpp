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

#ifndef MBD_TESTS_FIXTURES_HPP_
#define MBD_TESTS_FIXTURES_HPP_

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mbd/compiled_model.hpp"
#include "mbd/dsl.hpp"
#include "mbd/problem.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(MBD_FIXTURE_DIR) + "/" + name;
}

inline std::string read(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("cannot open fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline mbd::SystemModel system_model(const std::string& name) {
  auto r = mbd::parse_model(read(name), name);
  if (!r.ok()) throw std::runtime_error(r.errors.front().to_string());
  return *r.value;
}

inline std::shared_ptr<const mbd::Model> model(const std::string& name) {
  return mbd::Model::compile(system_model(name));
}

inline mbd::DiagnosticProblem problem(std::shared_ptr<const mbd::Model> m,
                                      const std::string& name) {
  auto r = mbd::parse_problem(read(name), std::move(m), name);
  if (!r.ok()) throw std::runtime_error(r.errors.front().to_string());
  return *r.value;
}

}  // namespace fixtures

#endif  // MBD_TESTS_FIXTURES_HPP_
