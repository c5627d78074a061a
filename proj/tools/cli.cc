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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbd/deviation.hpp"
#include "mbd/diagnosis.hpp"
#include "mbd/dsl.hpp"

namespace mbd::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string model_path;
  std::string problem_path;
  std::string equations_path;
  std::string format = "text";
  bool explain = false;
  std::optional<std::string> obs_plus;
};

// Bad input; the message has already been written to stderr if empty.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report(const std::vector<ParseError>& errors, std::ostream& err) {
  for (const ParseError& e : errors) err << e.to_string() << "\n";
}

std::shared_ptr<const Model> load_model(const std::string& path,
                                        std::ostream& err) {
  auto parsed = parse_model(read_file(path), path);
  if (!parsed.ok()) {
    report(parsed.errors, err);
    throw InputError("");
  }
  auto violations = validate_model(*parsed.value);
  if (!violations.empty()) {
    for (const Violation& v : violations) {
      err << path << ": " << violation_kind_name(v.kind) << " at "
          << v.location << ": " << v.message << "\n";
    }
    throw InputError("");
  }
  return Model::compile(std::move(*parsed.value));
}

DiagnosticProblem load_problem(const std::string& path,
                               std::shared_ptr<const Model> model,
                               std::ostream& err) {
  auto parsed = parse_problem(read_file(path), std::move(model), path);
  if (!parsed.ok()) {
    report(parsed.errors, err);
    throw InputError("");
  }
  return std::move(*parsed.value);
}

// "p1,p2", "all" or "none"; must name observed parameters.
std::vector<ParamIndex> resolve_obs_plus(const std::string& arg,
                                         const DiagnosticProblem& problem) {
  std::vector<ParamIndex> out;
  if (arg == "none") return out;
  if (arg == "all") {
    for (const Observation& o : problem.obs) out.push_back(o.parameter);
    return out;
  }
  std::stringstream ss(arg);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto p = problem.model->find_parameter(name);
    if (!p || problem.find_observation(*p) == nullptr) {
      throw InputError("--obs-plus: '" + name + "' is not an observed parameter");
    }
    if (std::find(out.begin(), out.end(), *p) == out.end()) {
      out.push_back(*p);
    }
  }
  return out;
}

std::string format_context(const Model& model, const Context& cxt) {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, v] : cxt) {
    if (!first) out += ",";
    out += model.parameter(p).name + "=" + model.value_name(p, v);
    first = false;
  }
  return out + "}";
}

std::string format_assumptions(const Model& model, const AssumptionSet& a) {
  std::string out;
  for (const auto& [p, v] : a) {
    if (!out.empty()) out += ", ";
    out += model.parameter(p).name + "=" + model.value_name(p, v);
    if (auto m = magnitude_assumption(model, p, v)) {
      out += " (" + m->to_string() + ")";
    }
  }
  return out;
}

Json modes_json(const Model& model, const ModeAssignment& f) {
  Json modes = Json::object();
  for (std::size_t c = 0; c < f.size(); ++c) {
    modes[model.component(c).name] = model.component(c).modes[f[c]].name;
  }
  return modes;
}

Json assumptions_json(const Model& model, const AssumptionSet& a) {
  Json out = Json::object();
  for (const auto& [p, v] : a) out[model.parameter(p).name] = model.value_name(p, v);
  return out;
}

struct Candidate {
  ModeAssignment modes;
  std::vector<Explanation> explanations;
};

// Consistent candidates that fail to imply OBS+, with their explanations.
std::vector<Candidate> explain_candidates(const DiagnosticProblem& problem) {
  std::vector<Candidate> out;
  for (const ModeAssignment& f : problem.model->mode_assignments()) {
    if (evaluate(problem, f) == CandidateStatus::kConsistentOnly) {
      out.push_back({f, explain(problem, f)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.modes.fault_count() < b.modes.fault_count();
                   });
  return out;
}

int cmd_diagnose(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  auto model = load_model(config.model_path, err);
  DiagnosticProblem problem = load_problem(config.problem_path, model, err);
  if (config.obs_plus) {
    problem.obs_plus = resolve_obs_plus(*config.obs_plus, problem);
  }

  const std::vector<Diagnosis> diagnoses = diagnose(problem);
  std::vector<Candidate> candidates;
  if (config.explain) candidates = explain_candidates(problem);
  bool explained = false;
  for (const Candidate& c : candidates) explained |= !c.explanations.empty();

  if (config.format == "json") {
    Json doc;
    doc["diagnoses"] = Json::array();
    for (const Diagnosis& d : diagnoses) {
      doc["diagnoses"].push_back({{"faults", d.fault_count()},
                                  {"modes", modes_json(*model, d.modes)}});
    }
    doc["obsPlus"] = Json::array();
    for (ParamIndex p : problem.obs_plus) {
      doc["obsPlus"].push_back(model->parameter(p).name);
    }
    if (config.explain) {
      doc["explained"] = Json::array();
      for (const Candidate& c : candidates) {
        Json entry = {{"faults", c.modes.fault_count()},
                      {"modes", modes_json(*model, c.modes)},
                      {"assumptions", Json::array()}};
        for (const Explanation& e : c.explanations) {
          entry["assumptions"].push_back(assumptions_json(*model, e.assumptions));
        }
        doc["explained"].push_back(std::move(entry));
      }
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const Diagnosis& d : diagnoses) {
      out << "[faults=" << d.fault_count() << "] " << model->format(d.modes)
          << "\n";
    }
    for (const Candidate& c : candidates) {
      out << "[faults=" << c.modes.fault_count() << "] "
          << model->format(c.modes) << " (consistent only)\n";
      if (c.explanations.empty()) out << "  no assumption set implies obs+\n";
      for (const Explanation& e : c.explanations) {
        out << "  assume " << format_assumptions(*model, e.assumptions) << "\n";
      }
    }
  }
  return diagnoses.empty() && !explained ? kNoResult : kSuccess;
}

int cmd_check_predictive(const RunConfig& config, std::ostream& out,
                         std::ostream& err) {
  auto model = load_model(config.model_path, err);
  const PredictivenessReport report = check_fully_predictive(*model);
  const bool has_context = !model->parameters_with(Role::kContext).empty();
  out << "fully-predictive: " << (report.fully_predictive ? "yes" : "no")
      << "\n";
  for (const NondeterminismWitness& w : report.witnesses) {
    out << "witness:";
    if (has_context) out << " cxt=" << format_context(*model, w.cxt);
    out << " F={" << model->format(w.modes) << "} "
        << model->parameter(w.parameter).name << "="
        << model->format(w.parameter, w.prediction) << "\n";
  }
  for (const InconsistencyWitness& w : report.inconsistent) {
    out << "inconsistent:";
    if (has_context) out << " cxt=" << format_context(*model, w.cxt);
    out << " F={" << model->format(w.modes) << "}\n";
  }
  return report.fully_predictive ? kSuccess : kNoResult;
}

int cmd_compile_deviations(const RunConfig& config, std::ostream& out,
                           std::ostream& err) {
  auto parsed = parse_equations(read_file(config.equations_path),
                                config.equations_path);
  if (!parsed.ok()) {
    report(parsed.errors, err);
    throw InputError("");
  }
  out << compile_deviations(*parsed.value).to_text();
  return kSuccess;
}

std::string format_obs_plus(const Model& model,
                            const std::vector<ParamIndex>& plus) {
  std::string out = "{";
  for (std::size_t i = 0; i < plus.size(); ++i) {
    if (i > 0) out += ",";
    out += model.parameter(plus[i]).name;
  }
  return out + "}";
}

int cmd_property1(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  auto model = load_model(config.model_path, err);
  if (!check_fully_predictive(*model).fully_predictive) {
    throw InputError("model not fully predictive");
  }
  const DiagnosticProblem problem =
      load_problem(config.problem_path, model, err);
  const Property1Result result = verify_property1(problem);
  if (result.holds) {
    out << "property1: holds\n";
    return kSuccess;
  }
  const Property1Counterexample& c = *result.counterexample;
  out << "property1: violated\n";
  auto dump = [&](const std::vector<ParamIndex>& plus,
                  const std::vector<Diagnosis>& ds) {
    out << "obs+=" << format_obs_plus(*model, plus) << ":";
    for (const Diagnosis& d : ds) out << " {" << model->format(d.modes) << "}";
    out << "\n";
  };
  dump(c.obs_plus_a, c.diagnoses_a);
  dump(c.obs_plus_b, c.diagnoses_b);
  return kNoResult;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Model-based diagnosis over finite qualitative domains", "mbd"};
  app.require_subcommand(1);
  RunConfig config;

  auto* diag = app.add_subcommand("diagnose", "Enumerate diagnoses of a problem");
  diag->add_option("-m,--model", config.model_path, "Model file (.mbd)")->required();
  diag->add_option("-p,--problem", config.problem_path, "Problem file (.dxp)")->required();
  diag->add_option("--obs-plus", config.obs_plus,
                   "Observations to imply: p1,p2 | all | none");
  diag->add_flag("--explain", config.explain,
                 "Explain consistent candidates that do not imply obs+");
  diag->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check-predictive",
                                   "Check whether a model is fully predictive");
  check->add_option("-m,--model", config.model_path, "Model file (.mbd)")->required();

  auto* compile = app.add_subcommand("compile-deviations",
                                     "Compile base equations to a deviation model fragment");
  compile->add_option("-e,--equations", config.equations_path, "Equation file (.deq)")
      ->required();

  auto* prop = app.add_subcommand(
      "property1", "Check that every obs+ choice yields the same diagnoses");
  prop->add_option("-m,--model", config.model_path, "Model file (.mbd)")->required();
  prop->add_option("-p,--problem", config.problem_path, "Problem file (.dxp)")->required();

  std::vector<const char*> argv{"mbd"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*diag) return cmd_diagnose(config, out, err);
    if (*check) return cmd_check_predictive(config, out, err);
    if (*compile) return cmd_compile_deviations(config, out, err);
    if (*prop) return cmd_property1(config, out, err);
  } catch (const InputError& e) {
    if (*e.what() != '\0') err << "mbd: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "mbd: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace mbd::cli
