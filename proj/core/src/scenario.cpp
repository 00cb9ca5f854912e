// Copyright 2026 The catstab Authors
//
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

#include "catstab/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace catstab {

namespace {

int line_of(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.line >= 0 ? mark.line + 1 : -1;
}

void check_keys(const YAML::Node& map, const std::string& section, const std::set<std::string>& allowed) {
  if (!map.IsMap()) throw ConfigError(section, "expected a mapping", line_of(map));
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) {
      throw ConfigError(section.empty() ? key : section + "." + key, "unknown key", line_of(kv.first));
    }
  }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field, "expected a scalar", line_of(node));
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field, "cannot convert '" + node.Scalar() + "'", line_of(node));
  }
}

template <typename T>
std::vector<T> sequence(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) throw ConfigError(field, "expected a list", line_of(node));
  std::vector<T> out;
  for (const auto& item : node) out.push_back(scalar<T>(item, field));
  return out;
}

// A complex number is either a plain real scalar or a [re, im] pair.
Complex complex_value(const YAML::Node& node, const std::string& field) {
  if (node.IsScalar()) return {scalar<double>(node, field), 0.0};
  const auto parts = sequence<double>(node, field);
  if (parts.size() != 2) throw ConfigError(field, "a complex value is written [re, im]", line_of(node));
  return {parts[0], parts[1]};
}

const YAML::Node require_key(const YAML::Node& map, const std::string& key, const std::string& section) {
  const YAML::Node node = map[key];
  if (!node) throw ConfigError(section + "." + key, "missing required key", line_of(map));
  return node;
}

// Re-raise a validation error with the line of the key it names.
template <typename F>
void anchored(const YAML::Node& section, const std::string& prefix, F&& check) {
  try {
    check();
  } catch (const ConfigError& e) {
    if (e.line() >= 0) throw;
    std::string key = e.field();
    if (key.rfind(prefix + ".", 0) == 0) key = key.substr(prefix.size() + 1);
    const YAML::Node node = section[key];
    const std::string field = e.field().rfind(prefix + ".", 0) == 0 ? e.field() : prefix + "." + e.field();
    const std::string what = std::string(e.what()).substr(e.field().size() + 2);
    throw ConfigError(field, what, node ? line_of(node) : line_of(section));
  }
}

ModelSpec parse_model(const YAML::Node& node) {
  check_keys(node, "model",
             {"mode_count", "eta", "lambda_rate", "epsilon", "Gamma", "gamma_vib", "dephasing_rate", "phi0",
              "variant", "mode_dims"});
  ModelSpec spec;
  spec.mode_count = scalar<int>(require_key(node, "mode_count", "model"), "model.mode_count");
  spec.eta = sequence<double>(require_key(node, "eta", "model"), "model.eta");
  if (node["lambda_rate"]) spec.lambda_rate = scalar<double>(node["lambda_rate"], "model.lambda_rate");
  spec.epsilon = scalar<double>(require_key(node, "epsilon", "model"), "model.epsilon");
  spec.Gamma = scalar<double>(require_key(node, "Gamma", "model"), "model.Gamma");
  if (node["gamma_vib"]) spec.gamma_vib = sequence<double>(node["gamma_vib"], "model.gamma_vib");
  if (node["dephasing_rate"]) {
    spec.dephasing_rate = scalar<double>(node["dephasing_rate"], "model.dephasing_rate");
  }
  if (node["phi0"]) spec.phi0 = scalar<double>(node["phi0"], "model.phi0");
  if (node["variant"]) {
    const YAML::Node v = node["variant"];
    try {
      spec.variant = parse_variant(scalar<std::string>(v, "model.variant"), spec.j_max);
    } catch (const ConfigError& e) {
      throw ConfigError("model.variant", std::string(e.what()).substr(e.field().size() + 2), line_of(v));
    }
  }
  spec.mode_dims = sequence<int>(require_key(node, "mode_dims", "model"), "model.mode_dims");
  anchored(node, "model", [&] { spec.validate(); });
  return spec;
}

InitialState parse_initial(const YAML::Node& node, const HilbertSpace& space) {
  check_keys(node, "initial_state", {"kind", "internal", "occupations", "amplitudes", "alpha", "sign"});
  InitialState init;
  const YAML::Node kind = require_key(node, "kind", "initial_state");
  const auto k = scalar<std::string>(kind, "initial_state.kind");
  const std::set<std::string> used = [&] {
    std::set<std::string> s;
    for (const auto& kv : node) s.insert(kv.first.as<std::string>());
    return s;
  }();
  auto only = [&](const std::set<std::string>& allowed) {
    for (const auto& key : used) {
      if (key != "kind" && key != "internal" && !allowed.count(key)) {
        throw ConfigError("initial_state." + key, "not used by kind '" + k + "'", line_of(node[key]));
      }
    }
  };
  if (k == "vacuum") {
    init.kind = InitialState::Kind::kVacuum;
    only({});
  } else if (k == "symmetric_one_phonon") {
    init.kind = InitialState::Kind::kSymmetricOnePhonon;
    only({});
  } else if (k == "fock") {
    init.kind = InitialState::Kind::kFock;
    only({"occupations"});
    init.occupations = sequence<int>(require_key(node, "occupations", "initial_state"), "initial_state.occupations");
  } else if (k == "coherent") {
    init.kind = InitialState::Kind::kCoherent;
    only({"amplitudes"});
    const YAML::Node amps = require_key(node, "amplitudes", "initial_state");
    if (!amps.IsSequence()) throw ConfigError("initial_state.amplitudes", "expected a list", line_of(amps));
    for (const auto& a : amps) init.amplitudes.push_back(complex_value(a, "initial_state.amplitudes"));
  } else if (k == "cat") {
    init.kind = InitialState::Kind::kCat;
    only({"alpha", "sign"});
    init.alpha = complex_value(require_key(node, "alpha", "initial_state"), "initial_state.alpha");
    if (node["sign"]) {
      const auto s = scalar<std::string>(node["sign"], "initial_state.sign");
      if (s == "even") {
        init.sign = ParitySign::kEven;
      } else if (s == "odd") {
        init.sign = ParitySign::kOdd;
      } else {
        throw ConfigError("initial_state.sign", "must be 'even' or 'odd'", line_of(node["sign"]));
      }
    }
  } else {
    throw ConfigError("initial_state.kind",
                      "unknown kind '" + k + "' (vacuum, symmetric_one_phonon, fock, coherent, cat)",
                      line_of(kind));
  }
  if (node["internal"]) {
    const auto s = scalar<std::string>(node["internal"], "initial_state.internal");
    if (s == "g") {
      init.internal = kGround;
    } else if (s == "e") {
      init.internal = kExcited;
    } else {
      throw ConfigError("initial_state.internal", "must be 'g' or 'e'", line_of(node["internal"]));
    }
  }
  anchored(node, "initial_state", [&] { validate(init, space); });
  return init;
}

EvolutionConfig parse_evolution(const YAML::Node& node) {
  EvolutionConfig cfg;
  if (!node) return cfg;
  check_keys(node, "evolution",
             {"t_final", "dt_max", "rel_tol", "abs_tol", "sample_interval", "steady_tol", "fixed_step",
              "snapshot_times", "stop_when_steady", "positivity_tol"});
  auto number = [&](const char* key, double& dst) {
    if (node[key]) dst = scalar<double>(node[key], std::string("evolution.") + key);
  };
  number("t_final", cfg.t_final);
  number("dt_max", cfg.dt_max);
  number("rel_tol", cfg.rel_tol);
  number("abs_tol", cfg.abs_tol);
  number("sample_interval", cfg.sample_interval);
  number("steady_tol", cfg.steady_tol);
  number("positivity_tol", cfg.positivity_tol);
  if (node["fixed_step"] && !node["fixed_step"].IsNull()) {
    cfg.fixed_step = scalar<double>(node["fixed_step"], "evolution.fixed_step");
  }
  if (node["snapshot_times"]) {
    cfg.snapshot_times = sequence<double>(node["snapshot_times"], "evolution.snapshot_times");
  }
  if (node["stop_when_steady"]) {
    cfg.stop_when_steady = scalar<bool>(node["stop_when_steady"], "evolution.stop_when_steady");
  }
  anchored(node, "evolution", [&] { cfg.validate(); });
  return cfg;
}

ScenarioOutputs parse_outputs(const YAML::Node& node, const EvolutionConfig& cfg) {
  ScenarioOutputs out;
  if (!node) return out;
  check_keys(node, "outputs", {"trajectory", "laser_settings", "oracle_report", "dark_state", "wigner"});
  auto flag = [&](const char* key, bool& dst) {
    if (node[key]) dst = scalar<bool>(node[key], std::string("outputs.") + key);
  };
  flag("trajectory", out.trajectory);
  flag("laser_settings", out.laser_settings);
  flag("oracle_report", out.oracle_report);
  flag("dark_state", out.dark_state);
  if (const YAML::Node w = node["wigner"]) {
    check_keys(w, "outputs.wigner", {"t_snapshot", "window", "n_points"});
    WignerRequest req;
    const YAML::Node t = require_key(w, "t_snapshot", "outputs.wigner");
    req.t_snapshot = scalar<double>(t, "outputs.wigner.t_snapshot");
    if (req.t_snapshot < 0.0 || req.t_snapshot > cfg.t_final) {
      throw ConfigError("outputs.wigner.t_snapshot", "must lie in [0, t_final]", line_of(t));
    }
    if (const YAML::Node win = w["window"]) {
      const auto bounds = sequence<double>(win, "outputs.wigner.window");
      if (bounds.size() != 2 || !(bounds[1] > bounds[0])) {
        throw ConfigError("outputs.wigner.window", "expected [lo, hi] with hi > lo", line_of(win));
      }
      req.window_lo = bounds[0];
      req.window_hi = bounds[1];
    }
    if (const YAML::Node n = w["n_points"]) {
      req.n_points = scalar<int>(n, "outputs.wigner.n_points");
      if (req.n_points < 2) throw ConfigError("outputs.wigner.n_points", "must be at least 2", line_of(n));
    }
    out.wigner = req;
  }
  return out;
}

Scenario parse_root(const YAML::Node& root) {
  check_keys(root, "", {"name", "model", "initial_state", "evolution", "outputs"});
  Scenario sc;
  const YAML::Node name = root["name"];
  if (!name) throw ConfigError("name", "missing required key", line_of(root));
  sc.name = scalar<std::string>(name, "name");
  const bool name_ok = !sc.name.empty() && std::all_of(sc.name.begin(), sc.name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
  if (!name_ok) throw ConfigError("name", "use letters, digits, '_' and '-' only", line_of(name));
  const YAML::Node model = root["model"];
  if (!model) throw ConfigError("model", "missing required section", line_of(root));
  sc.model = parse_model(model);
  const YAML::Node init = root["initial_state"];
  if (!init) throw ConfigError("initial_state", "missing required section", line_of(root));
  sc.initial_state = parse_initial(init, sc.model.space());
  sc.evolution = parse_evolution(root["evolution"]);
  sc.outputs = parse_outputs(root["outputs"], sc.evolution);
  return sc;
}

void emit_complex(YAML::Emitter& out, Complex z) {
  out << YAML::Flow << YAML::BeginSeq << z.real() << z.imag() << YAML::EndSeq;
}

}  // namespace

HamiltonianVariant parse_variant(const std::string& text, int& j_max) {
  if (text == "ideal") return HamiltonianVariant::kIdeal;
  if (text == "higher_order") return HamiltonianVariant::kHigherOrder;
  if (text.rfind("series(", 0) == 0 && text.size() > 8 && text.back() == ')') {
    const std::string digits = text.substr(7, text.size() - 8);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      j_max = std::stoi(digits);
      return HamiltonianVariant::kSeries;
    }
  }
  throw ConfigError("variant", "expected 'ideal', 'higher_order' or 'series(j)', got '" + text + "'");
}

Scenario parse_scenario_text(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError("yaml", e.msg, e.mark.line >= 0 ? e.mark.line + 1 : -1);
  }
  return parse_root(root);
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

std::string canonical_dump(const Scenario& sc) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << sc.name;

  const ModelSpec& m = sc.model;
  out << YAML::Key << "model" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "mode_count" << YAML::Value << m.mode_count;
  out << YAML::Key << "eta" << YAML::Value << YAML::Flow << m.eta;
  out << YAML::Key << "lambda_rate" << YAML::Value << m.lambda_rate;
  out << YAML::Key << "epsilon" << YAML::Value << m.epsilon;
  out << YAML::Key << "Gamma" << YAML::Value << m.Gamma;
  out << YAML::Key << "gamma_vib" << YAML::Value << YAML::Flow << m.gamma_vib;
  out << YAML::Key << "dephasing_rate" << YAML::Value << m.dephasing_rate;
  out << YAML::Key << "phi0" << YAML::Value << m.phi0;
  out << YAML::Key << "variant" << YAML::Value << to_string(m.variant, m.j_max);
  out << YAML::Key << "mode_dims" << YAML::Value << YAML::Flow << m.mode_dims;
  out << YAML::EndMap;

  const InitialState& s = sc.initial_state;
  out << YAML::Key << "initial_state" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << to_string(s.kind);
  out << YAML::Key << "internal" << YAML::Value << (s.internal == kExcited ? "e" : "g");
  switch (s.kind) {
    case InitialState::Kind::kFock:
      out << YAML::Key << "occupations" << YAML::Value << YAML::Flow << s.occupations;
      break;
    case InitialState::Kind::kCoherent:
      out << YAML::Key << "amplitudes" << YAML::Value << YAML::BeginSeq;
      for (Complex z : s.amplitudes) emit_complex(out, z);
      out << YAML::EndSeq;
      break;
    case InitialState::Kind::kCat:
      out << YAML::Key << "alpha" << YAML::Value;
      emit_complex(out, s.alpha);
      out << YAML::Key << "sign" << YAML::Value << (s.sign == ParitySign::kOdd ? "odd" : "even");
      break;
    default:
      break;
  }
  out << YAML::EndMap;

  const EvolutionConfig& e = sc.evolution;
  out << YAML::Key << "evolution" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "t_final" << YAML::Value << e.t_final;
  out << YAML::Key << "dt_max" << YAML::Value << e.dt_max;
  out << YAML::Key << "rel_tol" << YAML::Value << e.rel_tol;
  out << YAML::Key << "abs_tol" << YAML::Value << e.abs_tol;
  out << YAML::Key << "sample_interval" << YAML::Value << e.sample_interval;
  out << YAML::Key << "steady_tol" << YAML::Value << e.steady_tol;
  if (e.fixed_step) out << YAML::Key << "fixed_step" << YAML::Value << *e.fixed_step;
  out << YAML::Key << "snapshot_times" << YAML::Value << YAML::Flow << e.snapshot_times;
  out << YAML::Key << "stop_when_steady" << YAML::Value << e.stop_when_steady;
  out << YAML::Key << "positivity_tol" << YAML::Value << e.positivity_tol;
  out << YAML::EndMap;

  const ScenarioOutputs& o = sc.outputs;
  out << YAML::Key << "outputs" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "trajectory" << YAML::Value << o.trajectory;
  out << YAML::Key << "laser_settings" << YAML::Value << o.laser_settings;
  out << YAML::Key << "oracle_report" << YAML::Value << o.oracle_report;
  out << YAML::Key << "dark_state" << YAML::Value << o.dark_state;
  if (o.wigner) {
    out << YAML::Key << "wigner" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "t_snapshot" << YAML::Value << o.wigner->t_snapshot;
    out << YAML::Key << "window" << YAML::Value << YAML::Flow << YAML::BeginSeq << o.wigner->window_lo
        << o.wigner->window_hi << YAML::EndSeq;
    out << YAML::Key << "n_points" << YAML::Value << o.wigner->n_points;
    out << YAML::EndMap;
  }
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace catstab
