#include "hardyverify/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hardyverify/weights.hpp"

namespace hardyverify {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (allowed.count(key) == 0)
      throw ConfigError("unknown key \"" + key + "\" in " + where);
}

double get_num(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing key \"" + key + "\" in " + where);
  if (!obj[key].is_number()) throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
  return obj[key].get<double>();
}

std::string get_str(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing key \"" + key + "\" in " + where);
  if (!obj[key].is_string()) throw ConfigError("key \"" + key + "\" in " + where + " must be a string");
  return obj[key].get<std::string>();
}

const std::map<std::string, std::vector<std::string>>& problem_keys() {
  static const std::map<std::string, std::vector<std::string>> k = {
      {"weighted_hardy", {"p", "q"}},
      {"hardy_sobolev", {"p", "q", "alpha", "beta"}},
      {"hardy", {"p", "alpha"}},
      {"critical_hardy", {"p", "q", "r"}},
      {"ckn", {"p", "q", "r", "theta", "a", "b", "alpha"}},
      {"gn", {"p", "q", "r", "theta", "alpha"}},
      {"critical_ckn", {"p1", "q1", "r1", "theta", "a", "r"}},
      {"hls", {"p", "q", "alpha", "beta", "a1", "a2"}},
      {"uncertainty", {"p", "q", "alpha", "beta"}},
      {"uncertainty_critical", {"p", "q", "r"}},
  };
  return k;
}

const std::map<std::string, std::vector<std::string>>& space_keys() {
  static const std::map<std::string, std::vector<std::string>> k = {
      {"euclidean", {"d"}},
      {"homogeneous", {"Q", "sigma"}},
      {"hyperbolic", {"n"}},
      {"local_global", {"d", "kappa", "c"}},
  };
  return k;
}

SpaceEntry parse_space(const json& obj, int index) {
  const std::string where = "spaces[" + std::to_string(index) + "]";
  SpaceEntry e;
  e.name = get_str(obj, "name", where);
  e.model = get_str(obj, "model", where);
  auto it = space_keys().find(e.model);
  if (it == space_keys().end())
    throw ConfigError("unknown space model \"" + e.model + "\" in " + where);
  std::set<std::string> allowed = {"name", "model"};
  for (const auto& key : it->second) allowed.insert(key);
  reject_unknown(obj, allowed, where);
  for (const auto& key : it->second)
    if (obj.contains(key)) e.params[key] = get_num(obj, key, where);
  return e;
}

ProblemEntry parse_problem(const json& obj, int index) {
  const std::string where = "problems[" + std::to_string(index) + "]";
  ProblemEntry e;
  e.name = get_str(obj, "name", where);
  e.type = get_str(obj, "type", where);
  auto it = problem_keys().find(e.type);
  if (it == problem_keys().end())
    throw ConfigError("unknown problem type \"" + e.type + "\" in " + where);
  std::set<std::string> allowed = {"name", "type", "space"};
  if (e.type == "weighted_hardy") {
    allowed.insert("direction");
    allowed.insert("phi");
    allowed.insert("psi");
  }
  for (const auto& key : it->second) allowed.insert(key);
  reject_unknown(obj, allowed, where);
  if (obj.contains("space")) e.space = get_str(obj, "space", where);
  if (e.type == "weighted_hardy") {
    e.direction = get_str(obj, "direction", where);
    if (e.direction != "inner" && e.direction != "outer")
      throw ConfigError("direction in " + where + " must be \"inner\" or \"outer\"");
    e.phi = get_str(obj, "phi", where);
    e.psi = get_str(obj, "psi", where);
    parse_weight(e.phi);  // fail early, with column information
    parse_weight(e.psi);
  }
  for (const auto& key : it->second) e.params[key] = get_num(obj, key, where);
  return e;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(root, {"tolerances", "grid", "spaces", "problems", "families", "sweep"},
                 "config root");
  ExperimentConfig cfg;
  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    reject_unknown(t, {"quad_tol", "ratio_slack"}, "tolerances");
    if (t.contains("quad_tol")) cfg.quad_tol = get_num(t, "quad_tol", "tolerances");
    if (t.contains("ratio_slack")) cfg.ratio_slack = get_num(t, "ratio_slack", "tolerances");
  }
  if (root.contains("grid")) {
    const json& g = root["grid"];
    reject_unknown(g, {"L", "n", "levels"}, "grid");
    if (g.contains("L")) cfg.grid.L = get_num(g, "L", "grid");
    if (g.contains("n")) cfg.grid.n = static_cast<int>(get_num(g, "n", "grid"));
    if (g.contains("levels")) cfg.grid.levels = static_cast<int>(get_num(g, "levels", "grid"));
  }
  if (root.contains("spaces")) {
    if (!root["spaces"].is_array()) throw ConfigError("\"spaces\" must be an array");
    int i = 0;
    for (const auto& s : root["spaces"]) cfg.spaces.push_back(parse_space(s, i++));
  }
  if (root.contains("problems")) {
    if (!root["problems"].is_array()) throw ConfigError("\"problems\" must be an array");
    int i = 0;
    for (const auto& p : root["problems"]) cfg.problems.push_back(parse_problem(p, i++));
  }
  if (root.contains("families")) {
    const json& f = root["families"];
    reject_unknown(f, {"seed", "count", "knots"}, "families");
    if (f.contains("seed"))
      cfg.families.seed = static_cast<unsigned long>(get_num(f, "seed", "families"));
    if (f.contains("count")) cfg.families.count = static_cast<int>(get_num(f, "count", "families"));
    if (f.contains("knots")) cfg.families.knots = static_cast<int>(get_num(f, "knots", "families"));
  }
  if (root.contains("sweep")) {
    const json& s = root["sweep"];
    reject_unknown(s, {"problem", "axis", "from", "to", "steps"}, "sweep");
    SweepConfig sw;
    sw.problem = get_str(s, "problem", "sweep");
    sw.axis = get_str(s, "axis", "sweep");
    sw.from = get_num(s, "from", "sweep");
    sw.to = get_num(s, "to", "sweep");
    sw.steps = static_cast<int>(get_num(s, "steps", "sweep"));
    if (sw.steps < 0) throw ConfigError("sweep steps must be nonnegative");
    cfg.sweep = sw;
  }
  return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
  json root;
  root["tolerances"] = {{"quad_tol", cfg.quad_tol}, {"ratio_slack", cfg.ratio_slack}};
  root["grid"] = {{"L", cfg.grid.L}, {"n", cfg.grid.n}, {"levels", cfg.grid.levels}};
  root["spaces"] = json::array();
  for (const auto& s : cfg.spaces) {
    json o = {{"name", s.name}, {"model", s.model}};
    for (const auto& [k, v] : s.params) o[k] = v;
    root["spaces"].push_back(std::move(o));
  }
  root["problems"] = json::array();
  for (const auto& p : cfg.problems) {
    json o = {{"name", p.name}, {"type", p.type}};
    if (!p.space.empty()) o["space"] = p.space;
    if (p.type == "weighted_hardy") {
      o["direction"] = p.direction;
      o["phi"] = p.phi;
      o["psi"] = p.psi;
    }
    for (const auto& k : problem_keys().at(p.type)) o[k] = p.params.at(k);
    root["problems"].push_back(std::move(o));
  }
  root["families"] = {{"seed", cfg.families.seed},
                      {"count", cfg.families.count},
                      {"knots", cfg.families.knots}};
  if (cfg.sweep) {
    root["sweep"] = {{"problem", cfg.sweep->problem},
                     {"axis", cfg.sweep->axis},
                     {"from", cfg.sweep->from},
                     {"to", cfg.sweep->to},
                     {"steps", cfg.sweep->steps}};
  }
  return root.dump(2) + "\n";
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

PolarSpace resolve_space(const ExperimentConfig& cfg, const std::string& name) {
  if (name.empty()) return PolarSpace::half_line();
  for (const auto& s : cfg.spaces) {
    if (s.name != name) continue;
    auto get = [&s](const std::string& key, double fallback) {
      auto it = s.params.find(key);
      return it == s.params.end() ? fallback : it->second;
    };
    if (s.model == "euclidean") return PolarSpace::euclidean(get("d", 1.0));
    if (s.model == "homogeneous") return PolarSpace::homogeneous(get("Q", 1.0), get("sigma", 1.0));
    if (s.model == "hyperbolic") return PolarSpace::hyperbolic(static_cast<int>(get("n", 2.0)));
    return PolarSpace::local_global(get("d", 1.0), get("kappa", 0.0), get("c", 1.0));
  }
  throw ConfigError("unknown space reference: \"" + name + "\"");
}

bool is_weighted_hardy(const ProblemEntry& p) { return p.type == "weighted_hardy"; }

HardyProblem make_hardy_problem(const ExperimentConfig& cfg, const ProblemEntry& p) {
  if (!is_weighted_hardy(p))
    throw ConfigError("problem \"" + p.name + "\" is not a weighted Hardy record");
  HardyProblem pb;
  pb.space = resolve_space(cfg, p.space);
  pb.p = p.params.at("p");
  pb.q = p.params.at("q");
  pb.direction = p.direction == "inner" ? Direction::Inner : Direction::Outer;
  pb.phi = parse_weight(p.phi);
  pb.psi = parse_weight(p.psi);
  return pb;
}

InequalitySpec make_inequality_spec(const ExperimentConfig& cfg, const ProblemEntry& p) {
  InequalitySpec spec;
  spec.space = resolve_space(cfg, p.space);
  const auto& pr = p.params;
  if (p.type == "hardy_sobolev")
    spec.kind = HardySobolevSpec{pr.at("p"), pr.at("q"), pr.at("alpha"), pr.at("beta")};
  else if (p.type == "hardy")
    spec.kind = HardySpec{pr.at("p"), pr.at("alpha")};
  else if (p.type == "critical_hardy")
    spec.kind = CriticalHardySpec{pr.at("p"), pr.at("q"), pr.at("r")};
  else if (p.type == "ckn")
    spec.kind = CKNSpec{pr.at("p"), pr.at("q"), pr.at("r"), pr.at("theta"),
                        pr.at("a"),  pr.at("b"), pr.at("alpha")};
  else if (p.type == "gn")
    spec.kind = GNSpec{pr.at("p"), pr.at("q"), pr.at("r"), pr.at("theta"), pr.at("alpha")};
  else if (p.type == "critical_ckn")
    spec.kind = CriticalCKNSpec{pr.at("p1"), pr.at("q1"), pr.at("r1"),
                                pr.at("theta"), pr.at("a"), pr.at("r")};
  else if (p.type == "hls")
    spec.kind = HLSSpec{pr.at("p"),    pr.at("q"),  pr.at("alpha"),
                        pr.at("beta"), pr.at("a1"), pr.at("a2")};
  else if (p.type == "uncertainty")
    spec.kind = UncertaintySpec{pr.at("p"), pr.at("q"), pr.at("alpha"), pr.at("beta")};
  else if (p.type == "uncertainty_critical")
    spec.kind = UncertaintyCriticalSpec{pr.at("p"), pr.at("q"), pr.at("r")};
  else
    throw ConfigError("problem \"" + p.name + "\" is not an inequality record");
  return spec;
}

}  // namespace hardyverify
