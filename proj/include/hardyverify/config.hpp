#ifndef HARDYVERIFY_CONFIG_HPP
#define HARDYVERIFY_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardyverify/hardy_core.hpp"
#include "hardyverify/inequalities.hpp"

namespace hardyverify {

/// One radial model, referenced by name from problem records.
struct SpaceEntry {
  std::string name;
  std::string model;  // euclidean | homogeneous | hyperbolic | local_global
  std::map<std::string, double> params;
};

/// One problem record.  `type` selects which exponent keys are required:
///   weighted_hardy       p, q  (+ direction, phi, psi)
///   hardy_sobolev        p, q, alpha, beta
///   hardy                p, alpha
///   critical_hardy       p, q, r
///   ckn                  p, q, r, theta, a, b, alpha
///   gn                   p, q, r, theta, alpha
///   critical_ckn         p1, q1, r1, theta, a, r
///   hls                  p, q, alpha, beta, a1, a2
///   uncertainty          p, q, alpha, beta
///   uncertainty_critical p, q, r
struct ProblemEntry {
  std::string name;
  std::string type;
  std::string space;
  std::string direction;  // weighted_hardy: inner | outer
  std::string phi, psi;   // weighted_hardy: weight expressions
  std::map<std::string, double> params;
};

struct FamilyConfig {
  unsigned long seed = 1;
  int count = 8;
  int knots = 8;
};

struct SweepConfig {
  std::string problem;  // name of the problem record to vary
  std::string axis;     // numeric key to sweep
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

struct ExperimentConfig {
  double quad_tol = 1e-9;
  double ratio_slack = 1e-4;
  GridSpec grid;
  std::vector<SpaceEntry> spaces;
  std::vector<ProblemEntry> problems;
  FamilyConfig families;
  std::optional<SweepConfig> sweep;
};

/// Parses the JSON config text.  Unknown keys anywhere are a ConfigError;
/// parse -> serialize -> parse is the identity.
ExperimentConfig parse_config(const std::string& text);
std::string serialize_config(const ExperimentConfig& cfg);
ExperimentConfig load_config_file(const std::string& path);

/// Resolves a space reference; an empty name defaults to the half line.
PolarSpace resolve_space(const ExperimentConfig& cfg, const std::string& name);

bool is_weighted_hardy(const ProblemEntry& p);
HardyProblem make_hardy_problem(const ExperimentConfig& cfg, const ProblemEntry& p);
InequalitySpec make_inequality_spec(const ExperimentConfig& cfg, const ProblemEntry& p);

}  // namespace hardyverify

#endif
