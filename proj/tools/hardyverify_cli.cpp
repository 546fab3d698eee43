// Batch driver: reads an experiment config, runs validators, B-constant
// computations, checkers, and parameter sweeps, and writes report.json,
// report.csv, and plotdata/*.dat into the output directory.
//
// Exit codes: 0 success, 1 verdict failure, 2 config error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <string>
#include <vector>

#include "hardyverify/config.hpp"
#include "hardyverify/hardy_core.hpp"
#include "hardyverify/inequalities.hpp"
#include "hardyverify/kernels.hpp"
#include "hardyverify/weights.hpp"

namespace hv = hardyverify;
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  unsigned long seed = 0;
  bool seed_set = false;
  double tol = 0.0;
  bool tol_set = false;
  int jobs = 1;
  bool expect_unbounded = false;
  bool allow_inadmissible = false;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

void emit_reports(const Options& opt, const json& report, const std::string& csv) {
  fs::create_directories(opt.out_dir);
  write_file(fs::path(opt.out_dir) / "report.json", report.dump(2) + "\n");
  write_file(fs::path(opt.out_dir) / "report.csv", csv);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const char* which_name(hv::BWhich w) {
  switch (w) {
    case hv::BWhich::B1: return "B1";
    case hv::BWhich::B2: return "B2";
    case hv::BWhich::B3: return "B3";
    default: return "B4";
  }
}

json validation_record(const hv::ProblemEntry& p, const hv::Validation& v) {
  json rec;
  rec["name"] = p.name;
  rec["type"] = p.type;
  rec["admissible"] = v.admissible;
  rec["derived"] = json::object();
  for (const auto& [k, val] : v.derived) rec["derived"][k] = val;
  rec["violations"] = v.violations;
  return rec;
}

// Admissibility bookkeeping for weighted Hardy records: the exponent range
// itself, plus the derived conjugates; weight strings were parsed at load.
hv::Validation validate_weighted(const hv::HardyProblem& pb) {
  hv::Validation v;
  if (!(pb.p > 1.0)) v.violations.push_back("1 < p < inf");
  if (!(pb.q > 0.0)) v.violations.push_back("0 < q < inf");
  if (pb.p > 1.0) v.derived["p_conj"] = pb.conj_p();
  if (pb.q > 1.0) v.derived["q_conj"] = pb.conj_q();
  if (pb.q < pb.p && pb.q > 0.0 && pb.p > 1.0) v.derived["gamma"] = pb.gamma();
  v.admissible = v.violations.empty();
  return v;
}

int cmd_validate(const hv::ExperimentConfig& cfg, const Options& opt) {
  json records = json::array();
  std::string csv = "name,type,admissible,violations\n";
  bool all_ok = true;
  for (const auto& p : cfg.problems) {
    hv::Validation v = hv::is_weighted_hardy(p)
                           ? validate_weighted(hv::make_hardy_problem(cfg, p))
                           : hv::validate(hv::make_inequality_spec(cfg, p));
    all_ok = all_ok && v.admissible;
    records.push_back(validation_record(p, v));
    csv += p.name + "," + p.type + "," + (v.admissible ? "true" : "false") + "," +
           join(v.violations, "; ") + "\n";
  }
  json report = {{"command", "validate"}, {"records", records}};
  emit_reports(opt, report, csv);
  return (all_ok || opt.allow_inadmissible) ? 0 : 1;
}

int cmd_bconst(const hv::ExperimentConfig& cfg, const Options& opt) {
  json records = json::array();
  std::string csv = "name,which,value,argmax,sandwich_upper\n";
  for (const auto& p : cfg.problems) {
    if (!hv::is_weighted_hardy(p)) continue;
    hv::HardyProblem pb = hv::make_hardy_problem(cfg, p);
    hv::BReport rep = hv::compute_B(pb);
    json rec;
    rec["name"] = p.name;
    rec["which"] = which_name(rep.which);
    if (rep.divergent) {
      rec["value"] = "divergent";
      csv += p.name + "," + which_name(rep.which) + ",divergent,,\n";
    } else {
      rec["value"] = rep.value;
      if (rep.has_argmax) rec["argmax"] = rep.argmax_R;
      if (rep.sandwich_upper > 0.0) rec["sandwich_upper"] = rep.sandwich_upper;
      csv += p.name + "," + which_name(rep.which) + "," + fmt(rep.value) + "," +
             (rep.has_argmax ? fmt(rep.argmax_R) : "") + "," +
             (rep.sandwich_upper > 0.0 ? fmt(rep.sandwich_upper) : "") + "\n";
    }
    records.push_back(std::move(rec));
  }
  json report = {{"command", "bconst"}, {"records", records}};
  emit_reports(opt, report, csv);
  return 0;
}

// B(R) curve for sup-form problems, for the plotdata files.
std::string b_curve(const hv::HardyProblem& pb) {
  if (pb.q < pb.p) return {};
  auto integrand = [&pb](const hv::WeightExpr& w) {
    hv::Integrand f;
    f.eval = [w, space = pb.space](double r) {
      return std::exp(hv::log_eval(w, r) + space.log_density(r));
    };
    f.zero_hint = hv::SingularityHint{w.a + pb.space.zero_power(), w.b};
    f.infinity_hint = hv::DecayHint{-(w.kappa + pb.space.infinity_rate()),
                                    w.a + pb.space.infinity_power()};
    return f;
  };
  const bool inner = pb.direction == hv::Direction::Inner;
  const hv::WeightExpr head_w = inner ? pb.psi_dual() : pb.phi;
  const hv::WeightExpr tail_w = inner ? pb.phi : pb.psi_dual();
  std::string out;
  try {
    hv::CumulativeCache head(integrand(head_w));
    hv::TailCache tail(integrand(tail_w));
    const double e_head = inner ? 1.0 / pb.conj_p() : 1.0 / pb.q;
    const double e_tail = inner ? 1.0 / pb.q : 1.0 / pb.conj_p();
    for (int i = 0; i <= 40; ++i) {
      const double R = std::pow(10.0, -2.0 + 4.0 * i / 40.0);
      const double b = std::pow(tail.at(R), e_tail) * std::pow(head.at(R), e_head);
      if (!std::isfinite(b)) return {};
      out += fmt(R) + " " + fmt(b) + "\n";
    }
  } catch (const hv::Error&) {
    return {};  // one of the pieces diverges; no curve
  }
  return out;
}

const char* verdict_name(hv::RatioVerdict v) {
  switch (v) {
    case hv::RatioVerdict::Bounded: return "bounded";
    case hv::RatioVerdict::Unbounded: return "unbounded";
    default: return "inconclusive";
  }
}

struct CheckOutcome {
  json record;
  std::vector<std::string> csv_rows;
  std::string plot_name;
  std::string plot_data;
  bool pass = false;
};

double profile_bump(double x, double center, double width) {
  const double t = (x - center) / width;
  return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
}

double kernel_order(const hv::InequalitySpec& spec) {
  const double d = spec.dim();
  struct Visitor {
    double d;
    double operator()(const hv::HardySobolevSpec& s) const { return s.alpha; }
    double operator()(const hv::HardySpec& s) const { return s.alpha > 0.0 ? s.alpha : d / s.p; }
    double operator()(const hv::CriticalHardySpec& s) const { return d / s.p; }
    double operator()(const hv::CKNSpec& s) const { return s.alpha; }
    double operator()(const hv::GNSpec& s) const { return s.alpha; }
    double operator()(const hv::CriticalCKNSpec& s) const { return d / s.p1; }
    double operator()(const hv::HLSSpec& s) const { return s.a2; }
    double operator()(const hv::UncertaintySpec& s) const { return s.alpha; }
    double operator()(const hv::UncertaintyCriticalSpec& s) const { return d / s.p; }
  };
  return std::visit(Visitor{d}, spec.kind);
}

CheckOutcome check_inequality(const hv::ExperimentConfig& cfg, const hv::ProblemEntry& p,
                              const Options& opt) {
  CheckOutcome out;
  hv::InequalitySpec spec = hv::make_inequality_spec(cfg, p);
  hv::Validation v = hv::validate(spec);
  out.record = validation_record(p, v);
  if (spec.space.kind != hv::PolarSpace::Kind::Euclidean || spec.dim() != 1.0) {
    // Numerics run on the line model only; other spaces are validation-only.
    out.record["verdict"] = v.admissible ? "validated" : "inadmissible";
    out.pass = v.admissible || opt.allow_inadmissible || opt.expect_unbounded;
    out.csv_rows.push_back(p.name + "," + p.type + ",," + std::string(out.record["verdict"]));
    return out;
  }
  const double order = kernel_order(spec);
  if (!(order > 0.0) || order > spec.dim())
    throw hv::ConfigError("problem \"" + p.name +
                          "\": kernel order must lie in (0, d]; got " + fmt(order));
  hv::KernelBound kernel = hv::KernelBound::make(order, spec.dim(), spec.char_rate);
  // Admissible specs get a fixed bump; inadmissible ones get a concentrating
  // family so genuine unboundedness shows up as geometric ratio growth.
  hv::ProfileFamily1D profile =
      v.admissible ? hv::fixed_profile([](double x) { return profile_bump(x, 0.0, 1.5); })
                   : hv::ProfileFamily1D([](int level, double x) {
                       const double w = 0.5 * std::pow(0.25, level);
                       return profile_bump(x, 0.0, w) / w;
                     });
  auto finish_ratio = [&](const hv::RatioReport& rep, json extras = json::object()) {
    out.record["verdict"] = verdict_name(rep.verdict);
    out.record["max_ratio"] = rep.max_ratio;
    out.record["ratios"] = rep.ratios;
    for (auto& [k, val] : extras.items()) out.record[k] = val;
    for (size_t lvl = 0; lvl < rep.ratios.size(); ++lvl)
      out.csv_rows.push_back(p.name + "," + p.type + "," + std::to_string(lvl) + "," +
                             fmt(rep.ratios[lvl]) + "," + verdict_name(rep.verdict));
    out.plot_name = p.name + "_ratio.dat";
    for (size_t lvl = 0; lvl < rep.refinement_trend.size(); ++lvl)
      out.plot_data += std::to_string(lvl) + " " + fmt(rep.refinement_trend[lvl]) + "\n";
    out.pass = rep.verdict == hv::RatioVerdict::Bounded ||
               (opt.expect_unbounded && rep.verdict == hv::RatioVerdict::Unbounded);
  };
  if (p.type == "hardy_sobolev" || p.type == "hardy") {
    finish_ratio(hv::check_hardy_sobolev(spec, profile, kernel, cfg.grid));
  } else if (p.type == "critical_hardy") {
    finish_ratio(hv::check_critical_hardy(spec, profile, kernel, cfg.grid));
  } else if (p.type == "ckn" || p.type == "gn") {
    hv::CKNReport rep = hv::check_ckn(spec, profile, kernel, cfg.grid);
    finish_ratio(rep.ratio, {{"holder_lhs", rep.holder_lhs},
                             {"holder_rhs", rep.holder_rhs},
                             {"holder_holds", rep.holder_holds}});
    out.pass = out.pass && rep.holder_holds;
  } else if (p.type == "hls") {
    auto fd = [](double x) { return profile_bump(x, -0.5, 1.0); };
    auto gd = [](double x) { return profile_bump(x, 0.5, 1.0); };
    finish_ratio(hv::check_hls(spec, fd, gd, kernel, cfg.grid));
  } else if (p.type == "uncertainty") {
    hv::UncertaintyReport rep = hv::check_uncertainty(
        spec, [](double x) { return profile_bump(x, 0.0, 1.5); }, kernel, cfg.grid);
    out.record["verdict"] = rep.pass ? "pass" : "fail";
    out.record["lhs"] = rep.lhs;
    out.record["rhs"] = rep.rhs;
    out.record["kappa"] = rep.kappa;
    out.record["holder_holds"] = rep.holder_holds;
    out.csv_rows.push_back(p.name + "," + p.type + ",," +
                           std::string(rep.pass ? "pass" : "fail"));
    out.pass = rep.pass && rep.holder_holds;
  } else {
    // critical_ckn, uncertainty_critical: validation-only records.
    out.record["verdict"] = v.admissible ? "validated" : "inadmissible";
    out.pass = v.admissible || opt.allow_inadmissible || opt.expect_unbounded;
    out.csv_rows.push_back(p.name + "," + p.type + ",," + std::string(out.record["verdict"]));
  }
  return out;
}

CheckOutcome check_weighted(const hv::ExperimentConfig& cfg, const hv::ProblemEntry& p,
                            const Options& opt) {
  CheckOutcome out;
  hv::HardyProblem pb = hv::make_hardy_problem(cfg, p);
  std::vector<hv::RadialTestFunction> family;
  for (double R : {0.5, 1.0, 2.0}) family.push_back(hv::RadialTestFunction::near_extremizer(R));
  const unsigned long seed = opt.seed_set ? opt.seed : cfg.families.seed;
  for (int i = 0; i < cfg.families.count; ++i)
    family.push_back(hv::RadialTestFunction::piecewise_random(
        static_cast<unsigned>(seed + 1000ul * i), cfg.families.knots));
  hv::SandwichVerdict sv = hv::sandwich_check(pb, family, cfg.ratio_slack);
  const char* verdict = sv.kind == hv::SandwichVerdict::Kind::Pass ? "pass"
                        : sv.kind == hv::SandwichVerdict::Kind::DivergenceConfirmed
                            ? "divergence_confirmed"
                            : "fail";
  out.record["name"] = p.name;
  out.record["type"] = p.type;
  out.record["verdict"] = verdict;
  if (!sv.b.divergent) out.record["b_value"] = sv.b.value;
  out.record["which"] = which_name(sv.b.which);
  out.record["max_ratio"] = sv.max_ratio;
  out.record["extremizer_ratio"] = sv.extremizer_ratio;
  if (!sv.detail.empty()) out.record["detail"] = sv.detail;
  out.csv_rows.push_back(p.name + "," + p.type + ",," + verdict);
  out.pass = sv.kind == hv::SandwichVerdict::Kind::Pass ||
             (opt.expect_unbounded &&
              sv.kind == hv::SandwichVerdict::Kind::DivergenceConfirmed);
  out.plot_name = p.name + "_bcurve.dat";
  out.plot_data = b_curve(pb);
  return out;
}

int cmd_check(const hv::ExperimentConfig& cfg, const Options& opt) {
  const size_t n = cfg.problems.size();
  std::vector<CheckOutcome> outcomes(n);
  auto run_one = [&](size_t i) {
    const auto& p = cfg.problems[i];
    outcomes[i] = hv::is_weighted_hardy(p) ? check_weighted(cfg, p, opt)
                                           : check_inequality(cfg, p, opt);
  };
  if (opt.jobs > 1 && n > 1) {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    const int workers = std::min<int>(opt.jobs, static_cast<int>(n));
    for (int w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, [&] {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) run_one(i);
      }));
    for (auto& f : futs) f.get();  // rethrows worker exceptions
  } else {
    for (size_t i = 0; i < n; ++i) run_one(i);
  }
  json records = json::array();
  std::string csv = "name,type,level,value,verdict\n";
  bool all_pass = true;
  fs::create_directories(fs::path(opt.out_dir) / "plotdata");
  for (const auto& oc : outcomes) {
    records.push_back(oc.record);
    for (const auto& row : oc.csv_rows) csv += row + "\n";
    all_pass = all_pass && oc.pass;
    if (!oc.plot_name.empty() && !oc.plot_data.empty())
      write_file(fs::path(opt.out_dir) / "plotdata" / oc.plot_name, oc.plot_data);
  }
  json report = {{"command", "check"}, {"records", records}};
  emit_reports(opt, report, csv);
  return all_pass ? 0 : 1;
}

int cmd_sweep(const hv::ExperimentConfig& cfg, const Options& opt) {
  if (!cfg.sweep) throw hv::ConfigError("sweep command needs a \"sweep\" section");
  const hv::SweepConfig& sw = *cfg.sweep;
  const hv::ProblemEntry* base = nullptr;
  for (const auto& p : cfg.problems)
    if (p.name == sw.problem) base = &p;
  if (base == nullptr) throw hv::ConfigError("sweep problem \"" + sw.problem + "\" not found");
  if (base->params.count(sw.axis) == 0)
    throw hv::ConfigError("sweep axis \"" + sw.axis + "\" is not a numeric field of \"" +
                          sw.problem + "\"");
  json records = json::array();
  std::string csv = sw.axis + ",verdict,transition\n";
  std::string prev;
  for (int i = 0; i < sw.steps; ++i) {
    const double value =
        sw.steps == 1 ? sw.from : sw.from + (sw.to - sw.from) * i / (sw.steps - 1);
    hv::ProblemEntry entry = *base;
    entry.params[sw.axis] = value;
    std::string verdict;
    if (hv::is_weighted_hardy(entry)) {
      hv::BReport rep = hv::compute_B(hv::make_hardy_problem(cfg, entry));
      verdict = rep.divergent ? "divergent" : "finite";
    } else {
      verdict = hv::validate(hv::make_inequality_spec(cfg, entry)).admissible
                    ? "admissible"
                    : "inadmissible";
    }
    const bool transition = !prev.empty() && verdict != prev;
    records.push_back(json{{"value", value}, {"verdict", verdict}, {"transition", transition}});
    csv += fmt(value) + "," + verdict + "," + (transition ? "1" : "0") + "\n";
    prev = verdict;
  }
  json report = {{"command", "sweep"},
                 {"problem", sw.problem},
                 {"axis", sw.axis},
                 {"records", records}};
  emit_reports(opt, report, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-weight Hardy inequality verification driver"};
  app.require_subcommand(1);
  Options opt;
  std::string command;
  for (const char* name : {"validate", "bconst", "check", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", opt.config_path, "experiment config (JSON)")->required();
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--seed", opt.seed, "override the family seed")
        ->each([&opt](const std::string&) { opt.seed_set = true; });
    sub->add_option("--tol", opt.tol, "override the quadrature tolerance")
        ->each([&opt](const std::string&) { opt.tol_set = true; });
    sub->add_option("--jobs", opt.jobs, "worker threads for the check command");
    sub->add_flag("--expect-unbounded", opt.expect_unbounded,
                  "treat unbounded/divergent verdicts as success");
    sub->add_flag("--allow-inadmissible", opt.allow_inadmissible,
                  "inadmissible records do not fail validation");
    sub->callback([&command, name] { command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    hv::ExperimentConfig cfg = hv::load_config_file(opt.config_path);
    if (opt.seed_set) cfg.families.seed = opt.seed;
    if (opt.tol_set) cfg.quad_tol = opt.tol;
    if (command == "validate") return cmd_validate(cfg, opt);
    if (command == "bconst") return cmd_bconst(cfg, opt);
    if (command == "check") return cmd_check(cfg, opt);
    return cmd_sweep(cfg, opt);
  } catch (const hv::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
