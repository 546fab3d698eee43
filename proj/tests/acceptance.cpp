// Acceptance gate: twelve pinned criteria, one pass/fail line each.
// Usage: acceptance <path-to-cli>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hardyverify/config.hpp"
#include "hardyverify/hardy_core.hpp"
#include "hardyverify/inequalities.hpp"
#include "hardyverify/kernels.hpp"

using namespace hardyverify;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int n, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s — %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++g_failures;
}

HardyProblem half_line_problem(double p, double q, Direction dir, WeightExpr phi,
                               WeightExpr psi) {
  HardyProblem pb;
  pb.space = PolarSpace::half_line();
  pb.p = p;
  pb.q = q;
  pb.direction = dir;
  pb.phi = phi;
  pb.psi = psi;
  return pb;
}

double bump(double x, double center, double width) {
  const double t = (x - center) / width;
  return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
}

// --------------------------------------------------------------------------
// 1. Closed-form B oracles
// --------------------------------------------------------------------------
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  HardyProblem classical = half_line_problem(2, 2, Direction::Inner,
                                             WeightExpr::power(-2.0), WeightExpr::one());
  BReport b1 = compute_B1(classical);
  ok = ok && !b1.divergent && std::abs(b1.value - 1.0) <= 1e-8;

  HardyProblem outer = half_line_problem(2, 2, Direction::Outer, WeightExpr::one(),
                                         WeightExpr{0.0, 0.0, 1.0, 1.0});
  BReport b2 = compute_B2(outer);  // B2(R) = sqrt(R e^{-R}), max e^{-1/2} at R = 1
  ok = ok && !b2.divergent && std::abs(b2.value - std::exp(-0.5)) <= 1e-8 &&
       std::abs(b2.argmax_R - 1.0) <= 1e-4;

  HardyProblem expo = half_line_problem(4, 2, Direction::Inner,
                                        WeightExpr{0.0, 0.0, -1.0, 1.0},
                                        WeightExpr{0.0, 0.0, 3.0, 1.0});
  BReport b3 = compute_B3(expo);  // Beta integral: 1/30
  ok = ok && !b3.divergent && std::abs(b3.value - 1.0 / 30.0) <= 1e-8;

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && secs < 1.0;
  criterion(1, ok, "closed-form B oracles (1, e^{-1/2} at R=1, 1/30) under 1 s");
}

// --------------------------------------------------------------------------
// 2. Sandwich suite on 20 seeded problems across four space models
// --------------------------------------------------------------------------
void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<HardyProblem> problems;
  auto power_problem = [](const PolarSpace& sp, double p, double q, Direction dir,
                          double A, double B) {
    HardyProblem pb;
    pb.space = sp;
    pb.p = p;
    pb.q = q;
    pb.direction = dir;
    pb.phi = WeightExpr::power(-A);
    pb.psi = WeightExpr::power(B);
    return pb;
  };
  auto exp_problem = [](const PolarSpace& sp, double p, double q, double ka, double kb) {
    HardyProblem pb;
    pb.space = sp;
    pb.p = p;
    pb.q = q;
    pb.direction = Direction::Inner;
    pb.phi = WeightExpr{0.0, 0.0, -ka, 1.0};
    pb.psi = WeightExpr{0.0, 0.0, kb, 1.0};
    return pb;
  };
  const PolarSpace e1 = PolarSpace::euclidean(1);
  const PolarSpace e3 = PolarSpace::euclidean(3);
  const PolarSpace h3 = PolarSpace::hyperbolic(3);
  const PolarSpace lg2 = PolarSpace::local_global(2.0, 1.0);
  const PolarSpace lg3 = PolarSpace::local_global(3.0, 2.0);
  // Exponents balanced so the sup-form constant is finite on each model.
  problems.push_back(power_problem(e1, 2, 2, Direction::Inner, 2.0, 0.0));
  problems.push_back(power_problem(e1, 2, 2, Direction::Inner, 2.5, -0.5));
  problems.push_back(power_problem(e1, 2, 2, Direction::Inner, 3.0, -1.0));
  problems.push_back(power_problem(e1, 2, 3, Direction::Inner, 2.5, 0.0));
  problems.push_back(power_problem(e1, 2, 3, Direction::Inner, 4.0, -1.0));
  problems.push_back(power_problem(e3, 2, 2, Direction::Inner, 4.0, 2.0));
  problems.push_back(power_problem(e3, 2, 2, Direction::Inner, 5.0, 1.0));
  problems.push_back(power_problem(e3, 2, 3, Direction::Inner, 6.0, 1.0));
  problems.push_back(power_problem(e3, 2, 3, Direction::Inner, 4.5, 2.0));
  problems.push_back(power_problem(e3, 2, 2, Direction::Outer, 2.0, 4.0));
  problems.push_back(power_problem(e3, 2, 2, Direction::Outer, 1.0, 5.0));
  problems.push_back(exp_problem(h3, 2, 2, 4.0, 1.0));
  problems.push_back(exp_problem(h3, 2, 2, 3.0, 1.5));
  problems.push_back(exp_problem(h3, 2, 4, 4.0, 1.5));
  problems.push_back(exp_problem(lg2, 2, 2, 3.0, 0.0));
  problems.push_back(exp_problem(lg2, 2, 2, 2.5, 0.5));
  problems.push_back(exp_problem(lg2, 2, 3, 3.0, 0.0));
  problems.push_back(exp_problem(lg3, 2, 2, 4.0, 1.0));
  problems.push_back(exp_problem(lg3, 2, 2, 4.5, 0.5));
  problems.push_back(exp_problem(lg3, 2, 3, 5.0, 0.5));

  bool ok = problems.size() >= 20;
  unsigned seed = 20260826u;
  for (const auto& pb : problems) {
    std::vector<RadialTestFunction> family;
    for (double R : {0.5, 1.0, 2.0}) family.push_back(RadialTestFunction::near_extremizer(R));
    for (int i = 0; i < 3; ++i)
      family.push_back(RadialTestFunction::piecewise_random(seed++, 8));
    SandwichVerdict sv = sandwich_check(pb, family);
    const bool pass = sv.kind == SandwichVerdict::Kind::Pass && !sv.b.divergent &&
                      sv.max_ratio <= sv.b.sandwich_upper * (1.0 + 1e-6) &&
                      sv.extremizer_ratio >= sv.b.value * (1.0 - 1e-4);
    if (!pass)
      std::fprintf(stderr,
                   "  [criterion 2] problem %zu: kind=%d divergent=%d B=%.6g upper=%.6g "
                   "max_ratio=%.6g extremizer=%.6g detail=%s\n",
                   static_cast<size_t>(&pb - problems.data()), static_cast<int>(sv.kind),
                   static_cast<int>(sv.b.divergent), sv.b.value, sv.b.sandwich_upper,
                   sv.max_ratio, sv.extremizer_ratio, sv.detail.c_str());
    ok = ok && pass;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && secs < 60.0;
  criterion(2, ok, "sandwich bracket on 20 seeded problems across 4 models under 60 s");
}

// --------------------------------------------------------------------------
// 3. Classical sharp-constant probe
// --------------------------------------------------------------------------
void criterion_3() {
  HardyProblem pb = half_line_problem(2, 2, Direction::Inner, WeightExpr::power(-2.0),
                                      WeightExpr::one());
  const double r1 = ratio(pb, RadialTestFunction::power_bump(-0.5 + 0.01, 1.0));
  const double oracle = std::sqrt(1.0 + 2.0 * 0.01) / (0.5 + 0.01);  // 1.98030...
  const double r2 = ratio(pb, RadialTestFunction::power_bump(-0.5 + 0.001, 1.0));
  const bool ok = std::abs(r1 - oracle) <= 1e-3 && r2 > 1.995 && r2 < 2.0 + 1e-6;
  criterion(3, ok, "power bumps approach the sharp upper bound 2 on the classical problem");
}

// --------------------------------------------------------------------------
// 4. Falsification: divergent constants expose blow-up test sequences
// --------------------------------------------------------------------------
void criterion_4() {
  std::vector<HardyProblem> divergent;
  // Sup-form (p <= q): unbalanced power pairs.
  divergent.push_back(half_line_problem(2, 2, Direction::Inner, WeightExpr::power(-4.0),
                                        WeightExpr::one()));
  divergent.push_back(half_line_problem(2, 2, Direction::Inner, WeightExpr::power(-2.0),
                                        WeightExpr::power(-2.0)));
  divergent.push_back(half_line_problem(2, 4, Direction::Inner, WeightExpr::power(-6.0),
                                        WeightExpr::one()));
  {
    HardyProblem pb = half_line_problem(2, 2, Direction::Inner, WeightExpr::power(-8.0),
                                        WeightExpr::one());
    pb.space = PolarSpace::euclidean(3);
    divergent.push_back(pb);
  }
  {
    // B1(R) ~ e^{R/4} as R -> inf; each restriction stays finite.
    HardyProblem pb = half_line_problem(2, 2, Direction::Inner,
                                        WeightExpr{0.0, 0.0, -2.5, 1.0},
                                        WeightExpr{0.0, 0.0, 1.0, 1.0});
    pb.space = PolarSpace::hyperbolic(3);
    divergent.push_back(pb);
  }
  // Integral-form (q < p): integrand divergence strong enough that the
  // windowed proof family clears 1e3 quickly.
  divergent.push_back(half_line_problem(3, 2, Direction::Inner, WeightExpr::power(-6.0),
                                        WeightExpr::one()));
  divergent.push_back(half_line_problem(3, 2, Direction::Inner, WeightExpr::power(-2.0),
                                        WeightExpr::power(-4.0)));
  divergent.push_back(half_line_problem(3, 1.5, Direction::Inner, WeightExpr::power(-6.0),
                                        WeightExpr::one()));
  divergent.push_back(half_line_problem(4, 2, Direction::Inner, WeightExpr::power(-6.0),
                                        WeightExpr::one()));
  divergent.push_back(half_line_problem(3, 2, Direction::Inner, WeightExpr::power(-10.0),
                                        WeightExpr::one()));

  bool ok = true;
  for (const auto& pb : divergent) {
    BReport b = compute_B(pb);
    if (!b.divergent) {
      ok = false;
      continue;
    }
    double best = 0.0;
    for (int k = 1; k <= 20 && best <= 1e3; ++k) {
      double r;
      try {
        r = ratio(pb, RadialTestFunction::fk(k));
      } catch (const Error&) {
        continue;
      }
      if (std::isinf(r)) r = 1e12;
      best = std::max(best, r);
    }
    ok = ok && best > 1e3;
  }
  criterion(4, ok, "10 divergent weight pairs: blow-up ratios exceed 1e3 by k <= 20");
}

// --------------------------------------------------------------------------
// 5. Yukawa kernel oracle and power-bound domination
// --------------------------------------------------------------------------
void criterion_5() {
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const double r = 0.1 * std::pow(50.0, i / 19.0);  // log-spaced in [0.1, 5]
    const double got = eval_bessel_euclidean(2.0, 3.0, r);
    const double want = std::exp(-r) / (4.0 * M_PI * r);
    ok = ok && std::abs(got - want) <= 1e-6 * want;
  }
  KernelBound kb = KernelBound::make(2.0, 3.0);
  const double C = bessel_bound_ratio(2.0, 3.0, kb, 1e-3, 1.0, 400);
  ok = ok && std::isfinite(C) && C > 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = 1e-3 * std::pow(1e3, i / 49.0);
    ok = ok && eval_bessel_euclidean(2.0, 3.0, r) <=
                   C * eval_kernel_bound(kb, r) * (1.0 + 1e-9);
  }
  criterion(5, ok, "Bessel kernel matches e^{-r}/(4 pi r) and sits under C r^{-1} on (0,1]");
}

// --------------------------------------------------------------------------
// 6. Kernel bound monotonicity
// --------------------------------------------------------------------------
void criterion_6() {
  std::vector<KernelBound> variants = {
      KernelBound::make(0.5, 1.0), KernelBound::make(1.0, 1.0),
      KernelBound::make(1.0, 2.0), KernelBound::make(2.0, 2.0),
      KernelBound::make(2.0, 3.0), KernelBound::make(3.0, 3.0),
      KernelBound::make(1.0, 2.0, 1.0, 0.5), KernelBound::make(2.0, 3.0, 2.0, 1.0)};
  bool ok = true;
  for (const auto& k : variants) {
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
      const double r = 1e-4 * std::pow(1e6, i / 999.0);  // log-spaced in [1e-4, 100]
      const double v = eval_kernel_bound(k, r);
      ok = ok && v <= prev * (1.0 + 1e-12);
      prev = v;
    }
  }
  criterion(6, ok, "kernel bound non-increasing over 1000 samples for all variants");
}

// --------------------------------------------------------------------------
// 7. Validator truth table against hand-coded conditions
// --------------------------------------------------------------------------
void criterion_7() {
  std::mt19937_64 rng(550);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int agree = 0;
  const int total = 500;
  for (int i = 0; i < total; ++i) {
    const double d = 1.0 + (i % 3);
    InequalitySpec spec;
    spec.space = PolarSpace::euclidean(d);
    bool expected = false;
    switch (i % 6) {
      case 0: case 1: {  // Hardy-Sobolev
        const double p = 1.05 + 3.0 * U(rng), q = 1.05 + 3.0 * U(rng);
        const double alpha = U(rng) * (d + 0.2), beta = U(rng) * (d + 0.2) - 0.1;
        spec.kind = HardySobolevSpec{p, q, alpha, beta};
        expected = p > 1.0 && q > 1.0 && q >= p && beta >= 0.0 && beta < d &&
                   alpha > 0.0 && alpha < d &&
                   (1.0 / p - 1.0 / q <= alpha / d - beta / (d * q) ||
                    (alpha >= d / p && alpha < d));
        break;
      }
      case 2: {  // critical window
        const double p = 1.05 + 2.0 * U(rng), r = p + 0.1 + 3.0 * U(rng);
        const double q = 0.5 + 6.0 * U(rng);
        spec.kind = CriticalHardySpec{p, q, r};
        expected = q >= p && q < (r - 1.0) * p / (p - 1.0);
        break;
      }
      case 3: case 4: {  // CKN
        const double p = 1.05 + 2.0 * U(rng), q = 1.05 + 2.0 * U(rng);
        const double r = 1.05 + 2.0 * U(rng), theta = 0.05 + 0.95 * U(rng);
        const double a = 2.0 * U(rng) - 1.0, b = 2.0 * U(rng) - 1.0;
        const double alpha = U(rng) * (d + 0.2);
        spec.kind = CKNSpec{p, q, r, theta, a, b, alpha};
        const double denom = q - (1.0 - theta) * r;
        expected = theta > (r - q) / r && denom > 0.0;
        if (expected) {
          const double qt = q * theta * r / denom;
          const double beff = q * r * (b * (1.0 - theta) - a) / denom;
          expected = p <= qt && beff >= 0.0 && beff < d && alpha > 0.0 && alpha < d &&
                     (1.0 / p - 1.0 / qt <= alpha / d - beff / (d * qt) ||
                      (alpha >= d / p && alpha < d));
        }
        break;
      }
      default: {  // HLS
        const double p = 1.05 + 2.0 * U(rng), q = 1.05 + 2.0 * U(rng);
        const double alpha = U(rng) * d, beta = U(rng) * d;
        const double a1 = U(rng) * d, a2 = U(rng) * (d + 0.2);
        spec.kind = HLSSpec{p, q, alpha, beta, a1, a2};
        expected = a1 >= 0.0 && a1 < d * p / (p + q) && a2 > 0.0 && a2 < d &&
                   1.0 / q - p / (p + q) <= (a2 - a1) / d;
        break;
      }
    }
    if (validate(spec).admissible == expected) ++agree;
  }
  // Reductions: theta = 1 and a = b = 0 agree with their reduced forms.
  bool reductions_ok = true;
  for (int i = 0; i < 100; ++i) {
    const double p = 1.05 + 2.0 * U(rng), q = 1.05 + 2.0 * U(rng);
    const double r = p + 0.1 + 2.0 * U(rng);
    InequalitySpec ckn1;
    ckn1.kind = CKNSpec{p, q, r, 1.0, -U(rng) / r, U(rng), 0.05 + 0.9 * U(rng)};
    auto red1 = reduce(ckn1);
    reductions_ok = reductions_ok && red1.has_value() &&
                    validate(ckn1).admissible == validate(*red1).admissible;
    InequalitySpec ckn0;
    ckn0.kind = CKNSpec{p, q, r, 0.3 + 0.7 * U(rng), 0.0, 0.0, 0.05 + 0.9 * U(rng)};
    auto red0 = reduce(ckn0);
    reductions_ok = reductions_ok && red0.has_value() &&
                    validate(ckn0).admissible == validate(*red0).admissible;
  }
  criterion(7, agree == total && reductions_ok,
            "validator agrees with hand-coded conditions on 500 samples + reductions");
}

// --------------------------------------------------------------------------
// 8. Critical boundary probe at (r-1)p' = 4
// --------------------------------------------------------------------------
void criterion_8() {
  BoundaryProbe below = critical_boundary_probe(2.0, 3.0, 3.8);
  BoundaryProbe above = critical_boundary_probe(2.0, 3.0, 4.2);
  const bool ok = below.finite && !above.finite &&
                  std::abs(below.boundary_q - 4.0) <= 1e-12 &&
                  below.log_exponent < 0.0 && above.log_exponent > 0.0;
  criterion(8, ok, "log-exponent constant finite at q=3.8 and divergent at q=4.2");
}

// --------------------------------------------------------------------------
// 9. Convolution-form stability / instability with region bound
// --------------------------------------------------------------------------
void criterion_9() {
  bool ok = true;
  const GridSpec grid{8.0, 256, 3};
  struct Params { double p, q, alpha, beta; };
  const std::vector<Params> admissible = {{2.0, 2.0, 0.5, 0.0},
                                          {2.0, 2.0, 0.75, 0.5},
                                          {2.0, 3.0, 0.8, 0.3},
                                          {1.5, 2.0, 0.6, 0.2},
                                          {3.0, 3.0, 0.4, 0.2}};
  for (const auto& a : admissible) {
    InequalitySpec spec;
    spec.kind = HardySobolevSpec{a.p, a.q, a.alpha, a.beta};
    if (!validate(spec).admissible) { ok = false; continue; }
    KernelBound k = KernelBound::make(a.alpha, 1.0);
    auto rep = check_hardy_sobolev(
        spec, fixed_profile([](double x) { return bump(x, 0.3, 1.4); }), k, grid);
    const double lo = *std::min_element(rep.ratios.begin(), rep.ratios.end());
    const double hi = *std::max_element(rep.ratios.begin(), rep.ratios.end());
    ok = ok && lo > 0.0 && hi / lo < 1.1 && rep.verdict == RatioVerdict::Bounded;
    auto shares = region_decomposition(
        spec, [](double x) { return bump(x, 0.3, 1.4); }, k, grid);
    ok = ok && shares.holds;
  }
  const std::vector<Params> inadmissible = {{1.25, 20.0, 0.1, 0.5},
                                            {1.2, 12.0, 0.05, 0.6}};
  const GridSpec fine{8.0, 512, 4};  // concentrating bumps need the extra levels
  for (const auto& a : inadmissible) {
    InequalitySpec spec;
    spec.kind = HardySobolevSpec{a.p, a.q, a.alpha, a.beta};
    if (validate(spec).admissible) { ok = false; continue; }
    KernelBound k = KernelBound::make(a.alpha, 1.0);
    ProfileFamily1D shrinking = [](int level, double x) {
      const double w = 0.5 * std::pow(0.25, level);
      return bump(x, 0.0, w) / w;
    };
    auto rep = check_hardy_sobolev(spec, shrinking, k, fine);
    bool grows = rep.ratios.size() >= 3;
    for (size_t i = 0; i + 1 < rep.ratios.size(); ++i)
      grows = grows && rep.ratios[i + 1] >= 2.0 * rep.ratios[i];
    ok = ok && grows && rep.verdict == RatioVerdict::Unbounded;
  }
  criterion(9, ok, "grid ratios stable (<10%) when admissible, doubling when not; "
                   "region bound holds");
}

// --------------------------------------------------------------------------
// 10. Hoelder-exact inner steps on 1000 randomized grid data sets
// --------------------------------------------------------------------------
void criterion_10() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> U(0.05, 2.0);
  bool ok = true;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 5 + static_cast<int>(U(rng) * 30);
    Eigen::VectorXd f(n), w(n);
    for (int i = 0; i < n; ++i) {
      f[i] = U(rng) - 1.0;
      w[i] = U(rng);
    }
    HolderCore h = holder_core(f, w, 1.1 + 4.0 * U(rng));
    ok = ok && h.lhs >= h.rhs;  // zero tolerance
  }
  for (int trial = 0; trial < 500; ++trial) {
    // CKN inner step on raw sequences: sum (u^t v^(1-t) |f|)^r h against the
    // split norms with exponents q~ and q.
    const int n = 5 + static_cast<int>(U(rng) * 30);
    const double theta = 0.1 + 0.8 * (U(rng) / 2.0);
    double q = 1.1 + 2.0 * U(rng), r = 1.1 + 2.0 * U(rng);
    if (q - (1.0 - theta) * r <= 0.05) r = q / (1.0 - theta) * 0.8;
    const double qt = q * theta * r / (q - (1.0 - theta) * r);
    const double h = 0.01 + U(rng);
    double lhs = 0.0, su = 0.0, sv = 0.0;
    std::vector<double> u(n), v(n), f(n);
    for (int i = 0; i < n; ++i) {
      u[i] = U(rng);
      v[i] = U(rng);
      f[i] = U(rng) - 1.0;
      lhs += std::pow(std::pow(u[i], theta) * std::pow(v[i], 1.0 - theta) *
                          std::abs(f[i]),
                      r) * h;
      su += std::pow(u[i] * std::abs(f[i]), qt) * h;
      sv += std::pow(v[i] * std::abs(f[i]), q) * h;
    }
    const double rhs = std::pow(std::pow(su, 1.0 / qt), theta * r) *
                       std::pow(std::pow(sv, 1.0 / q), (1.0 - theta) * r);
    ok = ok && lhs <= rhs;  // zero tolerance
  }
  criterion(10, ok, "interpolation and uncertainty Hoelder steps exact on 1000 data sets");
}

// --------------------------------------------------------------------------
// 11. Discrete Young inequality
// --------------------------------------------------------------------------
void criterion_11() {
  std::mt19937_64 rng(1101);
  std::uniform_real_distribution<double> U(0.0, 2.0);
  struct Triple { double p, q, r; };
  const std::vector<Triple> triples = {{2, 2, 1}, {1, 1, 1}, {1, 2, 2}, {3, 3, 1},
                                       {1.5, 6, 2}};
  bool ok = true;
  for (const auto& t : triples) {
    for (int trial = 0; trial < 100; ++trial) {
      const int nf = 2 + static_cast<int>(U(rng) * 8);
      const int ng = 2 + static_cast<int>(U(rng) * 8);
      std::vector<double> f(nf), g(ng);
      for (auto& x : f) x = U(rng);
      for (auto& x : g) x = U(rng);
      YoungReport rep = young_check(f, g, t.p, t.q, t.r);
      ok = ok && rep.holds;
    }
  }
  criterion(11, ok, "discrete Young inequality on 100 random pairs x 5 triples");
}

// --------------------------------------------------------------------------
// 12. CLI determinism
// --------------------------------------------------------------------------
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_12(const std::string& cli) {
  const fs::path work = fs::temp_directory_path() / "hardyverify_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);
  std::ofstream cfg(work / "cfg.json");
  cfg << R"({
    "grid": {"L": 8.0, "n": 256, "levels": 2},
    "spaces": [{"name": "line", "model": "euclidean", "d": 1}],
    "problems": [
      {"name": "classical", "type": "weighted_hardy", "direction": "inner",
       "p": 2, "q": 2, "phi": "r^-2", "psi": "r^0"},
      {"name": "hs", "type": "hardy_sobolev", "space": "line",
       "p": 2, "q": 2, "alpha": 0.5, "beta": 0}
    ],
    "families": {"seed": 5, "count": 3, "knots": 6}
  })";
  cfg.close();
  bool ok = true;
  for (const char* out : {"a", "b"}) {
    const std::string cmd = cli + " check --config " + (work / "cfg.json").string() +
                            " --seed 17 --out " + (work / out).string() + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    ok = ok && WEXITSTATUS(status) == 0;
  }
  ok = ok && slurp(work / "a" / "report.json") == slurp(work / "b" / "report.json") &&
       !slurp(work / "a" / "report.json").empty() &&
       slurp(work / "a" / "report.csv") == slurp(work / "b" / "report.csv");
  criterion(12, ok, "cmd_check twice with one seed yields byte-identical reports");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 1;
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12(argv[1]);
  std::printf("%s (%d of 12 failed)\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
  return g_failures == 0 ? 0 : 1;
}
