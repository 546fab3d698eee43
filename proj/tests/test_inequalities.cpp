#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hardyverify/inequalities.hpp"

using namespace hardyverify;

namespace {

InequalitySpec on_line(InequalityKind k) {
  InequalitySpec s;
  s.kind = std::move(k);
  s.space = PolarSpace::euclidean(1);
  return s;
}

double bump(double x, double center, double width) {
  const double t = (x - center) / width;
  return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
}

}  // namespace

TEST_CASE("validator: hardy-sobolev admissible and boundary cases") {
  auto ok = validate(on_line(HardySobolevSpec{2.0, 2.0, 0.5, 0.0}));
  CHECK(ok.admissible);
  CHECK(ok.derived.at("p_conj") == doctest::Approx(2.0));

  // q < p is out of scope.
  CHECK_FALSE(validate(on_line(HardySobolevSpec{3.0, 2.0, 0.5, 0.0})).admissible);
  // Balance violated, and alpha below d/p.
  auto bad = validate(on_line(HardySobolevSpec{2.0, 10.0, 0.1, 0.0}));
  CHECK_FALSE(bad.admissible);
  CHECK_FALSE(bad.violations.empty());
  // High smoothness rescues any q >= p.
  InequalitySpec hi = on_line(HardySobolevSpec{2.0, 10.0, 0.7, 0.0});
  CHECK(validate(hi).admissible);
}

TEST_CASE("validator: hardy boundary alpha = d/p is inadmissible") {
  InequalitySpec s;
  s.space = PolarSpace::euclidean(2);
  s.kind = HardySpec{2.0, 1.0};  // alpha = d/p = 1 exactly
  CHECK_FALSE(validate(s).admissible);
  s.kind = HardySpec{2.0, 0.99};
  CHECK(validate(s).admissible);
}

TEST_CASE("validator: critical window q in [p, (r-1)p')") {
  auto v1 = validate(on_line(CriticalHardySpec{2.0, 3.9, 3.0}));
  CHECK(v1.admissible);
  CHECK(v1.derived.at("q_max") == doctest::Approx(4.0));
  CHECK_FALSE(validate(on_line(CriticalHardySpec{2.0, 4.0, 3.0})).admissible);
  CHECK_FALSE(validate(on_line(CriticalHardySpec{2.0, 1.5, 3.0})).admissible);
}

TEST_CASE("validator: ckn theta = 1 reduces to the hardy-sobolev conditions") {
  InequalitySpec ckn = on_line(CKNSpec{2.0, 2.0, 3.0, 1.0, -0.1, 0.4, 0.8});
  auto v = validate(ckn);
  CHECK(v.derived.at("q_tilde") == doctest::Approx(3.0));  // q~ = r when theta = 1
  CHECK(v.derived.at("beta_eff") == doctest::Approx(0.3));
  auto reduced = reduce(ckn);
  REQUIRE(reduced.has_value());
  const auto* hs = std::get_if<HardySobolevSpec>(&reduced->kind);
  REQUIRE(hs != nullptr);
  CHECK(hs->q == doctest::Approx(3.0));
  CHECK(hs->beta == doctest::Approx(0.3));
  CHECK(validate(ckn).admissible == validate(*reduced).admissible);
}

TEST_CASE("reductions: a=b=0 to GN and q=p to hardy") {
  auto gn = reduce(on_line(CKNSpec{2.0, 2.0, 2.5, 0.7, 0.0, 0.0, 0.6}));
  REQUIRE(gn.has_value());
  CHECK(std::holds_alternative<GNSpec>(gn->kind));

  auto hardy = reduce(on_line(HardySobolevSpec{2.0, 2.0, 0.3, 0.6}));
  REQUIRE(hardy.has_value());
  const auto* h = std::get_if<HardySpec>(&hardy->kind);
  REQUIRE(h != nullptr);
  CHECK(h->alpha == doctest::Approx(0.3));

  CHECK_FALSE(reduce(on_line(HardySobolevSpec{2.0, 3.0, 0.3, 0.6})).has_value());
  CHECK_FALSE(reduce(on_line(CKNSpec{2.0, 2.0, 2.5, 0.7, 0.1, 0.0, 0.6})).has_value());
}

TEST_CASE("reduction coherence on 500 random specs") {
  std::mt19937_64 rng(20260826);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int reduced_count = 0;
  for (int i = 0; i < 500; ++i) {
    InequalitySpec s;
    s.space = PolarSpace::euclidean(1 + (i % 2));
    const double d = s.space.local_dim;
    if (i % 3 == 0) {
      // theta = 1 CKN with a <= 0 so the reduced beta is nonnegative.
      const double p = 1.1 + 2.0 * U(rng);
      const double r = p + 0.1 + 2.0 * U(rng);
      s.kind = CKNSpec{p, 1.1 + 2.0 * U(rng), r, 1.0, -U(rng) * d / (2.0 * r),
                       0.5 * U(rng), U(rng) * d};
    } else if (i % 3 == 1) {
      const double p = 1.1 + 2.0 * U(rng);
      s.kind = CKNSpec{p, p + U(rng), p + 1.0 + U(rng), 0.5 + 0.5 * U(rng), 0.0, 0.0,
                       U(rng) * d};
    } else {
      const double p = 1.1 + 2.0 * U(rng);
      const double alpha = U(rng) * d / p;
      s.kind = HardySobolevSpec{p, p, alpha, alpha * p};
    }
    auto r = reduce(s);
    if (!r.has_value()) continue;
    ++reduced_count;
    if (validate(s).admissible) CHECK(validate(*r).admissible);
  }
  CHECK(reduced_count > 400);
}

TEST_CASE("hardy-sobolev grid check: zero input and stable admissible ratio") {
  InequalitySpec s = on_line(HardySobolevSpec{2.0, 2.0, 0.5, 0.0});
  KernelBound k = KernelBound::make(0.5, 1.0);
  GridSpec grid{8.0, 256, 3};

  auto zero = check_hardy_sobolev(s, fixed_profile([](double) { return 0.0; }), k, grid);
  CHECK(zero.max_ratio == 0.0);
  CHECK(zero.verdict == RatioVerdict::Bounded);

  auto rep = check_hardy_sobolev(
      s, fixed_profile([](double x) { return bump(x, 0.4, 1.2); }), k, grid);
  REQUIRE(rep.ratios.size() == 3);
  const double lo = *std::min_element(rep.ratios.begin(), rep.ratios.end());
  const double hi = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  CHECK(hi / lo < 1.05);
  CHECK(rep.verdict == RatioVerdict::Bounded);
}

TEST_CASE("hardy-sobolev grid check: inadmissible exponents blow up") {
  // Strongly violating: the concentration exponent alpha + (1-beta)/q - 1/p
  // is about -0.68, so quartering the bump width multiplies the ratio by ~2.5.
  InequalitySpec s = on_line(HardySobolevSpec{1.25, 20.0, 0.1, 0.5});
  REQUIRE_FALSE(validate(s).admissible);
  KernelBound k = KernelBound::make(0.1, 1.0);
  GridSpec grid{8.0, 512, 4};
  // Concentrating family: the bump width quarters while the grid doubles.
  ProfileFamily1D shrinking = [](int level, double x) {
    const double w = 0.5 * std::pow(0.25, level);
    return bump(x, 0.0, w) / w;
  };
  auto rep = check_hardy_sobolev(s, shrinking, k, grid);
  CHECK(rep.verdict == RatioVerdict::Unbounded);
  CHECK(rep.ratios.back() > 2.0 * rep.ratios.front());
}

TEST_CASE("hardy-sobolev grid check rejects coarse grids") {
  InequalitySpec s = on_line(HardySobolevSpec{2.0, 2.0, 0.5, 0.0});
  KernelBound k = KernelBound::make(0.5, 1.0);
  GridSpec grid{8.0, 32, 1};  // h = 0.5: singular branch unresolved
  CHECK_THROWS_AS(
      check_hardy_sobolev(s, fixed_profile([](double) { return 1.0; }), k, grid),
      GridError);
}

TEST_CASE("hardy-sobolev grid check on the plane") {
  InequalitySpec s;
  s.space = PolarSpace::euclidean(2);
  s.kind = HardySobolevSpec{2.0, 2.0, 1.0, 0.0};
  KernelBound k = KernelBound::make(1.0, 2.0);
  GridSpec grid{2.0, 48, 2};
  ProfileFamily2D g = [](int, double x, double y) { return bump(std::hypot(x, y), 0.0, 1.0); };
  auto rep = check_hardy_sobolev(s, g, k, grid);
  REQUIRE(rep.ratios.size() == 2);
  CHECK(rep.ratios[0] > 0.0);
  CHECK(std::isfinite(rep.ratios[1]));
  CHECK(rep.ratios[1] / rep.ratios[0] < 1.2);
  CHECK(rep.ratios[0] / rep.ratios[1] < 1.2);
}

TEST_CASE("region decomposition satisfies the partition bound") {
  InequalitySpec s = on_line(HardySobolevSpec{2.0, 2.0, 0.5, 0.25});
  KernelBound k = KernelBound::make(0.5, 1.0);
  GridSpec grid{8.0, 256, 1};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double c = 6.0 * U(rng) - 3.0;
    const double w = 0.3 + 2.0 * U(rng);
    auto shares = region_decomposition(
        s, [c, w](double x) { return bump(x, c, w); }, k, grid);
    CHECK(shares.holds);
    CHECK(shares.m1_share + shares.m2_share + shares.m3_share ==
          doctest::Approx(1.0));
    CHECK(shares.lhs <= shares.bound);
  }

  // Input concentrated at the origin with a mild kernel and a small q, so the
  // bulk of the left-hand mass sits at 2|y| < |x|.
  InequalitySpec flat = on_line(HardySobolevSpec{1.1, 1.2, 0.9, 0.0});
  KernelBound mild = KernelBound::make(0.9, 1.0);
  GridSpec fine{8.0, 512, 1};
  auto origin = region_decomposition(
      flat, [](double x) { return bump(x, 0.0, 0.05); }, mild, fine);
  CHECK(origin.m1_share > 0.8);

  auto zero = region_decomposition(s, [](double) { return 0.0; }, k, grid);
  CHECK(zero.holds);
  CHECK(zero.lhs == 0.0);
}

TEST_CASE("critical-exponent check is refinement-stable in the window") {
  InequalitySpec s = on_line(CriticalHardySpec{2.0, 2.0, 3.0});
  REQUIRE(validate(s).admissible);
  KernelBound k = KernelBound::make(0.5, 1.0);  // alpha = d/p
  GridSpec grid{8.0, 256, 3};
  auto zero = check_critical_hardy(s, fixed_profile([](double) { return 0.0; }), k, grid);
  CHECK(zero.max_ratio == 0.0);
  auto rep = check_critical_hardy(
      s, fixed_profile([](double x) { return bump(x, 0.0, 2.0); }), k, grid);
  const double lo = *std::min_element(rep.ratios.begin(), rep.ratios.end());
  const double hi = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  CHECK(hi / lo < 1.1);
  CHECK(rep.verdict == RatioVerdict::Bounded);
}

TEST_CASE("ckn check: theta = 1 matches the reduced ratio bit for bit") {
  InequalitySpec ckn = on_line(CKNSpec{2.0, 2.0, 2.0, 1.0, -0.25, 0.1, 0.8});
  InequalitySpec hs = *reduce(ckn);
  KernelBound k = KernelBound::make(0.8, 1.0);
  GridSpec grid{8.0, 256, 2};
  ProfileFamily1D g = fixed_profile([](double x) { return bump(x, 0.5, 1.5); });
  auto a = check_ckn(ckn, g, k, grid);
  auto b = check_hardy_sobolev(hs, g, k, grid);
  REQUIRE(a.ratio.ratios.size() == b.ratios.size());
  for (size_t i = 0; i < b.ratios.size(); ++i) CHECK(a.ratio.ratios[i] == b.ratios[i]);
  CHECK(a.holder_holds);
}

TEST_CASE("ckn check: intermediate hoelder step has nonnegative slack") {
  InequalitySpec s = on_line(CKNSpec{2.0, 2.0, 2.5, 0.7, 0.0, 0.1, 0.6});
  KernelBound k = KernelBound::make(0.6, 1.0);
  GridSpec grid{8.0, 256, 2};
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.2, 2.0);
  for (int trial = 0; trial < 6; ++trial) {
    const double c = U(rng) - 1.0, w = U(rng);
    auto rep = check_ckn(s, fixed_profile([c, w](double x) { return bump(x, c, w); }),
                         k, grid);
    CHECK(rep.holder_holds);
    CHECK(rep.holder_lhs <= rep.holder_rhs * (1.0 + 1e-12));
    CHECK(rep.ratio.max_ratio > 0.0);
  }
}

TEST_CASE("bilinear check: zero input and kernel-decay separation") {
  InequalitySpec s = on_line(HLSSpec{2.0, 2.0, 0.5, 0.5, 0.2, 0.5});
  REQUIRE(validate(s).admissible);
  KernelBound k = KernelBound::make(0.5, 1.0);
  GridSpec grid{8.0, 256, 1};
  auto zero = check_hls(s, [](double) { return 0.0; },
                        [](double x) { return bump(x, 0.0, 1.0); }, k, grid);
  CHECK(zero.max_ratio == 0.0);

  auto near = check_hls(s, [](double x) { return bump(x, -0.5, 0.5); },
                        [](double x) { return bump(x, 0.5, 0.5); }, k, grid);
  auto far = check_hls(s, [](double x) { return bump(x, -6.0, 0.5); },
                       [](double x) { return bump(x, 6.0, 0.5); }, k, grid);
  CHECK(far.max_ratio < 0.05 * near.max_ratio);
}

TEST_CASE("uncertainty check passes and its hoelder core is exact") {
  InequalitySpec s = on_line(UncertaintySpec{2.0, 2.0, 0.5, 0.5});
  KernelBound k = KernelBound::make(0.5, 1.0);
  GridSpec grid{8.0, 256, 1};
  auto rep = check_uncertainty(s, [](double x) { return bump(x, 0.0, 1.0); }, k, grid);
  CHECK(rep.pass);
  CHECK(rep.holder_holds);
  CHECK(rep.holder_lhs >= rep.holder_rhs * (1.0 - 1e-12));
  CHECK(rep.kappa > 0.0);

  auto zero = check_uncertainty(s, [](double) { return 0.0; }, k, grid);
  CHECK(zero.pass);
}

TEST_CASE("hoelder core identity on random grid data") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(0.05, 3.0);
  std::uniform_real_distribution<double> Q(1.1, 6.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + int(U(rng) * 20);
    Eigen::VectorXd f(n), w(n);
    for (int i = 0; i < n; ++i) {
      f[i] = U(rng) - 1.5;
      w[i] = U(rng);
    }
    auto h = holder_core(f, w, Q(rng));
    CHECK(h.holds);
  }
  // Equality case: q = 2, w = 1.
  Eigen::VectorXd f = Eigen::VectorXd::Random(16);
  auto eq = holder_core(f, Eigen::VectorXd::Ones(16), 2.0);
  CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-13));
  CHECK(eq.holds);
}

TEST_CASE("critical boundary probe crosses at q = (r-1) p'") {
  auto below = critical_boundary_probe(2.0, 3.0, 3.8);
  CHECK(below.finite);
  CHECK(below.boundary_q == doctest::Approx(4.0));
  CHECK(below.log_exponent < 0.0);

  auto above = critical_boundary_probe(2.0, 3.0, 4.2);
  CHECK_FALSE(above.finite);
  CHECK(above.log_exponent > 0.0);

  // Borderline counts as divergent.
  CHECK_FALSE(critical_boundary_probe(2.0, 3.0, 4.0).finite);
  CHECK_THROWS_AS(critical_boundary_probe(1.0, 3.0, 2.0), ParameterError);
}
