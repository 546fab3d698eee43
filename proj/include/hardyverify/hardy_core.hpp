#ifndef HARDYVERIFY_HARDY_CORE_HPP
#define HARDYVERIFY_HARDY_CORE_HPP

#include <functional>
#include <memory>
#include <vector>

#include "hardyverify/quadrature.hpp"
#include "hardyverify/weights.hpp"

namespace hardyverify {

enum class Direction { Inner, Outer };

/// One instance of the two-weight integral Hardy inequality
///   ( int ( int_{B(a,|x|)} f )^q phi )^{1/q} <= C ( int f^p psi )^{1/p}
/// (Inner; Outer integrates f over the complement of the ball).
struct HardyProblem {
  PolarSpace space;
  double p = 2.0;
  double q = 2.0;
  Direction direction = Direction::Inner;
  WeightExpr phi;
  WeightExpr psi;

  double conj_p() const { return p / (p - 1.0); }
  double conj_q() const { return q / (q - 1.0); }
  /// 1/gamma = 1/q - 1/p, defined for q < p.
  double gamma() const { return 1.0 / (1.0 / q - 1.0 / p); }
  /// psi^{1-p'}, the transformed weight appearing in every B-constant.
  WeightExpr psi_dual() const { return power_transform(psi, 1.0 - conj_p()); }
};

enum class BWhich { B1, B2, B3, B4 };

/// A computed Muckenhoupt-type constant.
struct BReport {
  BWhich which = BWhich::B1;
  bool divergent = false;
  DivergenceEnd end = DivergenceEnd::None;
  double value = 0.0;
  bool has_argmax = false;
  double argmax_R = 0.0;   // sup-form constants only
  double error_estimate = 0.0;
  double sandwich_upper = 0.0;  // (p')^{1/p'} p^{1/q} * value, sup-form only
};

BReport compute_B1(const HardyProblem& pb);
BReport compute_B2(const HardyProblem& pb);
BReport compute_B3(const HardyProblem& pb);
BReport compute_B4(const HardyProblem& pb);
/// Dispatch on p<=q vs q<p and the problem direction.
BReport compute_B(const HardyProblem& pb);

/// Radial test function descriptors for exercising the inequality.
struct RadialTestFunction {
  enum class Kind {
    NearExtremizer,   // f = psi^{1-p'} on (0,R): certifies ratio >= B(R)
    FkExtremizer,     // blow-up family indexed by k (alpha_k = 2^{-k}, beta_k = 2^k)
    PowerBump,        // f = r^{exponent} on (0,R)
    PiecewiseRandom,  // seeded piecewise-constant function
  };
  Kind kind = Kind::NearExtremizer;
  double R = 1.0;
  double exponent = 0.0;
  int k = 1;
  unsigned seed = 0;
  int knots = 8;

  static RadialTestFunction near_extremizer(double R) { return {Kind::NearExtremizer, R}; }
  static RadialTestFunction fk(int k) {
    RadialTestFunction f;
    f.kind = Kind::FkExtremizer;
    f.k = k;
    return f;
  }
  static RadialTestFunction power_bump(double exponent, double R) {
    RadialTestFunction f;
    f.kind = Kind::PowerBump;
    f.exponent = exponent;
    f.R = R;
    return f;
  }
  static RadialTestFunction piecewise_random(unsigned seed, int knots = 8) {
    RadialTestFunction f;
    f.kind = Kind::PiecewiseRandom;
    f.seed = seed;
    f.knots = knots;
    return f;
  }
};

/// Left-hand side (int (F_f)^q phi S dr) with F_f the ball (or complement)
/// cumulative of f.  Returns +inf on a divergent LHS.
double lhs(const HardyProblem& pb, const RadialTestFunction& f);

/// (int f^p psi S dr)^{1/p}.
double rhs_norm(const HardyProblem& pb, const RadialTestFunction& f);

/// Scale-invariant quotient lhs^{1/q} / rhs_norm; throws ZeroDenominator.
double ratio(const HardyProblem& pb, const RadialTestFunction& f);

struct SandwichVerdict {
  enum class Kind { Pass, Fail, DivergenceConfirmed };
  Kind kind = Kind::Fail;
  BReport b;
  double max_ratio = 0.0;        // empirical lower bound on the best constant
  double extremizer_ratio = 0.0; // ratio of the NearExtremizer at argmax
  std::string detail;
};

/// Verifies B <= C <= (p')^{1/p'} p^{1/q} B against a family of test
/// functions; on a divergent B, confirms unboundedness via the blow-up family.
SandwichVerdict sandwich_check(const HardyProblem& pb,
                               const std::vector<RadialTestFunction>& family,
                               double tol_total = 1e-4);

}  // namespace hardyverify

#endif
