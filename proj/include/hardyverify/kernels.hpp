#ifndef HARDYVERIFY_KERNELS_HPP
#define HARDYVERIFY_KERNELS_HPP

#include <vector>

#include "hardyverify/polar_space.hpp"
#include "hardyverify/quadrature.hpp"
#include "hardyverify/weights.hpp"

namespace hardyverify {

/// Pointwise radial upper bound A(r) for an order-alpha smoothing kernel:
///   r <= 1:  C r^{alpha-d}                       (0 < alpha < d)
///            C max(log(1/r), tail(1)/C)          (alpha = d)
///   r >  1:  C chi(r)^{-1/2} e^{-cprime r}
/// where chi(r) = e^{chi_rate r} is the character envelope.  The alpha = d
/// branch is floored at the tail's starting value so A stays non-increasing
/// across r = 1.
struct KernelBound {
  double alpha = 1.0;
  double d = 1.0;         // local dimension of the underlying space
  double C = 1.0;         // leading constant
  double cprime = 1.0;    // exponential tail rate
  double chi_rate = 0.0;  // character envelope growth rate

  /// Bound for a space with character envelope rate chi_rate and density
  /// growth kappa; the default tail rate makes A^s integrable against the
  /// density for every s >= 1.
  static KernelBound make(double alpha, double d, double chi_rate = 0.0, double kappa = 0.0);
};

double eval_kernel_bound(const KernelBound& k, double r);

/// Euclidean Bessel kernel by heat-semigroup subordination,
///   G_alpha(r) = 1/Gamma(alpha/2) int_0^inf t^{alpha/2-1} (4 pi t)^{-d/2}
///                e^{-t - r^2/(4t)} dt,
/// normalized so that alpha = 2, d = 3 gives the Yukawa kernel e^{-r}/(4 pi r).
double eval_bessel_euclidean(double alpha, double d, double r);

/// sup over a log grid on [r_lo, r_hi] of G_alpha(r) / A(r): the smallest C
/// multiplier under which the bound dominates the kernel on that range.
double bessel_bound_ratio(double alpha, double d, const KernelBound& k, double r_lo,
                          double r_hi, int samples = 200);

/// Verdict on int_1^inf A(r)^s w(r) S(r) dr: symbolic rate bookkeeping plus a
/// numeric crosscheck of the same integral.
struct TailCheck {
  IntegrabilityClass verdict = IntegrabilityClass::Converges;
  bool numeric_agrees = false;
  double value = 0.0;  // the tail integral when it converges
};

TailCheck tail_integrability(const KernelBound& k, double s, const WeightExpr& w,
                             const PolarSpace& space);

/// Discrete Young inequality on Z with a split right-hand side,
///   ||f*g||_q <= ||f||_p ||g~||_r^{r/p'} ||g||_r^{r/q},  1/p + 1/r = 1 + 1/q,
/// where g~(n) = g(-n).
struct YoungReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

YoungReport young_check(const std::vector<double>& f, const std::vector<double>& g, double p,
                        double q, double r);

}  // namespace hardyverify

#endif
