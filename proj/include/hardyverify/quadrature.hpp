#ifndef HARDYVERIFY_QUADRATURE_HPP
#define HARDYVERIFY_QUADRATURE_HPP

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "hardyverify/errors.hpp"

namespace hardyverify {

/// Asymptotic class of an integrand near r = 0: f(r) ~ r^power * (log(1/r))^logpow.
struct SingularityHint {
  double power = 0.0;
  double logpow = 0.0;
};

/// Asymptotic class at r -> infinity: f(r) ~ e^{-exp_rate * r} * r^power.
struct DecayHint {
  double exp_rate = 0.0;
  double power = 0.0;
};

/// Nonnegative integrand on (0, inf) with optional asymptotic hints.
struct Integrand {
  std::function<double(double)> eval;
  std::optional<SingularityHint> zero_hint;
  std::optional<DecayHint> infinity_hint;
};

enum class DivergenceEnd { None, Zero, Infinity };

struct QuadResult {
  double value = 0.0;
  bool divergent = false;
  DivergenceEnd end = DivergenceEnd::None;
  double abs_error = 0.0;
  long evaluations = 0;

  bool finite() const { return !divergent; }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Integrates a nonnegative f over (a, b), b possibly infinite.  Endpoint
/// singularities at 0 are handled by the substitution r = e^t; the infinite
/// tail is truncated by range doubling with a Cauchy criterion and (when a
/// decay hint is present) an explicit remainder bound.  Divergence is a
/// first-class result, not an exception.
QuadResult integrate(const Integrand& f, double a, double b, double tol = 1e-9);

/// Prefix integrals F(r_i) = int_0^{r_i} f over a strictly increasing grid.
/// Throws Error if f is not integrable at 0.
std::vector<double> cumulative(const Integrand& f, const std::vector<double>& grid,
                               double tol = 1e-9);

struct SupResult {
  double sup = 0.0;
  double argmax = 0.0;
  bool divergent = false;
  DivergenceEnd end = DivergenceEnd::None;
};

/// Coarse log-spaced scan (>= 64 points) followed by golden-section refinement
/// of the best bracket.  Reports divergence when g climbs monotonically into an
/// endpoint and dwarfs the median scan value.
SupResult sup_search(const std::function<double(double)>& g, double r_min, double r_max,
                     double refine_tol = 1e-8);

/// Memoized cumulative integral H(r) = int_lo^r f, evaluated at arbitrary
/// points in any order.  Queries add anchors so repeated nearby evaluations
/// stay cheap.
class CumulativeCache {
 public:
  /// H(r) = int_lo^r f; lo = 0 admits integrable endpoint singularities.
  CumulativeCache(Integrand f, double tol = 1e-10, double lo = 0.0);

  /// Throws Error if the integral diverges at the lower end.
  double at(double r);

 private:
  struct Anchor {
    double r, val, err;
  };
  Integrand f_;
  double tol_;
  double lo_;
  std::vector<Anchor> anchors_;  // sorted by r, with accumulated error bounds
};

/// Memoized tail integral T(r) = int_r^inf f, anchored from the infinite end
/// so small tails are not computed by catastrophic cancellation.
class TailCache {
 public:
  TailCache(Integrand f, double tol = 1e-10);

  /// T(r) = int_r^inf f.  Throws Error if the tail diverges.
  double at(double r);

 private:
  struct Anchor {
    double r, val, err;
  };
  Integrand f_;
  double tol_;
  std::vector<Anchor> anchors_;
};

}  // namespace hardyverify

#endif
