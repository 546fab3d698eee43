#ifndef HARDYVERIFY_WEIGHTS_HPP
#define HARDYVERIFY_WEIGHTS_HPP

#include <string>

#include "hardyverify/polar_space.hpp"

namespace hardyverify {

/// Closed-form radial weight: scale * r^a * (log(e+1/r))^b * e^{kappa r}.
/// Powers combine exactly under power_transform, so transforms like
/// psi^{1-p'} never accumulate floating error in the exponents.
struct WeightExpr {
  double a = 0.0;      // power atom r^a
  double b = 0.0;      // log atom (log(e+1/r))^b
  double kappa = 0.0;  // exponential atom e^{kappa r}
  double scale = 1.0;

  static WeightExpr one() { return {}; }
  static WeightExpr power(double a, double scale = 1.0) { return {a, 0.0, 0.0, scale}; }

  bool operator==(const WeightExpr&) const = default;
};

double eval(const WeightExpr& w, double r);
/// log of eval, overflow-safe for large exponential rates.
double log_eval(const WeightExpr& w, double r);

/// w^t: exponents multiply, scale^t.
WeightExpr power_transform(const WeightExpr& w, double t);

WeightExpr multiply(const WeightExpr& u, const WeightExpr& v);

enum class End { Zero, Infinity };
enum class IntegrabilityClass { Converges, Diverges, Borderline };

/// Verdict on int w(r) S(r) dr near the given end, by exact exponent
/// bookkeeping against the space's density growth.
IntegrabilityClass integrability_class(const WeightExpr& w, const PolarSpace& space, End end);

/// Asymptotic behavior ~ e^{rate r} r^{pow} (log 1/r)^{logpow} (log log)^{loglogpow};
/// near 0 the exponential is inert and the log means log(1/r), at infinity the
/// log-plus atom is inert and generated logs mean log r.
struct Asym {
  double rate = 0.0;
  double pow = 0.0;
  double logpow = 0.0;
  double loglogpow = 0.0;

  bool grows() const {
    if (rate != 0.0) return rate > 0.0;
    if (pow != 0.0) return pow > 0.0;
    if (logpow != 0.0) return logpow > 0.0;
    return loglogpow > 0.0;
  }
  bool decays() const {
    if (rate != 0.0) return rate < 0.0;
    if (pow != 0.0) return pow < 0.0;
    if (logpow != 0.0) return logpow < 0.0;
    return loglogpow < 0.0;
  }
};

Asym asym_scaled(const Asym& x, double factor);     // x^factor (exponents scale)
Asym asym_product(const Asym& x, const Asym& y);

/// Does r^{pow} (log 1/r)^{logpow} (log log 1/r)^{loglogpow} tend to infinity
/// as r -> 0?  (The exponential atom is inert there.)
bool grows_at_zero(const Asym& a);
/// Does e^{rate r} r^{pow} (log r)^{logpow} ... tend to infinity as r -> inf?
bool grows_at_infinity(const Asym& a);

/// Asymptotics of the radial integrand w(r) S(r) near an end.
Asym integrand_asym(const WeightExpr& w, const PolarSpace& space, End end);

IntegrabilityClass classify_zero(const Asym& a);
IntegrabilityClass classify_infinity(const Asym& a);

/// Growth exponents, as R -> 0, of H(R) = int_0^R for a zero-convergent
/// integrand (so H -> 0).  H(R) ~ R^{pow+1} (log 1/R)^{logpow} etc.
Asym head_growth_zero(const Asym& a);
/// Growth exponents, as R -> 0, of T(R) = int_R^c when the integrand diverges
/// at 0 (so T -> inf); returns the identity {0,0,0,0} when it converges.
Asym tail_growth_zero(const Asym& a);
/// Growth, as R -> inf, of T(R) = int_R^inf for an infinity-convergent integrand.
Asym tail_growth_infinity(const Asym& a);
/// Growth, as R -> inf, of H(R) = int^R when divergent at infinity; identity otherwise.
Asym head_growth_infinity(const Asym& a);

/// Textual form "r^a * loge(1/r)^b * exp(k*r) * s"; round-trips exactly.
std::string format(const WeightExpr& w);
/// Parses the textual form; throws ConfigError with the offending column.
WeightExpr parse_weight(const std::string& text);

}  // namespace hardyverify

#endif
