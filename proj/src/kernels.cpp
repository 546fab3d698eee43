#include "hardyverify/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hardyverify {

KernelBound KernelBound::make(double alpha, double d, double chi_rate, double kappa) {
  if (!(alpha > 0) || !(alpha <= d)) throw ParameterError("KernelBound: needs 0 < alpha <= d");
  if (chi_rate < 0 || kappa < 0) throw ParameterError("KernelBound: negative growth rate");
  KernelBound k;
  k.alpha = alpha;
  k.d = d;
  k.chi_rate = chi_rate;
  // tail rate strong enough that A^s beats e^{kappa r} for every s >= 1 even
  // after the chi^{-1/2} factor is given away
  k.cprime = std::max(1.0, 4.0 * (chi_rate / 2.0 + kappa));
  return k;
}

double eval_kernel_bound(const KernelBound& k, double r) {
  if (!(r > 0)) throw ParameterError("eval_kernel_bound: r must be positive");
  if (!(k.alpha > 0) || !(k.alpha <= k.d))
    throw ParameterError("eval_kernel_bound: needs 0 < alpha <= d");
  const double tail_at_1 = std::exp(-k.chi_rate / 2.0 - k.cprime);
  if (r > 1.0) return k.C * std::exp(-k.chi_rate / 2.0 * r - k.cprime * r);
  if (k.alpha == k.d) return k.C * std::max(std::log(1.0 / r), tail_at_1);
  return k.C * std::max(std::pow(r, k.alpha - k.d), tail_at_1);
}

double eval_bessel_euclidean(double alpha, double d, double r) {
  if (!(alpha > 0) || !(d > 0)) throw ParameterError("eval_bessel_euclidean: bad parameters");
  if (!(r > 0)) throw ParameterError("eval_bessel_euclidean: r must be positive");
  const double e = alpha / 2.0 - d / 2.0 - 1.0;
  const double lc = -std::lgamma(alpha / 2.0) - (d / 2.0) * std::log(4.0 * std::numbers::pi);
  Integrand f;
  f.eval = [=](double t) { return std::exp(lc + e * std::log(t) - t - r * r / (4.0 * t)); };
  // e^{-r^2/(4t)} kills the t=0 singularity, so no hint is needed there
  f.infinity_hint = DecayHint{1.0, e};
  return integrate(f, 0.0, kInf, 1e-12).value;
}

double bessel_bound_ratio(double alpha, double d, const KernelBound& k, double r_lo, double r_hi,
                          int samples) {
  if (!(r_lo > 0) || !(r_hi > r_lo) || samples < 2)
    throw ParameterError("bessel_bound_ratio: bad range");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = r_lo * std::pow(r_hi / r_lo, static_cast<double>(i) / (samples - 1));
    worst = std::max(worst, eval_bessel_euclidean(alpha, d, r) / eval_kernel_bound(k, r));
  }
  return worst;
}

TailCheck tail_integrability(const KernelBound& k, double s, const WeightExpr& w,
                             const PolarSpace& space) {
  if (!(s > 0)) throw ParameterError("tail_integrability: s must be positive");
  TailCheck out;
  // A(r)^s w(r) S(r) ~ e^{(s(-chi_rate/2 - cprime) + w.kappa + rate_S) r} r^{w.a + pow_S}
  Asym a;
  a.rate = s * (-k.chi_rate / 2.0 - k.cprime) + w.kappa + space.infinity_rate();
  a.pow = w.a + space.infinity_power();
  out.verdict = classify_infinity(a);

  Integrand f;
  f.eval = [=, &space](double r) {
    const double la = s * std::log(eval_kernel_bound(k, r));
    return std::exp(la + log_eval(w, r) + space.log_density(r));
  };
  if (a.rate < 0) f.infinity_hint = DecayHint{-a.rate, a.pow};
  QuadResult q = integrate(f, 1.0, kInf, 1e-9);
  if (q.divergent) {
    out.numeric_agrees = (out.verdict != IntegrabilityClass::Converges);
  } else {
    out.numeric_agrees = (out.verdict == IntegrabilityClass::Converges);
    out.value = q.value;
  }
  return out;
}

namespace {

double lp_norm(const std::vector<double>& v, double p) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

YoungReport young_check(const std::vector<double>& f, const std::vector<double>& g, double p,
                        double q, double r) {
  if (f.empty() || g.empty()) throw ParameterError("young_check: empty sequence");
  if (!(p >= 1) || !(q >= 1) || !(r >= 1)) throw ParameterError("young_check: exponents >= 1");
  if (std::abs(1.0 / p + 1.0 / r - 1.0 - 1.0 / q) > 1e-12)
    throw ParameterError("young_check: needs 1/p + 1/r = 1 + 1/q");
  std::vector<double> conv(f.size() + g.size() - 1, 0.0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) conv[i + j] += f[i] * g[j];
  const double pprime = (p == 1.0) ? kInf : p / (p - 1.0);
  // on Z the reflection g~(n) = g(-n) has the same l^r norm as g
  const double gr = lp_norm(g, r);
  const double w1 = std::isinf(pprime) ? 0.0 : r / pprime;
  const double w2 = r / q;
  YoungReport rep;
  rep.lhs = lp_norm(conv, q);
  rep.rhs = lp_norm(f, p) * std::pow(gr, w1) * std::pow(gr, w2);
  rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-12);
  return rep;
}

}  // namespace hardyverify
