#include "hardyverify/hardy_core.hpp"

#include <cmath>
#include <random>

namespace hardyverify {
namespace {

constexpr double kQuadTol = 1e-10;
constexpr double kScanLo = 1e-6;
constexpr double kScanHi = 1e6;

bool diverges(IntegrabilityClass c) {
  // the double-borderline case (pow=-1, logpow=-1) diverges like log log
  return c != IntegrabilityClass::Converges;
}

/// w(r) S(r) as a quadrature integrand, evaluated in log space.
Integrand radial_integrand(const WeightExpr& w, const PolarSpace& space) {
  Integrand f;
  f.eval = [w, space](double r) { return std::exp(log_eval(w, r) + space.log_density(r)); };
  const Asym a0 = integrand_asym(w, space, End::Zero);
  f.zero_hint = SingularityHint{a0.pow, a0.logpow};
  const Asym ai = integrand_asym(w, space, End::Infinity);
  if (ai.rate < 0) f.infinity_hint = DecayHint{-ai.rate, ai.pow};
  return f;
}

BReport sup_form_constant(const HardyProblem& pb, BWhich which) {
  // B1(R) = (int_R^inf phi S)^{1/q} (int_0^R psi' S)^{1/p'}; B2 swaps the
  // tail/head roles of phi and psi' = psi^{1-p'}.
  const double pprime = pb.conj_p();
  const WeightExpr psid = pb.psi_dual();
  const bool inner = (which == BWhich::B1);
  const WeightExpr& tail_w = inner ? pb.phi : psid;   // integrated over {|x| >= R}
  const WeightExpr& head_w = inner ? psid : pb.phi;   // integrated over {|x| <= R}
  const double tail_exp = inner ? 1.0 / pb.q : 1.0 / pprime;
  const double head_exp = inner ? 1.0 / pprime : 1.0 / pb.q;

  BReport rep;
  rep.which = which;

  // factor-level divergence: the tail weight must be integrable at infinity
  // and the head weight at zero, or no R admits finite factors at all
  if (diverges(integrability_class(tail_w, pb.space, End::Infinity))) {
    rep.divergent = true;
    rep.end = DivergenceEnd::Infinity;
    return rep;
  }
  if (diverges(integrability_class(head_w, pb.space, End::Zero))) {
    rep.divergent = true;
    rep.end = DivergenceEnd::Zero;
    return rep;
  }

  // sup-level divergence at the scan endpoints, by exponent arithmetic:
  // as R->0 the tail factor may blow up while the head factor decays, and
  // symmetrically at R->inf
  const Asym tail0 = integrand_asym(tail_w, pb.space, End::Zero);
  const Asym head0 = integrand_asym(head_w, pb.space, End::Zero);
  const Asym taili = integrand_asym(tail_w, pb.space, End::Infinity);
  const Asym headi = integrand_asym(head_w, pb.space, End::Infinity);
  const Asym g0 = asym_product(asym_scaled(tail_growth_zero(tail0), tail_exp),
                               asym_scaled(head_growth_zero(head0), head_exp));
  const Asym gi = asym_product(asym_scaled(head_growth_infinity(headi), head_exp),
                               asym_scaled(tail_growth_infinity(taili), tail_exp));
  if (grows_at_zero(g0) || grows_at_infinity(gi)) {
    rep.divergent = true;
    rep.end = grows_at_zero(g0) ? DivergenceEnd::Zero : DivergenceEnd::Infinity;
    return rep;
  }

  auto tail_cache = std::make_shared<TailCache>(radial_integrand(tail_w, pb.space), kQuadTol);
  auto head_cache =
      std::make_shared<CumulativeCache>(radial_integrand(head_w, pb.space), kQuadTol);
  auto g = [=](double R) {
    const double t = tail_cache->at(R);
    const double h = head_cache->at(R);
    if (t <= 0.0 || h <= 0.0) return 0.0;
    return std::exp(tail_exp * std::log(t) + head_exp * std::log(h));
  };

  SupResult sup = sup_search(g, kScanLo, kScanHi, 1e-6);
  if (sup.divergent) {
    rep.divergent = true;
    rep.end = sup.end;
    return rep;
  }
  rep.value = sup.sup;
  rep.has_argmax = true;
  rep.argmax_R = sup.argmax;
  rep.error_estimate = 1e-8 * std::max(1.0, sup.sup);
  rep.sandwich_upper =
      std::pow(pprime, 1.0 / pprime) * std::pow(pb.p, 1.0 / pb.q) * rep.value;
  return rep;
}

BReport integral_form_constant(const HardyProblem& pb, BWhich which) {
  const double pprime = pb.conj_p();
  const double qprime = pb.conj_q();
  const double gamma = pb.gamma();
  const WeightExpr psid = pb.psi_dual();
  const bool inner = (which == BWhich::B3);

  BReport rep;
  rep.which = which;

  // For B3 the phi-tail runs to infinity and the psi'-head from zero; for B4
  // the roles of ball and complement swap.
  const End phi_div_end = inner ? End::Infinity : End::Zero;
  const End psi_div_end = inner ? End::Zero : End::Infinity;
  if (diverges(integrability_class(pb.phi, pb.space, phi_div_end))) {
    rep.divergent = true;
    rep.end = (phi_div_end == End::Zero) ? DivergenceEnd::Zero : DivergenceEnd::Infinity;
    return rep;
  }
  if (diverges(integrability_class(psid, pb.space, psi_div_end))) {
    rep.divergent = true;
    rep.end = (psi_div_end == End::Zero) ? DivergenceEnd::Zero : DivergenceEnd::Infinity;
    return rep;
  }

  // endpoint integrability of the outer integrand
  const Asym phi0 = integrand_asym(pb.phi, pb.space, End::Zero);
  const Asym phii = integrand_asym(pb.phi, pb.space, End::Infinity);
  const Asym psid0 = integrand_asym(psid, pb.space, End::Zero);
  const Asym psidi = integrand_asym(psid, pb.space, End::Infinity);
  Asym outer0, outeri;
  if (inner) {
    // T(r)=int_r^inf phi S may blow up at 0; U(r)=int_0^r psi' S decays at 0
    outer0 = asym_product(asym_product(asym_scaled(tail_growth_zero(phi0), gamma / pb.q),
                                       asym_scaled(head_growth_zero(psid0), gamma / qprime)),
                          psid0);
    outeri = asym_product(asym_product(asym_scaled(tail_growth_infinity(phii), gamma / pb.q),
                                       asym_scaled(head_growth_infinity(psidi), gamma / qprime)),
                          psidi);
  } else {
    outer0 = asym_product(asym_product(asym_scaled(head_growth_zero(phi0), gamma / pb.q),
                                       asym_scaled(tail_growth_zero(psid0), gamma / qprime)),
                          psid0);
    outeri = asym_product(asym_product(asym_scaled(head_growth_infinity(phii), gamma / pb.q),
                                       asym_scaled(tail_growth_infinity(psidi), gamma / qprime)),
                          psidi);
  }
  if (diverges(classify_zero(outer0))) {
    rep.divergent = true;
    rep.end = DivergenceEnd::Zero;
    return rep;
  }
  if (diverges(classify_infinity(outeri))) {
    rep.divergent = true;
    rep.end = DivergenceEnd::Infinity;
    return rep;
  }

  auto phi_i = radial_integrand(pb.phi, pb.space);
  auto psid_i = radial_integrand(psid, pb.space);
  auto phi_tail = std::make_shared<TailCache>(phi_i, kQuadTol);
  auto phi_head = std::make_shared<CumulativeCache>(phi_i, kQuadTol);
  auto psid_tail = std::make_shared<TailCache>(psid_i, kQuadTol);
  auto psid_head = std::make_shared<CumulativeCache>(psid_i, kQuadTol);

  Integrand outer;
  outer.eval = [=, &pb](double r) {
    const double t = inner ? phi_tail->at(r) : phi_head->at(r);
    const double u = inner ? psid_head->at(r) : psid_tail->at(r);
    if (t <= 0.0 || u <= 0.0) return 0.0;
    const double lg = (gamma / pb.q) * std::log(t) + (gamma / qprime) * std::log(u) +
                      log_eval(psid, r) + pb.space.log_density(r);
    return std::exp(lg);
  };
  outer.zero_hint = SingularityHint{outer0.pow, outer0.logpow};
  if (outeri.rate < 0) outer.infinity_hint = DecayHint{-outeri.rate, outeri.pow};

  QuadResult q = integrate(outer, 0.0, kInf, 1e-9);
  if (q.divergent) {
    rep.divergent = true;
    rep.end = q.end;
    return rep;
  }
  rep.value = q.value;
  rep.error_estimate = q.abs_error;
  return rep;
}

/// A concrete evaluator for a test-function descriptor.
struct Materialized {
  std::function<double(double)> eval;
  double lo = 0.0;
  double hi = kInf;
};

DivergenceEnd sup_divergent_end(const HardyProblem& pb) {
  const WeightExpr psid = pb.psi_dual();
  const double pprime = pb.conj_p();
  const Asym phi0 = integrand_asym(pb.phi, pb.space, End::Zero);
  const Asym psid0 = integrand_asym(psid, pb.space, End::Zero);
  const Asym phii = integrand_asym(pb.phi, pb.space, End::Infinity);
  const Asym psidi = integrand_asym(psid, pb.space, End::Infinity);
  Asym g0, gi;
  if (pb.direction == Direction::Inner) {
    g0 = asym_product(asym_scaled(tail_growth_zero(phi0), 1.0 / pb.q),
                      asym_scaled(head_growth_zero(psid0), 1.0 / pprime));
    gi = asym_product(asym_scaled(head_growth_infinity(psidi), 1.0 / pprime),
                      asym_scaled(tail_growth_infinity(phii), 1.0 / pb.q));
  } else {
    g0 = asym_product(asym_scaled(head_growth_zero(phi0), 1.0 / pb.q),
                      asym_scaled(tail_growth_zero(psid0), 1.0 / pprime));
    gi = asym_product(asym_scaled(head_growth_infinity(phii), 1.0 / pb.q),
                      asym_scaled(tail_growth_infinity(psidi), 1.0 / pprime));
  }
  if (grows_at_zero(g0)) return DivergenceEnd::Zero;
  if (grows_at_infinity(gi)) return DivergenceEnd::Infinity;
  // factor-level divergence: pick the end of the broken factor
  if (pb.direction == Direction::Inner) {
    if (diverges(integrability_class(pb.phi, pb.space, End::Infinity)))
      return DivergenceEnd::Infinity;
    if (diverges(integrability_class(psid, pb.space, End::Zero))) return DivergenceEnd::Zero;
  } else {
    if (diverges(integrability_class(pb.phi, pb.space, End::Zero))) return DivergenceEnd::Zero;
    if (diverges(integrability_class(psid, pb.space, End::Infinity)))
      return DivergenceEnd::Infinity;
  }
  return DivergenceEnd::None;
}

Materialized materialize(const HardyProblem& pb, const RadialTestFunction& f) {
  const WeightExpr psid = pb.psi_dual();
  Materialized m;
  switch (f.kind) {
    case RadialTestFunction::Kind::NearExtremizer: {
      if (pb.direction == Direction::Inner) {
        m.eval = [psid, R = f.R](double r) { return (r < R) ? eval(psid, r) : 0.0; };
        m.lo = 0.0;
        m.hi = f.R;
      } else {
        m.eval = [psid, R = f.R](double r) { return (r > R) ? eval(psid, r) : 0.0; };
        m.lo = f.R;
        m.hi = kInf;
      }
      return m;
    }
    case RadialTestFunction::Kind::PowerBump: {
      m.eval = [e = f.exponent, R = f.R](double r) { return (r < R) ? std::pow(r, e) : 0.0; };
      m.lo = 0.0;
      m.hi = f.R;
      return m;
    }
    case RadialTestFunction::Kind::PiecewiseRandom: {
      std::mt19937 rng(f.seed);
      std::uniform_real_distribution<double> unif(0.1, 1.0);
      const int n = std::max(2, f.knots);
      auto knots = std::make_shared<std::vector<double>>();
      auto vals = std::make_shared<std::vector<double>>();
      const double lo = 0.01, hi = 100.0;
      for (int i = 0; i <= n; ++i)
        knots->push_back(lo * std::pow(hi / lo, static_cast<double>(i) / n));
      for (int i = 0; i < n; ++i) vals->push_back(unif(rng));
      m.eval = [knots, vals](double r) {
        if (r <= knots->front() || r >= knots->back()) return 0.0;
        auto it = std::upper_bound(knots->begin(), knots->end(), r);
        const size_t idx = static_cast<size_t>(it - knots->begin()) - 1;
        return (*vals)[std::min(idx, vals->size() - 1)];
      };
      m.lo = lo;
      m.hi = hi;
      return m;
    }
    case RadialTestFunction::Kind::FkExtremizer: {
      const double alpha_k = std::pow(2.0, -f.k);
      const double beta_k = std::pow(2.0, f.k);
      const bool inner_dir = (pb.direction == Direction::Inner);
      const End phi_end = inner_dir ? End::Infinity : End::Zero;
      if (pb.q < pb.p && !diverges(integrability_class(pb.phi, pb.space, phi_end))) {
        // the q<p proof family:
        //   f_k = T^{gamma/(pq)} U_k^{gamma/(pq')} psi^{1-p'} on (alpha_k, beta_k)
        const double gamma = pb.gamma();
        const double qprime = pb.conj_q();
        auto phi_i = radial_integrand(pb.phi, pb.space);
        auto psid_i = radial_integrand(psid, pb.space);
        const bool inner = (pb.direction == Direction::Inner);
        auto tail = std::make_shared<TailCache>(phi_i, kQuadTol);
        auto head = std::make_shared<CumulativeCache>(phi_i, kQuadTol);
        auto useg = std::make_shared<CumulativeCache>(psid_i, kQuadTol, alpha_k);
        auto useg_out = std::make_shared<TailCache>(psid_i, kQuadTol);
        const double e1 = gamma / (pb.p * pb.q);
        const double e2 = gamma / (pb.p * qprime);
        const WeightExpr psid_c = psid;
        if (inner) {
          m.eval = [=](double r) -> double {
            if (r <= alpha_k || r >= beta_k) return 0.0;
            const double t = tail->at(r);
            const double u = useg->at(r);
            if (t <= 0.0 || u <= 0.0) return 0.0;
            return std::exp(e1 * std::log(t) + e2 * std::log(u) + log_eval(psid_c, r));
          };
        } else {
          m.eval = [=](double r) -> double {
            if (r <= alpha_k || r >= beta_k) return 0.0;
            const double t = head->at(r);
            const double u = std::max(0.0, useg_out->at(r) - useg_out->at(beta_k));
            if (t <= 0.0 || u <= 0.0) return 0.0;
            return std::exp(e1 * std::log(t) + e2 * std::log(u) + log_eval(psid_c, r));
          };
        }
        m.lo = alpha_k;
        m.hi = beta_k;
        return m;
      }
      // p <= q (or a broken phi factor): near-extremizer marching into the
      // divergent end
      const DivergenceEnd end = sup_divergent_end(pb);
      const double R = (end == DivergenceEnd::Zero) ? alpha_k : beta_k;
      RadialTestFunction ne = RadialTestFunction::near_extremizer(R);
      return materialize(pb, ne);
    }
  }
  throw ParameterError("materialize: unknown test function kind");
}

}  // namespace

BReport compute_B1(const HardyProblem& pb) {
  if (!(pb.p > 1.0) || !(pb.q >= pb.p)) throw AdmissibilityError("compute_B1: needs 1<p<=q");
  if (pb.direction != Direction::Inner) throw AdmissibilityError("compute_B1: Inner only");
  return sup_form_constant(pb, BWhich::B1);
}

BReport compute_B2(const HardyProblem& pb) {
  if (!(pb.p > 1.0) || !(pb.q >= pb.p)) throw AdmissibilityError("compute_B2: needs 1<p<=q");
  if (pb.direction != Direction::Outer) throw AdmissibilityError("compute_B2: Outer only");
  return sup_form_constant(pb, BWhich::B2);
}

BReport compute_B3(const HardyProblem& pb) {
  if (!(pb.p > pb.q) || !(pb.q > 1.0)) throw AdmissibilityError("compute_B3: needs 1<q<p");
  if (pb.direction != Direction::Inner) throw AdmissibilityError("compute_B3: Inner only");
  return integral_form_constant(pb, BWhich::B3);
}

BReport compute_B4(const HardyProblem& pb) {
  if (!(pb.p > pb.q) || !(pb.q > 1.0)) throw AdmissibilityError("compute_B4: needs 1<q<p");
  if (pb.direction != Direction::Outer) throw AdmissibilityError("compute_B4: Outer only");
  return integral_form_constant(pb, BWhich::B4);
}

BReport compute_B(const HardyProblem& pb) {
  if (pb.p <= pb.q)
    return (pb.direction == Direction::Inner) ? compute_B1(pb) : compute_B2(pb);
  return (pb.direction == Direction::Inner) ? compute_B3(pb) : compute_B4(pb);
}

double lhs(const HardyProblem& pb, const RadialTestFunction& f) {
  Materialized m = materialize(pb, f);
  const PolarSpace& sp = pb.space;
  Integrand f_s;
  f_s.eval = [m, sp](double r) { return m.eval(r) * std::exp(sp.log_density(r)); };
  Integrand phi_s = radial_integrand(pb.phi, pb.space);

  const double inf = std::numeric_limits<double>::infinity();
  if (pb.direction == Direction::Inner) {
    auto cum = std::make_shared<CumulativeCache>(f_s, kQuadTol, m.lo);
    Integrand outer;
    outer.eval = [=, &pb](double r) {
      const double F = cum->at(std::min(r, m.hi));
      if (F <= 0.0) return 0.0;
      return std::exp(pb.q * std::log(F) + log_eval(pb.phi, r) + pb.space.log_density(r));
    };
    double total = 0.0;
    const double mid_hi = std::isinf(m.hi) ? kInf : m.hi;
    QuadResult qa = integrate(outer, std::max(m.lo, 0.0), mid_hi, 1e-9);
    if (qa.divergent) return inf;
    total += qa.value;
    if (!std::isinf(m.hi)) {
      const double Ftot = cum->at(m.hi);
      if (Ftot > 0.0) {
        QuadResult qt = integrate(phi_s, m.hi, kInf, 1e-9);
        if (qt.divergent) return inf;
        // log-space: Ftot^q alone can overflow when the product is still finite
        if (qt.value > 0.0)
          total += std::exp(pb.q * std::log(Ftot) + std::log(qt.value));
      }
    }
    return total;
  }

  // Outer direction: G(r) = int_r^hi f S
  std::shared_ptr<TailCache> tail;
  std::shared_ptr<CumulativeCache> cum;
  double Ftot = 0.0;
  if (std::isinf(m.hi)) {
    tail = std::make_shared<TailCache>(f_s, kQuadTol);
  } else {
    cum = std::make_shared<CumulativeCache>(f_s, kQuadTol, m.lo);
    Ftot = cum->at(m.hi);
  }
  auto G = [&](double r) -> double {
    if (tail) return tail->at(r);
    if (r <= m.lo) return Ftot;
    if (r >= m.hi) return 0.0;
    return std::max(0.0, Ftot - cum->at(r));
  };
  double total = 0.0;
  // (0, lo]: G is constant
  const double Glo = (m.lo > 0.0) ? G(m.lo) : 0.0;
  if (m.lo > 0.0 && Glo > 0.0) {
    QuadResult qh = integrate(phi_s, 0.0, m.lo, 1e-9);
    if (qh.divergent) return inf;
    if (qh.value > 0.0) total += std::exp(pb.q * std::log(Glo) + std::log(qh.value));
  }
  Integrand outer;
  outer.eval = [&, G](double r) {
    const double g = G(r);
    if (g <= 0.0) return 0.0;
    return std::exp(pb.q * std::log(g) + log_eval(pb.phi, r) + pb.space.log_density(r));
  };
  const double start = (m.lo > 0.0) ? m.lo : 0.0;
  QuadResult qa = integrate(outer, start, std::isinf(m.hi) ? kInf : m.hi, 1e-9);
  if (qa.divergent) return inf;
  total += qa.value;
  return total;
}

double rhs_norm(const HardyProblem& pb, const RadialTestFunction& f) {
  Materialized m = materialize(pb, f);
  Integrand integrand;
  const PolarSpace sp = pb.space;
  const WeightExpr psi = pb.psi;
  const double p = pb.p;
  integrand.eval = [m, sp, psi, p](double r) {
    const double v = m.eval(r);
    if (v <= 0.0) return 0.0;
    return std::exp(p * std::log(v) + log_eval(psi, r) + sp.log_density(r));
  };
  QuadResult q = integrate(integrand, std::max(0.0, m.lo),
                           std::isinf(m.hi) ? kInf : m.hi, 1e-10);
  if (q.divergent) return std::numeric_limits<double>::infinity();
  return std::pow(q.value, 1.0 / p);
}

double ratio(const HardyProblem& pb, const RadialTestFunction& f) {
  const double denom = rhs_norm(pb, f);
  if (denom == 0.0) throw ZeroDenominator("ratio: rhs_norm is zero");
  const double num = lhs(pb, f);
  if (std::isinf(num)) return std::numeric_limits<double>::infinity();
  return std::pow(num, 1.0 / pb.q) / denom;
}

SandwichVerdict sandwich_check(const HardyProblem& pb,
                               const std::vector<RadialTestFunction>& family,
                               double tol_total) {
  SandwichVerdict v;
  v.b = compute_B(pb);
  if (v.b.divergent) {
    // only-if direction: the blow-up family must break every fixed bound.
    // Accept either an outright explosion or steady unbounded growth in k.
    std::vector<double> rk;
    for (int k = 1; k <= 20; ++k) {
      const double r = ratio(pb, RadialTestFunction::fk(k));
      v.max_ratio = std::max(v.max_ratio, r);
      if (std::isinf(r) || v.max_ratio > 1e3) {
        v.kind = SandwichVerdict::Kind::DivergenceConfirmed;
        v.detail = "ratio exceeded 1e3 at k=" + std::to_string(k);
        return v;
      }
      rk.push_back(r);
    }
    int increasing = 0;
    for (size_t i = 1; i < rk.size(); ++i)
      if (rk[i] > rk[i - 1] * (1.0 - 1e-9)) ++increasing;
    if (increasing >= static_cast<int>(rk.size()) - 2 && rk.back() > 5.0 * rk.front()) {
      v.kind = SandwichVerdict::Kind::DivergenceConfirmed;
      v.detail = "blow-up family grows without bound (x" +
                 std::to_string(rk.back() / rk.front()) + " over the sweep)";
      return v;
    }
    v.kind = SandwichVerdict::Kind::Fail;
    v.detail = "divergent B but the blow-up family did not grow";
    return v;
  }

  const bool sup_form = (pb.p <= pb.q);
  for (const auto& f : family) {
    double r;
    try {
      r = ratio(pb, f);
    } catch (const ZeroDenominator&) {
      continue;  // f == 0 on its support: no effect
    }
    v.max_ratio = std::max(v.max_ratio, r);
    if (!sup_form && std::isinf(r)) {
      v.kind = SandwichVerdict::Kind::Fail;
      v.detail = "finite B but an infinite test-function ratio";
      return v;
    }
    if (sup_form && r > v.b.sandwich_upper * (1.0 + 1e-6) * (1.0 + tol_total)) {
      v.kind = SandwichVerdict::Kind::Fail;
      v.detail = "ratio " + std::to_string(r) + " exceeds sandwich upper bound " +
                 std::to_string(v.b.sandwich_upper);
      return v;
    }
  }
  if (sup_form) {
    const double er = ratio(pb, RadialTestFunction::near_extremizer(v.b.argmax_R));
    v.extremizer_ratio = er;
    v.max_ratio = std::max(v.max_ratio, er);
    if (er < v.b.value * (1.0 - tol_total)) {
      v.kind = SandwichVerdict::Kind::Fail;
      v.detail = "near-extremizer ratio " + std::to_string(er) + " below B = " +
                 std::to_string(v.b.value);
      return v;
    }
  }
  v.kind = SandwichVerdict::Kind::Pass;
  return v;
}

}  // namespace hardyverify
