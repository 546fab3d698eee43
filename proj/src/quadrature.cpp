#include "hardyverify/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hardyverify {
namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GkEstimate {
  double value;
  double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resg = 0.0, resk = 0.0;
  const double fc = f(c);
  evals += 15;
  resg = fc * kWg[3];
  resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  const double value = resk * h;
  double err = std::abs((resk - resg) * h);
  err = std::min(err, std::abs(value) * 1e-2 + 1e-300);
  return {value, err};
}

void check_sample(double v, double r) {
  if (v < -1e-12 && !(std::abs(v) <= 1e-12 * (1.0 + std::abs(v)))) {
    throw NonPositiveIntegrand("negative integrand sample at r=" + std::to_string(r));
  }
}

// Adaptive bisection on a finite interval; abs tolerance.
GkEstimate adaptive_finite(const std::function<double(double)>& f, double a, double b,
                           double tol, long& evals, long budget) {
  struct Piece {
    double a, b, value, error;
  };
  GkEstimate whole = gk15(f, a, b, evals);
  std::vector<Piece> work{{a, b, whole.value, whole.error}};
  double total = whole.value, toterr = whole.error;
  // the relative floor keeps large-valued integrals from chasing an absolute
  // tolerance below machine noise
  while (toterr > std::max(tol, 5e-14 * std::abs(total)) && evals < budget) {
    // split the worst piece
    size_t wi = 0;
    for (size_t i = 1; i < work.size(); ++i)
      if (work[i].error > work[wi].error) wi = i;
    Piece p = work[wi];
    const double m = 0.5 * (p.a + p.b);
    if (m <= p.a || m >= p.b) break;  // resolution floor
    GkEstimate l = gk15(f, p.a, m, evals);
    GkEstimate r = gk15(f, m, p.b, evals);
    total += l.value + r.value - p.value;
    toterr += l.error + r.error - p.error;
    work[wi] = {p.a, m, l.value, l.error};
    work.push_back({m, p.b, r.value, r.error});
  }
  return {total, toterr};
}

// Summation of a chain of nonnegative pieces with geometric / power-law tail
// extrapolation and divergence detection.  piece(j) returns the j-th chunk.
struct ChainResult {
  double value = 0.0;
  double error = 0.0;
  bool divergent = false;
  bool converged = false;
};

ChainResult sum_chain(const std::function<double(int)>& piece, double tol, double base_scale,
                      int j_max) {
  ChainResult out;
  std::vector<double> pieces;
  double acc = 0.0;
  bool seen_positive = false;
  int zero_run = 0;
  for (int j = 0; j < j_max; ++j) {
    const double p = piece(j);
    pieces.push_back(p);
    acc += p;
    // relative tolerance: small tails must still come out with small relative
    // error, since callers multiply them against large head factors
    const double scale = std::max({1e-300, acc, base_scale});
    const double tol_eff = tol * scale;
    if (p > 0) {
      seen_positive = true;
      zero_run = 0;
    } else {
      ++zero_run;
      if ((seen_positive && zero_run >= 2) || (!seen_positive && j >= 40)) {
        out.value = acc;
        out.converged = true;
        return out;
      }
      continue;
    }
    const int n = static_cast<int>(pieces.size());
    // divergence: pieces failing to decrease across several chunks
    if (n >= 6) {
      bool nondecreasing = true;
      for (int k = n - 4; k < n; ++k)
        if (pieces[k] < pieces[k - 1] * (1.0 - 1e-12)) nondecreasing = false;
      if (nondecreasing && pieces[n - 1] > tol_eff) {
        out.divergent = true;
        return out;
      }
    }
    if (n >= 3 && pieces[n - 2] > 0 && pieces[n - 3] > 0) {
      const double r1 = pieces[n - 1] / pieces[n - 2];
      const double r2 = pieces[n - 2] / pieces[n - 3];
      if (p < tol_eff && r1 < 0.9) {
        // Cauchy cutoff with the geometric remainder folded in
        const double rem = p * r1 / std::max(1e-12, 1.0 - r1);
        out.value = acc + rem;
        out.error += rem + tol_eff;
        out.converged = true;
        return out;
      }
      // stable geometric ratio: extrapolate the remainder
      if (r1 < 0.999 && std::abs(r1 - r2) < 0.02 * std::max(r1, 1e-12)) {
        const double rem = p * r1 / (1.0 - r1);
        if (rem < tol_eff) {
          out.value = acc + rem;
          out.error += rem * 0.1 + tol_eff;
          out.converged = true;
          return out;
        }
      }
      // slow power-law decay p_j ~ j^{-s}, s fitted over a wide window
      if (j >= 24) {
        const int m = std::min(j / 2, 60);
        const double pm = pieces[n - 1 - m];
        if (pm > 0 && p <= pm) {
          const double jd = static_cast<double>(j);
          const double s = std::log(pm / p) / std::log(jd / (jd - m));
          if (s > 1.05) {
            // midpoint-rule remainder for sum_{i>j} c i^{-s}; for faster than
            // power-law decay this overestimates, so the gate stays safe
            const double rem = p * jd * std::pow(1.0 + 0.5 / jd, 1.0 - s) / (s - 1.0);
            if (rem < tol_eff) {
              out.value = acc + rem;
              out.error += rem + tol_eff;
              out.converged = true;
              return out;
            }
          }
        }
      }
    }
    if (acc > 1e300) {
      out.divergent = true;
      return out;
    }
  }
  // budget exhausted: decide by the final trend
  const int n = static_cast<int>(pieces.size());
  if (n >= 8 && pieces[n - 1] > 0 && pieces[n - 2] > 0) {
    const double r1 = pieces[n - 1] / pieces[n - 2];
    if (r1 >= 1.0 - 1e-9) {
      out.divergent = true;
      return out;
    }
    const int j = n - 1;
    const int m = std::min(j / 2, 60);
    const double p = pieces[n - 1];
    const double pm = pieces[n - 1 - m];
    const double pm1 = pieces[n - m];
    double rem;
    // geometric chunks keep a steady ratio; power-law chunks have ratios
    // drifting towards 1, and the drift picks the right extrapolation
    const double r_first = (pm > 0) ? pm1 / pm : 1.0;
    if (pm > 0 && p < pm && r1 > 0.9 && (1.0 - r1) < 0.75 * (1.0 - r_first)) {
      const double jd = static_cast<double>(j);
      const double s = std::log(pm / p) / std::log(jd / (jd - m));
      if (s <= 1.02) {
        out.divergent = true;
        return out;
      }
      rem = p * jd * std::pow(1.0 + 0.5 / jd, 1.0 - s) / (s - 1.0);
    } else {
      rem = p * r1 / std::max(1e-12, 1.0 - r1);
    }
    out.value = acc + rem;
    out.error += rem * 0.05;  // low-confidence remainder
    out.converged = true;
    return out;
  }
  out.value = acc;
  out.converged = true;
  return out;
}

constexpr long kBudget = 2'000'000;

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, double tol) {
  if (!(a < b)) throw ParameterError("integrate: requires a < b");
  if (!(tol > 0)) throw ParameterError("integrate: requires tol > 0");
  if (a < 0) throw ParameterError("integrate: requires a >= 0");

  QuadResult res;
  long evals = 0;
  auto eval = [&](double r) {
    const double v = f.eval(r);
    if (std::isnan(v)) throw Error("integrand returned NaN at r=" + std::to_string(r));
    check_sample(v, r);
    return std::max(v, 0.0);
  };
  // transformed integrand for the r = e^t substitution
  auto eval_t = [&](double t) {
    const double r = std::exp(t);
    if (r == 0.0) return 0.0;  // underflow: the point mass at r=0 is null
    return eval(r) * r;
  };

  const bool to_inf = std::isinf(b);
  const double z1 = (a == 0.0) ? std::min(1.0, b) : a;       // upper edge of the zero chain
  const double m1 = to_inf ? std::max(1.0, a) : b;           // lower edge of the tail chain

  double total = 0.0, toterr = 0.0;

  // middle finite part [z1, m1]
  if (m1 > z1 * (1.0 + 1e-15)) {
    // integrate in log space: power-type integrands become gentle
    GkEstimate mid = adaptive_finite(eval_t, std::log(z1), std::log(m1), tol * 0.25, evals,
                                     kBudget);
    total += mid.value;
    toterr += mid.error;
  }

  // zero-end chain: chunks of width W in t = log r marching towards -inf
  if (a == 0.0) {
    const double w = 4.0;
    const double t1 = std::log(z1);
    auto piece = [&](int j) {
      const double hi = t1 - w * j;
      const double lo = hi - w;
      return adaptive_finite(eval_t, lo, hi, tol * 0.05, evals, kBudget).value;
    };
    // stop above the double underflow floor so the closing power-law
    // extrapolation sees live chunks, not spurious zeros
    const int j_limit = std::max(8, static_cast<int>((t1 + 700.0) / w));
    ChainResult chain = sum_chain(piece, tol, total, std::min(400, j_limit));
    if (chain.divergent) {
      res.divergent = true;
      res.end = DivergenceEnd::Zero;
      res.evaluations = evals;
      return res;
    }
    total += chain.value;
    toterr += chain.error;
  }

  // infinity-end chain: dyadic range doubling
  if (to_inf) {
    auto piece = [&](int j) {
      const double lo = m1 * std::pow(2.0, j);
      const double hi = 2.0 * lo;
      return adaptive_finite(eval_t, std::log(lo), std::log(hi), tol * 0.05, evals, kBudget)
          .value;
    };
    // hinted remainder bound: with f ~ e^{-c r} r^s the tail beyond R is
    // bounded by ~ 2 f(R) / c once c R >> |s|
    int j_cut = -1;
    if (f.infinity_hint && f.infinity_hint->exp_rate > 0) {
      const double c = f.infinity_hint->exp_rate;
      double acc_probe = total;
      for (int j = 0; j < 60; ++j) {
        const double R = m1 * std::pow(2.0, j + 1);
        if (c * R > 4.0 * (1.0 + std::abs(f.infinity_hint->power))) {
          const double bound = 2.0 * eval(R) / c * (1.0 + std::abs(f.infinity_hint->power) / (c * R));
          if (bound < tol * std::max(1.0, acc_probe)) {
            j_cut = j;
            break;
          }
        }
      }
    }
    if (j_cut >= 0) {
      double rem_bound = 0.0;
      for (int j = 0; j <= j_cut; ++j) total += piece(j);
      const double Rcut = m1 * std::pow(2.0, j_cut + 1);
      const double c = f.infinity_hint->exp_rate;
      rem_bound = 2.0 * eval(Rcut) / c * (1.0 + std::abs(f.infinity_hint->power) / (c * Rcut));
      toterr += rem_bound;
    } else {
      ChainResult chain = sum_chain(piece, tol, total, 120);
      if (chain.divergent) {
        res.divergent = true;
        res.end = DivergenceEnd::Infinity;
        res.evaluations = evals;
        return res;
      }
      total += chain.value;
      toterr += chain.error;
    }
  }

  if (evals >= kBudget && toterr > 10.0 * tol * std::max(1.0, total)) {
    throw NoConvergence("integrate: tolerance unmet at evaluation budget");
  }

  res.value = total;
  res.abs_error = toterr;
  res.evaluations = evals;
  return res;
}

std::vector<double> cumulative(const Integrand& f, const std::vector<double>& grid, double tol) {
  if (grid.empty()) return {};
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0 || (i > 0 && grid[i] <= grid[i - 1]))
      throw ParameterError("cumulative: grid must be strictly increasing and positive");
  }
  std::vector<double> out(grid.size());
  QuadResult first = integrate(f, 0.0, grid[0], tol);
  if (first.divergent) throw Error("cumulative: integrand not integrable near 0");
  out[0] = first.value;
  for (size_t i = 1; i < grid.size(); ++i) {
    QuadResult seg = integrate(f, grid[i - 1], grid[i], tol);
    out[i] = out[i - 1] + seg.value;
  }
  return out;
}

SupResult sup_search(const std::function<double(double)>& g, double r_min, double r_max,
                     double refine_tol) {
  if (!(r_min > 0) || !(r_max > r_min)) throw ParameterError("sup_search: bad range");
  const int n = 96;
  const double lmin = std::log(r_min), lmax = std::log(r_max);
  std::vector<double> xs(n), vs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = std::exp(lmin + (lmax - lmin) * i / (n - 1));
    vs[i] = g(xs[i]);
    if (std::isinf(vs[i]) || std::isnan(vs[i])) {
      SupResult d;
      d.divergent = true;
      d.end = (i < n / 2) ? DivergenceEnd::Zero : DivergenceEnd::Infinity;
      return d;
    }
  }
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (vs[i] > vs[best]) best = i;

  auto monotone_into = [&](int end_idx, int dir) {
    for (int k = 0; k < 8; ++k) {
      const int i = end_idx - dir * k;
      const int j = i - dir;
      if (j < 0 || j >= n) return false;
      if (!(vs[i] > vs[j])) return false;
    }
    return true;
  };
  // g climbs monotonically into an endpoint: continue the scan beyond it and
  // call the sup divergent if g keeps climbing substantially, bounded if it
  // plateaus
  auto probe_divergent = [&](int end_idx, double step) {
    double x = xs[end_idx];
    double prev = vs[end_idx];
    for (int k = 0; k < 16; ++k) {
      x *= step;
      const double v = g(x);
      if (std::isinf(v) || std::isnan(v)) return true;
      if (v <= prev) return false;
      prev = v;
    }
    return prev > 10.0 * std::max(vs[end_idx], 1e-300);
  };
  if (best == 0 && monotone_into(0, -1) && probe_divergent(0, 0.25)) {
    SupResult d;
    d.divergent = true;
    d.end = DivergenceEnd::Zero;
    return d;
  }
  if (best == n - 1 && monotone_into(n - 1, 1) && probe_divergent(n - 1, 4.0)) {
    SupResult d;
    d.divergent = true;
    d.end = DivergenceEnd::Infinity;
    return d;
  }

  // golden-section refinement on the log axis around the best bracket
  double lo = std::log(xs[std::max(0, best - 1)]);
  double hi = std::log(xs[std::min(n - 1, best + 1)]);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = g(std::exp(x1)), f2 = g(std::exp(x2));
  double sup = vs[best], arg = xs[best];
  auto note = [&](double x, double v) {
    if (v > sup) {
      sup = v;
      arg = std::exp(x);
    }
  };
  note(x1, f1);
  note(x2, f2);
  int iters = 0;
  while (hi - lo > refine_tol && iters++ < 200) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = g(std::exp(x2));
      note(x2, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = g(std::exp(x1));
      note(x1, f1);
    }
  }
  SupResult out;
  out.sup = sup;
  out.argmax = arg;
  return out;
}

CumulativeCache::CumulativeCache(Integrand f, double tol, double lo)
    : f_(std::move(f)), tol_(tol), lo_(lo) {}

double CumulativeCache::at(double r) {
  if (!(r > 0)) throw ParameterError("CumulativeCache: r must be positive");
  if (r <= lo_) return 0.0;
  auto direct = [&](double x) -> Anchor {
    QuadResult q = integrate(f_, lo_, x, tol_);
    if (q.divergent) throw Error("cumulative integral diverges near 0");
    return {x, q.value, q.abs_error};
  };
  auto cmp = [](const Anchor& a, double x) { return a.r < x; };
  auto it = std::lower_bound(anchors_.begin(), anchors_.end(), r, cmp);
  if (it != anchors_.end() && it->r == r) return it->val;
  // nearest existing anchor in log distance
  const Anchor* near = nullptr;
  if (it != anchors_.begin()) near = &*(it - 1);
  if (it != anchors_.end() &&
      (!near || std::abs(std::log(it->r / r)) < std::abs(std::log(near->r / r))))
    near = &*it;
  Anchor a{r, 0.0, 0.0};
  if (!near) {
    a = direct(r);
  } else if (near->r < r) {
    QuadResult seg = integrate(f_, near->r, r, tol_);
    a.val = near->val + seg.value;
    a.err = near->err + seg.abs_error;
  } else {
    QuadResult seg = integrate(f_, r, near->r, tol_);
    a.val = near->val - seg.value;
    a.err = near->err + seg.abs_error;
  }
  // anchors carry their accumulated error: once it is no longer small
  // relative to the value, fall back to a fresh integral from the lower end
  if (near && (a.val <= 0.0 || a.err > 100.0 * tol_ * a.val)) a = direct(r);
  anchors_.insert(std::lower_bound(anchors_.begin(), anchors_.end(), r, cmp), a);
  return a.val;
}

TailCache::TailCache(Integrand f, double tol) : f_(std::move(f)), tol_(tol) {}

double TailCache::at(double r) {
  if (!(r > 0)) throw ParameterError("TailCache: r must be positive");
  auto direct = [&](double x) -> Anchor {
    QuadResult q = integrate(f_, x, kInf, tol_);
    if (q.divergent) throw Error("tail integral diverges at infinity");
    return {x, q.value, q.abs_error};
  };
  auto cmp = [](const Anchor& a, double x) { return a.r < x; };
  auto it = std::lower_bound(anchors_.begin(), anchors_.end(), r, cmp);
  if (it != anchors_.end() && it->r == r) return it->val;
  const Anchor* near = nullptr;
  if (it != anchors_.begin()) near = &*(it - 1);
  if (it != anchors_.end() &&
      (!near || std::abs(std::log(it->r / r)) < std::abs(std::log(near->r / r))))
    near = &*it;
  Anchor a{r, 0.0, 0.0};
  if (!near || std::abs(std::log(near->r / r)) > std::log(4.0)) {
    a = direct(r);
  } else if (near->r > r) {
    QuadResult seg = integrate(f_, r, near->r, tol_);
    a.val = near->val + seg.value;
    a.err = near->err + seg.abs_error;
  } else {
    QuadResult seg = integrate(f_, near->r, r, tol_);
    a.val = near->val - seg.value;
    a.err = near->err + seg.abs_error;
  }
  // subtraction keeps the anchor's absolute error; recompute directly once it
  // stops being small relative to the value
  if (near && (a.val <= 0.0 || a.err > 100.0 * tol_ * a.val)) a = direct(r);
  anchors_.insert(std::lower_bound(anchors_.begin(), anchors_.end(), r, cmp), a);
  return a.val;
}

}  // namespace hardyverify
