#include "hardyverify/weights.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hardyverify {

double eval(const WeightExpr& w, double r) {
  if (!(r > 0)) throw ParameterError("weight eval: r must be positive");
  double v = w.scale;
  if (w.a != 0.0) v *= std::pow(r, w.a);
  if (w.b != 0.0) v *= std::pow(std::log(std::exp(1.0) + 1.0 / r), w.b);
  if (w.kappa != 0.0) v *= std::exp(w.kappa * r);
  return v;
}

double log_eval(const WeightExpr& w, double r) {
  if (!(r > 0)) throw ParameterError("weight log_eval: r must be positive");
  double lv = std::log(w.scale);
  if (w.a != 0.0) lv += w.a * std::log(r);
  if (w.b != 0.0) lv += w.b * std::log(std::log(std::exp(1.0) + 1.0 / r));
  if (w.kappa != 0.0) lv += w.kappa * r;
  return lv;
}

WeightExpr power_transform(const WeightExpr& w, double t) {
  return {w.a * t, w.b * t, w.kappa * t, std::pow(w.scale, t)};
}

WeightExpr multiply(const WeightExpr& u, const WeightExpr& v) {
  return {u.a + v.a, u.b + v.b, u.kappa + v.kappa, u.scale * v.scale};
}

Asym asym_scaled(const Asym& x, double t) {
  return {x.rate * t, x.pow * t, x.logpow * t, x.loglogpow * t};
}

Asym asym_product(const Asym& x, const Asym& y) {
  return {x.rate + y.rate, x.pow + y.pow, x.logpow + y.logpow, x.loglogpow + y.loglogpow};
}

bool grows_at_zero(const Asym& a) {
  if (a.pow != 0.0) return a.pow < 0.0;
  if (a.logpow != 0.0) return a.logpow > 0.0;
  return a.loglogpow > 0.0;
}

bool grows_at_infinity(const Asym& a) { return a.grows(); }

Asym integrand_asym(const WeightExpr& w, const PolarSpace& space, End end) {
  Asym a;
  if (end == End::Zero) {
    // e^{kappa r} -> 1; log(e+1/r) ~ log(1/r)
    a.pow = w.a + space.zero_power();
    a.logpow = w.b;
  } else {
    // log(e+1/r) -> 1
    a.rate = w.kappa + space.infinity_rate();
    a.pow = w.a + space.infinity_power();
  }
  return a;
}

IntegrabilityClass classify_zero(const Asym& a) {
  if (a.pow > -1.0) return IntegrabilityClass::Converges;
  if (a.pow < -1.0) return IntegrabilityClass::Diverges;
  if (a.logpow < -1.0) return IntegrabilityClass::Converges;
  if (a.logpow > -1.0) return IntegrabilityClass::Diverges;
  return IntegrabilityClass::Borderline;
}

IntegrabilityClass classify_infinity(const Asym& a) {
  if (a.rate < 0.0) return IntegrabilityClass::Converges;
  if (a.rate > 0.0) return IntegrabilityClass::Diverges;
  if (a.pow < -1.0) return IntegrabilityClass::Converges;
  if (a.pow > -1.0) return IntegrabilityClass::Diverges;
  if (a.logpow < -1.0) return IntegrabilityClass::Converges;
  if (a.logpow > -1.0) return IntegrabilityClass::Diverges;
  return IntegrabilityClass::Borderline;
}

IntegrabilityClass integrability_class(const WeightExpr& w, const PolarSpace& space, End end) {
  const Asym a = integrand_asym(w, space, end);
  return (end == End::Zero) ? classify_zero(a) : classify_infinity(a);
}

Asym head_growth_zero(const Asym& a) {
  if (a.pow > -1.0) return {0.0, a.pow + 1.0, a.logpow, a.loglogpow};
  // pow == -1, logpow < -1: int_0^R r^{-1} L^b dr = L(R)^{b+1}/(-b-1) -> 0
  if (a.pow == -1.0 && a.logpow < -1.0) return {0.0, 0.0, a.logpow + 1.0, a.loglogpow};
  return {};  // tends to a constant or is not zero-convergent
}

Asym tail_growth_zero(const Asym& a) {
  if (classify_zero(a) == IntegrabilityClass::Converges) return {};
  if (a.pow < -1.0) return {0.0, a.pow + 1.0, a.logpow, a.loglogpow};
  // pow == -1
  if (a.logpow > -1.0) return {0.0, 0.0, a.logpow + 1.0, a.loglogpow};
  return {0.0, 0.0, 0.0, 1.0};  // double-borderline: log log growth
}

Asym tail_growth_infinity(const Asym& a) {
  if (a.rate < 0.0) return {a.rate, a.pow, a.logpow, a.loglogpow};
  if (a.rate == 0.0 && a.pow < -1.0) return {0.0, a.pow + 1.0, a.logpow, a.loglogpow};
  if (a.rate == 0.0 && a.pow == -1.0 && a.logpow < -1.0)
    return {0.0, 0.0, a.logpow + 1.0, a.loglogpow};
  return {};  // not infinity-convergent
}

Asym head_growth_infinity(const Asym& a) {
  if (classify_infinity(a) == IntegrabilityClass::Converges) return {};
  if (a.rate > 0.0) return {a.rate, a.pow, a.logpow, a.loglogpow};
  if (a.pow > -1.0) return {0.0, a.pow + 1.0, a.logpow, a.loglogpow};
  if (a.logpow > -1.0) return {0.0, 0.0, a.logpow + 1.0, a.loglogpow};
  return {0.0, 0.0, 0.0, 1.0};
}

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string format(const WeightExpr& w) {
  return "r^" + num(w.a) + " * loge(1/r)^" + num(w.b) + " * exp(" + num(w.kappa) + "*r) * " +
         num(w.scale);
}

WeightExpr parse_weight(const std::string& text) {
  WeightExpr w;
  bool saw_power = false, saw_log = false, saw_exp = false, saw_scale = false;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> WeightExpr {
    throw ConfigError("weight parse error at column " + std::to_string(pos + 1) + ": " + what +
                      " in \"" + text + "\"");
  };
  auto read_number = [&]() -> double {
    skip_ws();
    const char* start = text.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) fail("expected a number");
    pos += static_cast<size_t>(end - start);
    return v;
  };
  auto expect = [&](const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) != 0) fail("expected \"" + tok + "\"");
    pos += tok.size();
  };

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!first) {
      expect("*");
      skip_ws();
    }
    first = false;
    if (text.compare(pos, 2, "r^") == 0) {
      if (saw_power) fail("duplicate power atom");
      pos += 2;
      w.a = read_number();
      saw_power = true;
    } else if (text.compare(pos, 4, "loge") == 0) {
      if (saw_log) fail("duplicate log atom");
      expect("loge");
      expect("(");
      expect("1/r");
      expect(")");
      expect("^");
      w.b = read_number();
      saw_log = true;
    } else if (text.compare(pos, 3, "exp") == 0) {
      if (saw_exp) fail("duplicate exponential atom");
      expect("exp");
      expect("(");
      w.kappa = read_number();
      expect("*r");
      expect(")");
      saw_exp = true;
    } else {
      if (saw_scale) fail("duplicate scale factor");
      w.scale = read_number();
      saw_scale = true;
    }
  }
  if (first) throw ConfigError("weight parse error at column 1: empty weight expression");
  if (!(w.scale > 0)) throw ConfigError("weight parse error: scale must be positive");
  return w;
}

}  // namespace hardyverify
