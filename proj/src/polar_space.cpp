#include "hardyverify/polar_space.hpp"

#include <numbers>

#include "hardyverify/quadrature.hpp"

namespace hardyverify {

double sphere_area(double d) {
  if (!(d > 0)) throw ParameterError("sphere_area: d must be positive");
  return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

PolarSpace PolarSpace::euclidean(double d) {
  if (!(d > 0)) throw ParameterError("euclidean: d must be positive");
  PolarSpace s;
  s.kind = Kind::Euclidean;
  s.name = "euclidean_d" + std::to_string(d);
  s.local_dim = d;
  s.global_rate = 0.0;
  s.sigma = sphere_area(d);
  return s;
}

PolarSpace PolarSpace::homogeneous(double Q, double sigma) {
  if (!(Q > 0)) throw ParameterError("homogeneous: Q must be positive");
  if (!(sigma > 0)) throw ParameterError("homogeneous: sigma must be positive");
  PolarSpace s;
  s.kind = Kind::Homogeneous;
  s.name = "homogeneous_Q" + std::to_string(Q);
  s.local_dim = Q;
  s.global_rate = 0.0;
  s.sigma = sigma;
  return s;
}

PolarSpace PolarSpace::hyperbolic(int n) {
  if (n < 2) throw ParameterError("hyperbolic: n must be at least 2");
  PolarSpace s;
  s.kind = Kind::Hyperbolic;
  s.name = "hyperbolic_n" + std::to_string(n);
  s.local_dim = n;
  s.global_rate = n - 1.0;
  s.sigma = sphere_area(n);
  return s;
}

PolarSpace PolarSpace::local_global(double d, double kappa, double c) {
  if (!(d > 0)) throw ParameterError("local_global: d must be positive");
  if (kappa < 0) throw ParameterError("local_global: kappa must be nonnegative");
  if (!(c > 0)) throw ParameterError("local_global: c must be positive");
  PolarSpace s;
  s.kind = Kind::LocalGlobal;
  s.name = "local_global_d" + std::to_string(d);
  s.local_dim = d;
  s.global_rate = kappa;
  s.sigma = c;
  s.kappa = kappa;
  return s;
}

PolarSpace PolarSpace::half_line() {
  PolarSpace s = euclidean(1.0);
  s.sigma = 1.0;
  s.name = "half_line";
  return s;
}

double PolarSpace::density(double r) const {
  if (!(r > 0)) throw ParameterError("density: r must be positive");
  switch (kind) {
    case Kind::Euclidean:
    case Kind::Homogeneous:
      return sigma * std::pow(r, local_dim - 1.0);
    case Kind::Hyperbolic:
      return sigma * std::pow(std::sinh(r), local_dim - 1.0);
    case Kind::LocalGlobal:
      return (r <= 1.0) ? sigma * std::pow(r, local_dim - 1.0)
                        : sigma * std::exp(kappa * (r - 1.0));
  }
  return 0.0;
}

double PolarSpace::log_density(double r) const {
  if (!(r > 0)) throw ParameterError("log_density: r must be positive");
  switch (kind) {
    case Kind::Euclidean:
    case Kind::Homogeneous:
      return std::log(sigma) + (local_dim - 1.0) * std::log(r);
    case Kind::Hyperbolic: {
      // log sinh r = r + log1p(-e^{-2r}) - log 2
      const double ls = r + std::log1p(-std::exp(-2.0 * r)) - std::log(2.0);
      return std::log(sigma) + (local_dim - 1.0) * ls;
    }
    case Kind::LocalGlobal:
      return (r <= 1.0) ? std::log(sigma) + (local_dim - 1.0) * std::log(r)
                        : std::log(sigma) + kappa * (r - 1.0);
  }
  return 0.0;
}

double PolarSpace::volume(double r) const {
  if (!(r > 0)) throw ParameterError("volume: r must be positive");
  switch (kind) {
    case Kind::Euclidean:
    case Kind::Homogeneous:
      return sigma * std::pow(r, local_dim) / local_dim;
    case Kind::LocalGlobal:
      if (r <= 1.0) return sigma * std::pow(r, local_dim) / local_dim;
      if (kappa == 0.0) return sigma / local_dim + sigma * (r - 1.0);
      return sigma / local_dim + sigma * (std::exp(kappa * (r - 1.0)) - 1.0) / kappa;
    case Kind::Hyperbolic: {
      Integrand f;
      f.eval = [this](double s) { return density(s); };
      f.zero_hint = SingularityHint{local_dim - 1.0, 0.0};
      return integrate(f, 0.0, r, 1e-12).value;
    }
  }
  return 0.0;
}

double PolarSpace::infinity_rate() const {
  switch (kind) {
    case Kind::Hyperbolic:
      return local_dim - 1.0;
    case Kind::LocalGlobal:
      return kappa;
    default:
      return 0.0;
  }
}

double PolarSpace::infinity_power() const {
  switch (kind) {
    case Kind::Euclidean:
    case Kind::Homogeneous:
      return local_dim - 1.0;
    default:
      return 0.0;
  }
}

double PolarSpace::infinity_coeff() const {
  switch (kind) {
    case Kind::Euclidean:
    case Kind::Homogeneous:
      return sigma;
    case Kind::Hyperbolic:
      return sigma / std::pow(2.0, local_dim - 1.0);
    case Kind::LocalGlobal:
      return sigma * std::exp(-kappa);
  }
  return 0.0;
}

double character_factor(const CharacterSurrogate& cs, double r) {
  if (!(r > 0)) throw ParameterError("character_factor: r must be positive");
  return std::exp(cs.s * cs.rate * r);
}

}  // namespace hardyverify
