#ifndef HARDYVERIFY_POLAR_SPACE_HPP
#define HARDYVERIFY_POLAR_SPACE_HPP

#include <cmath>
#include <string>

#include "hardyverify/errors.hpp"

namespace hardyverify {

/// A metric measure space reduced to its radial surface density S(r), so that
/// int_X f dx = int_0^inf f(r) S(r) dr for radial f.
///
/// Variants:
///   Euclidean{d}      S(r) = sigma r^{d-1}
///   Homogeneous{Q}    S(r) = sigma r^{Q-1}
///   Hyperbolic{n}     S(r) = sigma (sinh r)^{n-1}
///   LocalGlobal{d,k}  S(r) = c r^{d-1} on (0,1], c e^{k(r-1)} beyond (continuous at 1)
struct PolarSpace {
  enum class Kind { Euclidean, Homogeneous, Hyperbolic, LocalGlobal };

  Kind kind = Kind::Euclidean;
  std::string name;
  double local_dim = 1.0;     // d: volume growth V(r) ~ r^d near 0
  double global_rate = 0.0;   // D: V(r) <~ e^{D r} at infinity
  double sigma = 1.0;         // sphere constant (c for LocalGlobal)
  double kappa = 0.0;         // exponential density rate (LocalGlobal only)

  static PolarSpace euclidean(double d);
  static PolarSpace homogeneous(double Q, double sigma = 1.0);
  static PolarSpace hyperbolic(int n);
  static PolarSpace local_global(double d, double kappa, double c = 1.0);
  /// Euclidean d=1 with sigma=1: scalar integrals on (0,inf) pass through unchanged.
  static PolarSpace half_line();

  double density(double r) const;
  /// log S(r), overflow-safe for exponentially growing densities.
  double log_density(double r) const;
  double volume(double r) const;

  /// Power exponent of S near 0 (d-1 for every variant).
  double zero_power() const { return local_dim - 1.0; }
  /// Exponential growth rate of S at infinity.
  double infinity_rate() const;
  /// Power exponent of the subexponential factor of S at infinity.
  double infinity_power() const;
  /// Leading coefficient of S at infinity, S(r) ~ coeff * e^{rate r} r^{pow}.
  double infinity_coeff() const;
};

/// Radial envelope of a positive character: value at radius r is e^{s * rate * r}.
struct CharacterSurrogate {
  double rate = 0.0;  // growth rate of the character along its worst direction
  double s = 1.0;     // power applied to the character
};

double character_factor(const CharacterSurrogate& cs, double r);

/// Surface area of the unit sphere in R^d.
double sphere_area(double d);

}  // namespace hardyverify

#endif
