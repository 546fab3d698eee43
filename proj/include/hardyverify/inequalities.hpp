#ifndef HARDYVERIFY_INEQUALITIES_HPP
#define HARDYVERIFY_INEQUALITIES_HPP

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hardyverify/kernels.hpp"
#include "hardyverify/polar_space.hpp"

namespace hardyverify {

// ---------------------------------------------------------------------------
// Inequality descriptors
// ---------------------------------------------------------------------------

/// ||f||_{L^q_{-beta}} <= C ||f||_{L^p_alpha} on a space of local dimension d.
struct HardySobolevSpec {
  double p, q, alpha, beta;
};

/// ||f / |x|^alpha||_p <= C ||f||_{L^p_alpha}.
struct HardySpec {
  double p, alpha;
};

/// Critical exponent alpha = d/p with the logarithmic weight
/// omega_r(x) = (log(e + 1/|x|))^r |x|^d inside the q-norm.
struct CriticalHardySpec {
  double p, q, r;
};

/// || |x|^a f ||_r <= C ||f||^theta_{L^p_alpha} || |x|^b f ||^{1-theta}_q.
struct CKNSpec {
  double p, q, r, theta, a, b, alpha;
};

/// Gagliardo-Nirenberg form: the a = b = 0 case of CKNSpec.
struct GNSpec {
  double p, q, r, theta, alpha;
};

/// Critical CKN variant: the interpolation norm sits at the critical
/// smoothness, with the omega_r weight replacing the power weight.
struct CriticalCKNSpec {
  double p1, q1, r1, theta, a, r;
};

/// Bilinear form |int int f(x) g(y) K_{a2}(x - y) / (|x|^{a1} |y|^beta)|
/// against ||f||_{L^p_alpha} ||g||_{L^q_beta}.
struct HLSSpec {
  double p, q, alpha, beta, a1, a2;
};

/// ||f||_{L^p_alpha} || |x|^{beta/q} f ||_{q'} >= c ||f||_2^2.
struct UncertaintySpec {
  double p, q, alpha, beta;
};

/// Uncertainty principle at the critical exponent (omega_r weight).
struct UncertaintyCriticalSpec {
  double p, q, r;
};

using InequalityKind =
    std::variant<HardySobolevSpec, HardySpec, CriticalHardySpec, CKNSpec, GNSpec,
                 CriticalCKNSpec, HLSSpec, UncertaintySpec, UncertaintyCriticalSpec>;

struct InequalitySpec {
  InequalityKind kind;
  PolarSpace space = PolarSpace::euclidean(1);
  double char_rate = 0.0;

  double dim() const { return space.local_dim; }
};

const char* kind_name(const InequalityKind& k);

// ---------------------------------------------------------------------------
// Admissibility and reductions
// ---------------------------------------------------------------------------

/// Outcome of the exponent bookkeeping for one spec: every derived quantity
/// (p', q', q~, effective weight exponents, critical boundaries) plus the
/// list of conditions that fail.  Never throws.
struct Validation {
  bool admissible = false;
  std::map<std::string, double> derived;
  std::vector<std::string> violations;
};

Validation validate(const InequalitySpec& spec);

/// Known exact reductions:
///   CKN with theta = 1            -> HardySobolev{p, q = r, alpha, beta = -a r}
///   CKN with a = b = 0            -> GN{p, q, r, theta, alpha}
///   HardySobolev with q = p and
///   beta = alpha p                -> Hardy{p, alpha}
/// Returns nothing when no reduction applies.
std::optional<InequalitySpec> reduce(const InequalitySpec& spec);

// ---------------------------------------------------------------------------
// Grid checks (Euclidean models, f = g * kernel)
// ---------------------------------------------------------------------------

struct GridSpec {
  double L = 8.0;   // grid covers [-L, L]^d
  int n = 1024;     // cells per axis at the coarsest level (power of two)
  int levels = 3;   // dyadic refinements; level l uses n * 2^l cells
};

enum class RatioVerdict { Bounded, Unbounded, Inconclusive };

struct RatioReport {
  std::vector<double> ratios;             // one per refinement level
  double max_ratio = 0.0;
  std::vector<double> refinement_trend;   // running max across levels
  RatioVerdict verdict = RatioVerdict::Inconclusive;
};

/// Input profile, possibly level-dependent (concentrating families shrink
/// with the level; fixed inputs ignore it).
using ProfileFamily1D = std::function<double(int level, double x)>;
using ProfileFamily2D = std::function<double(int level, double x, double y)>;

ProfileFamily1D fixed_profile(std::function<double(double)> g);

/// Ratio ( int |g*K|^q |x|^{-beta} )^{1/q} / ||g||_p across grid refinements.
/// d = 1 model; throws GridError when the kernel singularity is
/// under-resolved (cell wider than a tenth of the singularity scale).
RatioReport check_hardy_sobolev(const InequalitySpec& spec, const ProfileFamily1D& g,
                                const KernelBound& kernel, const GridSpec& grid);

/// Same check on the d = 2 grid (direct convolution; keep n modest).
RatioReport check_hardy_sobolev(const InequalitySpec& spec, const ProfileFamily2D& g,
                                const KernelBound& kernel, const GridSpec& grid);

/// Splits the convolution by the relative size of |y| against |x|
/// (2|y| < |x|, |x| <= 2|y| < 4|x|, |y| >= 2|x|) and certifies the partition
/// bound LHS <= 3^q (M1 + M2 + M3) on the grid.
struct RegionShares {
  double m1_share = 0.0, m2_share = 0.0, m3_share = 0.0;
  double lhs = 0.0;    // int |g*K|^q |x|^{-beta}, unsplit
  double bound = 0.0;  // 3^q (M1 + M2 + M3)
  bool holds = false;
};

RegionShares region_decomposition(const InequalitySpec& spec,
                                  const std::function<double(double)>& g,
                                  const KernelBound& kernel, const GridSpec& grid);

/// Critical-exponent check with the weight omega_r^{-1} inside the q-norm.
RatioReport check_critical_hardy(const InequalitySpec& spec, const ProfileFamily1D& g,
                                 const KernelBound& kernel, const GridSpec& grid);

/// Interpolation check plus the exact intermediate Hoelder step
///   || |x|^a f ||_r^r <= || |x|^{(a - b(1-theta))/theta} f ||_{q~}^{theta r}
///                        || |x|^b f ||_q^{(1-theta) r},
/// asserted on the same grid data with zero slack.
struct CKNReport {
  RatioReport ratio;
  double holder_lhs = 0.0;
  double holder_rhs = 0.0;
  bool holder_holds = false;
};

CKNReport check_ckn(const InequalitySpec& spec, const ProfileFamily1D& g,
                    const KernelBound& kernel, const GridSpec& grid);

/// Bilinear double-sum check (d = 1 only); the |y|^{-beta} factor is absorbed
/// into the second Sobolev surrogate g = g_density * K_beta.
RatioReport check_hls(const InequalitySpec& spec, const std::function<double(double)>& fd,
                      const std::function<double(double)>& gd, const KernelBound& kernel,
                      const GridSpec& grid);

/// ||g||_p || |x|^{beta/q} f ||_{q'} >= ||f||_2^2 / kappa, with kappa the
/// constant measured on the same run; the Hoelder step underneath is exact.
struct UncertaintyReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double kappa = 0.0;  // measured q-norm / ||g||_p quotient
  bool pass = false;
  double holder_lhs = 0.0;
  double holder_rhs = 0.0;
  bool holder_holds = false;
};

UncertaintyReport check_uncertainty(const InequalitySpec& spec,
                                    const std::function<double(double)>& g,
                                    const KernelBound& kernel, const GridSpec& grid);

/// Finite-sum Hoelder identity ||f/w||_q ||w f||_{q'} >= ||f||_2^2 for any
/// grid data f and positive weight w; exact up to rounding.
struct HolderCore {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

HolderCore holder_core(const Eigen::VectorXd& f, const Eigen::VectorXd& w, double q);

// ---------------------------------------------------------------------------
// Critical boundary probe
// ---------------------------------------------------------------------------

/// Log-exponent comparison behind the critical window q < (r-1)p': the
/// tail-vs-head constant built from the weight pair
/// (omega_r^{-1} density, kernel-derived psi) grows like
/// (log 1/R)^{(1-r)/q + 1/p'} as R -> 0, so it is finite exactly when that
/// exponent is negative.  Borderline (zero exponent) reports divergent.
struct BoundaryProbe {
  double log_exponent = 0.0;
  double boundary_q = 0.0;  // (r-1) p'
  bool finite = false;
};

BoundaryProbe critical_boundary_probe(double p, double r, double q);

}  // namespace hardyverify

#endif
