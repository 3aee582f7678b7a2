#pragma once

#include <complex>
#include <optional>

namespace qosc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Deformation parameter q together with an explicit logarithm branch.
/// Every non-integer power q^x is evaluated as exp(x log q) with
/// log q = ln|q| + i (Arg q + 2 pi log_branch), so results are
/// reproducible across platforms and the branch is part of the value.
struct Deformation {
  Complex q;
  std::optional<double> epsilon;  // set iff q was requested as e^{i eps}
  int log_branch = 0;

  /// q given directly. Rejects q = 0 and q = +-1 exactly; callers that
  /// want the q -> 1 limit should pass a nearby value instead.
  static Deformation from_q(Complex q, int log_branch = 0);

  /// q = e^{i eps} on the unit circle. The log branch is chosen so that
  /// log q = i eps exactly (plus extra_branch full turns), which keeps
  /// qbracket equal to sin(eps x)/sin(eps) for every eps in (0, 2 pi).
  static Deformation unit_circle(double eps, int extra_branch = 0);

  Complex log_q() const;
};

/// Exponent pair (alpha, beta) of the two-parameter bracket
/// [x]_{alpha,beta} = (q^{alpha x} - q^{beta x}) / (q^alpha - q^beta).
struct GenBracketParams {
  Complex alpha;
  Complex beta;
};

/// Scalars of the deformed Inonu-Wigner map from su_{sqrt q}(2) ladders to a
/// deformed oscillator: the rescaling mu, the product eta*xi entering the
/// number-operator shift, and the phase alpha' = pi/2 + ell pi that solves the
/// two consistency equations on branch ell.
struct IWScalars {
  Complex mu;
  Complex eta_xi;
  double alpha_prime = 0.0;
  int ell = 0;
};

/// q^x on the branch carried by d.
Complex qpow(const Deformation& d, Complex x);

/// [x] = (q^x - q^{-x}) / (q - q^{-1}).
Complex qbracket(const Deformation& d, Complex x);

/// [x]_{alpha,beta}; reduces to qbracket at (alpha, beta) = (1, -1).
Complex qbracket_gen(const Deformation& d, const GenBracketParams& p, Complex x);

/// Closed-form solution of
///   mu^2/(q^{1/2}-q^{-1/2}) * q^{-+ eta xi/(2 mu^2)} = -+ 1/(q^{1/2}+q^{-1/2})
/// on branch ell. Throws for q on the real line at -1 (and q = 1 is already
/// excluded by Deformation).
IWScalars solve_iw_scalars(const Deformation& d, int ell);

/// Max modulus of the two consistency-equation residuals for s.
double iw_consistency_residual(const Deformation& d, const IWScalars& s);

}  // namespace qosc
