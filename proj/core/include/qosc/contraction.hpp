#pragma once

#include <vector>

#include "qosc/reps.hpp"

namespace qosc {

/// Scalars of the undeformed contraction h+ = mu J+, h- = mu J-,
/// h0 = J0 + (eta / 2 mu^2) xi, with xi the eigenvalue of the central
/// element (always represented as xi times identity).
struct IWTransform {
  Complex mu{1.0, 0.0};
  Complex eta{0.0, 0.0};
  Complex xi{1.0, 0.0};
};

struct IWImage {
  IWTransform t;
  Op h_plus, h_minus, h0, unit;
};

/// Build the transformed generators on an undeformed spin rep.
IWImage apply_iw(const SpinRep& spin, const IWTransform& t);

/// Target relations, exact at every mu != 0:
///   "contr.a" [h0, h+-] = +-h+-, "contr.b" [h+, h-] = 2 mu^2 h0 - eta unit,
///   "contr.c" unit central.
VerificationReport verify_iw_image(const IWImage& im, const InteriorWindow& w,
                                   double tol = 1e-12);

struct IWSweepPoint {
  double mu = 0.0;
  double residual = 0.0;  // || [h+, h-] + eta xi I || on the window interior
};

/// mu -> 0 with the rep co-varying: each step uses a bottom window of an
/// undeformed ladder with j = eta xi / (2 mu^2), so h0 = (ladder index) stays
/// finite and the contracted relation [h+, h-] = -eta xi emerges with
/// residual 2 mu^2 n_max.
std::vector<IWSweepPoint> iw_contraction_sweep(const std::vector<double>& mus,
                                               double eta, double xi,
                                               int window_states,
                                               const InteriorWindow& w);

/// q-analogue of the contraction on a sqrt-q-bracket spin rep:
///   a+ = mu J+, a = mu J-, N = J0 + (i alpha' / log q - 1/2)
/// with mu, alpha' from solve_iw_scalars on branch ell. The triple obeys the
/// HY relations.
struct HYFromSpin {
  SpinRep spin;
  IWScalars scalars;
  Op a, adag, n_op;
};

HYFromSpin hy_from_suq(const SpinRep& spin, int ell);
VerificationReport verify_hy_from_suq(const HYFromSpin& h,
                                      const InteriorWindow& w,
                                      double tol = 1e-10);

/// Contracted algebra [A, A+] = q^{-2N} with A|n> = sqrt(c_n)|n-1>,
/// c_n = sum_{m<n} q^{-2m}.
struct AqRep {
  Deformation d;
  Op A, Adag, n_op;
  std::vector<Complex> c;  // c_0 .. c_D
};

AqRep build_aq_rep(const Deformation& d, int dim);
VerificationReport verify_aq(const AqRep& aq, const InteriorWindow& w,
                             double tol = 1e-12);

/// MB oscillator recovered from the contracted ladder via a = q^{N/2} A,
/// a+ = A+ q^{N/2}; returned as a Fock MB rep so the reps verifiers apply.
OscRep mb_from_aq(const AqRep& aq);

/// One step of the spin -> A_q map A_s = pref(s) J+, A_s+ = pref(s) J-,
/// N_s = s - J0, with pref = sqrt(q - q^-1)/q^s by default. The printed
/// linear prefactor (q - q^-1)/q^s is kept behind the flag; it rescales the
/// limit relation and never reaches q^{-2N} (see scale).
struct CKResult {
  double s = 0.0;
  bool sqrt_prefactor = true;
  Op A, Adag, n_op;
  double residual = 0.0;  // interior residual of [A, A+] vs q^{-2 N_s}
  double scale = 0.0;     // interior max of |q^{-2 N_s}|
};

CKResult ck_contract(const SpinRep& spin, double s, bool sqrt_prefactor,
                     const InteriorWindow& w);

/// Fixed spin rep, increasing s: residual decays like q^{-2s} (log-linear,
/// slope -2 log q).
std::vector<CKResult> ck_sweep(const SpinRep& spin,
                               const std::vector<double>& ss,
                               bool sqrt_prefactor, const InteriorWindow& w);

/// Co-varying contraction j = s on a top window, where N_s = j - J0 counts
/// steps from the highest weight and the target q^{-2N} is s-independent.
/// Distinguishes the prefactors: sqrt converges to the target, printed
/// settles at the (q - q^-1 - 1)-proportional offset.
std::vector<CKResult> ck_limit_sweep(const Deformation& d,
                                     const std::vector<double>& ss,
                                     int window_states, bool sqrt_prefactor,
                                     const InteriorWindow& w);

/// Right-coaction checks of Psi : A_q -> A_q x su_q(2),
///   Psi(N) = N x 1 - 1 x J0,
///   Psi(A) = A x q^{-J0} + sqrt(q - q^-1) q^{-N} x J+,  Psi(A+) mirrored.
/// Items: homomorphism on the pairs (N,A), (N,A+), (A,A+); counit
/// substitution; coassociativity on the triple space against the coproduct
/// D(J+-) = J+- x q^{-J0} + q^{J0} x J+-, D(J0) primitive (convention fixed
/// here; the swapped q^{+-J0} pairing fails and its residual is noted).
VerificationReport coaction_check(const AqRep& aq, const SpinRep& spin,
                                  const InteriorWindow& w, double tol = 1e-10);

/// Finite-eta contraction B = eta J+, B+ = eta J-, N = -J0 + kappa/eta^2,
/// H = 2 kappa I on a top window of j = kappa/eta^2 with q = exp(eta^2 omega).
struct CeleghiniParams {
  double eta = 0.0;
  double omega = 0.0;
  double kappa = 0.0;
};

struct CeleghiniSystem {
  CeleghiniParams p;
  Deformation d;
  SpinRep spin;
  Op B, Bdag, n_op, h;
};

CeleghiniSystem celeghini_contract(const CeleghiniParams& p, int window_states);

/// Deviations of [B, B+] from the two limit candidates: the finite-eta
/// computation tends to sinh(2 omega kappa)/omega, the printed target
/// sinh(omega H/2)/(omega/2) evaluates to 2 sinh(omega kappa)/omega; both are
/// reported, the trend is asserted only for the former.
struct CeleghiniPoint {
  double eta = 0.0;
  double rho_limit = 0.0;    // vs sinh(2 omega kappa)/omega
  double rho_printed = 0.0;  // vs 2 sinh(omega kappa)/omega
  double grading = 0.0;      // [N, B] + B residual
};

CeleghiniPoint celeghini_measure(const CeleghiniSystem& s,
                                 const InteriorWindow& w);

std::vector<CeleghiniPoint> celeghini_sweep(const std::vector<double>& etas,
                                            double omega, double kappa,
                                            int window_states,
                                            const InteriorWindow& w);

}  // namespace qosc
