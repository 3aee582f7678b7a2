#pragma once

#include <optional>
#include <vector>

#include "qosc/qnum.hpp"
#include "qosc/report.hpp"

namespace qosc {

// Finite-dimensional truncation of the deformed ladder spectrum on the unit
// circle q = e^{i eps}.  A highest state |psi_k> exists when the structure
// function returns to its ground value after k+1 steps,
//
//   [nu0 + k + 1] = [nu0],
//
// which for q on the unit circle is solved in closed form by
//
//   nu0 * eps = -(k + 1) eps / 2 + (ell + 1/2) pi,   ell integer.
//
// Unitarity of the resulting (k+1)-dimensional ladder additionally needs
// every interior structure-function value to stay non-negative.

/// One truncation instance: ladder length k+1 at q = e^{i epsilon}.
struct TruncationProblem {
  int k = 0;          // highest occupation; dimension is k + 1
  int ell = 0;        // branch index of the closed-form solution
  double epsilon = 1.0;
};

/// Outcome of the positivity screen at the solved nu0.
struct PositivityResult {
  double nu0 = 0.0;
  bool feasible = false;
  /// margins[n-1] = [n + nu0] - [nu0] for n = 1..k, from the cosine form.
  std::vector<double> margins;
  /// Smallest n whose margin dips below -1e-12, if any.
  std::optional<int> first_failure;
  /// Largest disagreement between the bracket-difference and cosine
  /// evaluations of the margins (and of the defect at n = k+1).
  double cross_residual = 0.0;
  /// True when some margin sits within 1e-12 of zero either way.
  bool borderline = false;
};

/// Structure-function values lambda_n = lambda0 + [n + nu0] - [nu0] for
/// n = 0..n_max, evaluated with the deformation's own branch.
std::vector<Complex> lambda_seq(double nu0, Complex lambda0,
                                const Deformation& d, int n_max);

/// Largest deviation between the difference form of lambda_n and its
/// factored product form over n = 0..n_max.  Both are the same function
/// written differently, so this is a floating-point consistency probe.
double lambda_form_residual(double nu0, Complex lambda0, const Deformation& d,
                            int n_max);

/// Closed-form nu0 for the truncation condition.  Throws std::domain_error
/// when sin(epsilon) is too small for the division to mean anything
/// (|sin epsilon| < 1e-12).
double solve_truncation(const TruncationProblem& t);

/// |[nu0 + k + 1] - [nu0]| at q = e^{i epsilon}; zero when nu0 solves the
/// truncation condition.
double truncation_residual(const TruncationProblem& t, double nu0);

/// Solve for nu0, then screen the interior margins n = 1..k.  For k = 0
/// there are no interior states and the result is trivially feasible.
PositivityResult check_positivity(const TruncationProblem& t);

/// Full grid scan: every (epsilon, k, ell) cell with k = 0..k_max and ell
/// drawn from ells.  Grid points with |sin epsilon| < 1e-9 are emitted as
/// skipped rows rather than dropped, so the table stays rectangular.
std::vector<ScanRecord> scan_equivalence(const std::vector<double>& eps_grid,
                                         int k_max,
                                         const std::vector<int>& ells);

/// Minimum of |[nu0 + k + 1] - [nu0]| over a real-nu0 grid at real q.
/// Real q > 1 admits no truncation for k >= 0, so this floor stays far
/// from zero; callers assert that.
double real_q_truncation_scan(double q, int k, double nu_lo, double nu_hi,
                              double step);

}  // namespace qosc
