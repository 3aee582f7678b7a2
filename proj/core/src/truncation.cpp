#include "qosc/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qosc {

namespace {

constexpr double kSinFloor = 1e-12;   // solver refuses below this
constexpr double kScanSinFloor = 1e-9;  // scan marks the row skipped instead
constexpr double kMarginTol = 1e-12;

void validate_problem(const TruncationProblem& t) {
  if (t.k < 0) throw std::domain_error("truncation: k must be >= 0");
  if (!(t.epsilon > 0.0) || !(t.epsilon < 2.0 * M_PI))
    throw std::domain_error("truncation: epsilon must lie in (0, 2*pi)");
}

/// Interior margin [n + nu0] - [nu0] in its cosine form, valid once nu0
/// solves the truncation condition for (k, ell) at q = e^{i eps}.
double cosine_margin(int k, int ell, double eps, int n) {
  const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
  const double half = 0.5 * (k + 1) * eps;
  return sign / std::sin(eps) * (std::cos(half - n * eps) - std::cos(half));
}

}  // namespace

std::vector<Complex> lambda_seq(double nu0, Complex lambda0,
                                const Deformation& d, int n_max) {
  if (n_max < 0) throw std::domain_error("lambda_seq: n_max must be >= 0");
  const Complex base = qbracket(d, nu0);
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    out.push_back(lambda0 + qbracket(d, nu0 + n) - base);
  return out;
}

double lambda_form_residual(double nu0, Complex lambda0, const Deformation& d,
                            int n_max) {
  // Same spectrum, factored: the difference of brackets splits into a
  // half-step "sine" factor carrying n and a "cosine" factor carrying nu0.
  const Complex sine_den = qpow(d, 0.5) - qpow(d, -0.5);
  const Complex cos_den = qpow(d, 0.5) + qpow(d, -0.5);
  const auto diff = lambda_seq(nu0, lambda0, d, n_max);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const Complex sine = (qpow(d, 0.5 * n) - qpow(d, -0.5 * n)) / sine_den;
    const Complex cosine =
        (qpow(d, nu0 + 0.5 * n) + qpow(d, -nu0 - 0.5 * n)) / cos_den;
    worst = std::max(worst, std::abs(lambda0 + sine * cosine -
                                     diff[static_cast<size_t>(n)]));
  }
  return worst;
}

double solve_truncation(const TruncationProblem& t) {
  validate_problem(t);
  if (std::abs(std::sin(t.epsilon)) < kSinFloor)
    throw std::domain_error("truncation: sin(epsilon) vanishes, no solution");
  return (-0.5 * (t.k + 1) * t.epsilon + (t.ell + 0.5) * M_PI) / t.epsilon;
}

double truncation_residual(const TruncationProblem& t, double nu0) {
  validate_problem(t);
  const Deformation d = Deformation::unit_circle(t.epsilon);
  return std::abs(qbracket(d, nu0 + t.k + 1) - qbracket(d, nu0));
}

PositivityResult check_positivity(const TruncationProblem& t) {
  PositivityResult r;
  r.nu0 = solve_truncation(t);

  const Deformation d = Deformation::unit_circle(t.epsilon);
  const Complex base = qbracket(d, r.nu0);

  r.margins.reserve(static_cast<size_t>(std::max(t.k, 0)));
  r.feasible = true;
  for (int n = 1; n <= t.k; ++n) {
    const double m = cosine_margin(t.k, t.ell, t.epsilon, n);
    const Complex b = qbracket(d, r.nu0 + n) - base;
    r.cross_residual = std::max(r.cross_residual, std::abs(b - m));
    r.margins.push_back(m);
    if (std::abs(m) <= kMarginTol) r.borderline = true;
    if (m < -kMarginTol && r.feasible) {
      r.feasible = false;
      r.first_failure = n;
    }
  }

  // The defect at n = k+1 closes the ladder; fold its size into the same
  // cross-check (its cosine form is identically zero).
  const Complex defect = qbracket(d, r.nu0 + t.k + 1) - base;
  r.cross_residual = std::max(r.cross_residual, std::abs(defect));
  return r;
}

std::vector<ScanRecord> scan_equivalence(const std::vector<double>& eps_grid,
                                         int k_max,
                                         const std::vector<int>& ells) {
  if (k_max < 0) throw std::domain_error("scan: k_max must be >= 0");
  std::vector<ScanRecord> rows;
  rows.reserve(eps_grid.size() * static_cast<size_t>(k_max + 1) * ells.size());
  for (double eps : eps_grid) {
    const bool skip = std::abs(std::sin(eps)) < kScanSinFloor;
    for (int k = 0; k <= k_max; ++k) {
      for (int ell : ells) {
        ScanRecord rec;
        rec.epsilon = eps;
        rec.k = k;
        rec.ell = ell;
        rec.skipped = skip;
        if (!skip) {
          const PositivityResult p = check_positivity({k, ell, eps});
          rec.nu0 = p.nu0;
          rec.feasible = p.feasible;
          rec.first_failure = p.first_failure;
          rec.min_margin =
              p.margins.empty()
                  ? 0.0
                  : *std::min_element(p.margins.begin(), p.margins.end());
        }
        rows.push_back(rec);
      }
    }
  }
  return rows;
}

double real_q_truncation_scan(double q, int k, double nu_lo, double nu_hi,
                              double step) {
  if (!(q > 0.0) || q == 1.0)
    throw std::domain_error("real_q scan: need real q > 0, q != 1");
  if (k < 0) throw std::domain_error("real_q scan: k must be >= 0");
  if (!(step > 0.0) || !(nu_hi >= nu_lo))
    throw std::domain_error("real_q scan: bad grid");

  const Deformation d = Deformation::from_q(Complex(q, 0.0));
  double best = std::numeric_limits<double>::infinity();
  for (double nu = nu_lo; nu <= nu_hi + 0.5 * step; nu += step) {
    const double r = std::abs(qbracket(d, nu + k + 1) - qbracket(d, nu));
    best = std::min(best, r);
  }
  return best;
}

}  // namespace qosc
