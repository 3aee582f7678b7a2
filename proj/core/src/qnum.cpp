#include "qosc/qnum.hpp"

#include <cmath>
#include <stdexcept>

namespace qosc {

namespace {

void check_q(const Complex& q) {
  if (q == Complex(0.0, 0.0)) {
    throw std::domain_error("Deformation: q = 0 is not allowed");
  }
  if (q == Complex(1.0, 0.0) || q == Complex(-1.0, 0.0)) {
    throw std::domain_error(
        "Deformation: q = +-1 is excluded; evaluate the q -> 1 limit with a "
        "nearby q instead");
  }
}

}  // namespace

Deformation Deformation::from_q(Complex q, int log_branch) {
  check_q(q);
  Deformation d;
  d.q = q;
  d.log_branch = log_branch;
  return d;
}

Deformation Deformation::unit_circle(double eps, int extra_branch) {
  Complex q = std::polar(1.0, eps);
  check_q(q);
  Deformation d;
  d.q = q;
  d.epsilon = eps;
  // Pick the branch so Arg q + 2 pi branch = eps, i.e. log q = i eps.
  d.log_branch =
      static_cast<int>(std::lround((eps - std::arg(q)) / (2.0 * kPi))) +
      extra_branch;
  return d;
}

Complex Deformation::log_q() const {
  return Complex(std::log(std::abs(q)),
                 std::arg(q) + 2.0 * kPi * static_cast<double>(log_branch));
}

Complex qpow(const Deformation& d, Complex x) {
  return std::exp(x * d.log_q());
}

Complex qbracket(const Deformation& d, Complex x) {
  const Complex den = qpow(d, 1.0) - qpow(d, -1.0);
  if (den == Complex(0.0, 0.0)) {
    throw std::domain_error("qbracket: q - 1/q vanishes");
  }
  return (qpow(d, x) - qpow(d, -x)) / den;
}

Complex qbracket_gen(const Deformation& d, const GenBracketParams& p,
                     Complex x) {
  const Complex den = qpow(d, p.alpha) - qpow(d, p.beta);
  if (den == Complex(0.0, 0.0)) {
    throw std::domain_error("qbracket_gen: q^alpha = q^beta");
  }
  return (qpow(d, p.alpha * x) - qpow(d, p.beta * x)) / den;
}

IWScalars solve_iw_scalars(const Deformation& d, int ell) {
  const Complex q = d.q;
  if (q + Complex(1.0, 0.0) == Complex(0.0, 0.0)) {
    throw std::domain_error("solve_iw_scalars: q = -1 is singular");
  }
  const Complex log_q = d.log_q();
  if (log_q == Complex(0.0, 0.0)) {
    throw std::domain_error("solve_iw_scalars: log q = 0");
  }

  IWScalars s;
  s.ell = ell;
  s.alpha_prime = kPi / 2.0 + static_cast<double>(ell) * kPi;

  // mu = e^{-i alpha'/2} ((q-1)/(q+1))^{1/2}
  // eta xi = 2 e^{-i alpha'} ((q-1)/(q+1)) (i alpha'/log q)
  const Complex ratio = (q - 1.0) / (q + 1.0);
  const Complex phase = std::exp(Complex(0.0, -s.alpha_prime));
  s.mu = std::exp(Complex(0.0, -s.alpha_prime / 2.0)) * std::sqrt(ratio);
  s.eta_xi = 2.0 * phase * ratio * (Complex(0.0, s.alpha_prime) / log_q);
  return s;
}

double iw_consistency_residual(const Deformation& d, const IWScalars& s) {
  const Complex mu2 = s.mu * s.mu;
  if (mu2 == Complex(0.0, 0.0)) {
    throw std::domain_error("iw_consistency_residual: mu = 0");
  }
  const Complex sq = qpow(d, 0.5);
  const Complex isq = qpow(d, -0.5);
  const Complex lead = mu2 / (sq - isq);
  const Complex rhs = 1.0 / (sq + isq);
  const Complex w = s.eta_xi / (2.0 * mu2);
  // lead * q^{-w} = -rhs  and  lead * q^{+w} = +rhs
  const double r1 = std::abs(lead * qpow(d, -w) + rhs);
  const double r2 = std::abs(lead * qpow(d, w) - rhs);
  return std::max(r1, r2);
}

}  // namespace qosc
