#include "qosc/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qosc {

namespace {

std::string iw_echo(const IWTransform& t, const InteriorWindow& w) {
  std::ostringstream o;
  o << "mu=" << format_complex(t.mu) << " eta=" << format_complex(t.eta)
    << " xi=" << format_complex(t.xi) << " w=(" << w.low << "," << w.high
    << ")";
  return o.str();
}

void require_base(const SpinRep& spin, BracketBase base, const char* what) {
  if (spin.base != base)
    throw std::invalid_argument(std::string(what) +
                                ": spin rep has the wrong bracket base");
}

Complex qm2(const Deformation& d) { return qpow(d, Complex(-2.0, 0.0)); }

}  // namespace

IWImage apply_iw(const SpinRep& spin, const IWTransform& t) {
  require_base(spin, BracketBase::Undeformed, "apply_iw");
  if (t.mu == Complex(0.0, 0.0))
    throw std::invalid_argument("apply_iw: mu must be nonzero");
  IWImage im;
  im.t = t;
  const Op id = identity_like(spin.j0);
  im.h_plus = t.mu * spin.jp;
  im.h_minus = t.mu * spin.jm;
  im.h0 = spin.j0 + (t.eta * t.xi / (Complex(2.0, 0.0) * t.mu * t.mu)) * id;
  im.unit = t.xi * id;
  return im;
}

VerificationReport verify_iw_image(const IWImage& im, const InteriorWindow& w,
                                   double tol) {
  const IWTransform& t = im.t;
  const std::string echo = iw_echo(t, w);
  VerificationReport out;
  const double grading =
      std::max(interior_residual(commutator(im.h0, im.h_plus), im.h_plus, w),
               interior_residual(commutator(im.h0, im.h_minus),
                                 Complex(-1.0, 0.0) * im.h_minus, w));
  out.add("contr.a", echo, grading, tol);
  const Op rhs =
      Complex(2.0, 0.0) * t.mu * t.mu * im.h0 - t.eta * im.unit;
  out.add("contr.b", echo,
          interior_residual(commutator(im.h_plus, im.h_minus), rhs, w), tol);
  const Op zero = Complex(0.0, 0.0) * im.unit;
  const double central =
      std::max(interior_residual(commutator(im.unit, im.h_plus), zero, w),
               interior_residual(commutator(im.unit, im.h0), zero, w));
  out.add("contr.c", echo, central, tol);
  return out;
}

std::vector<IWSweepPoint> iw_contraction_sweep(const std::vector<double>& mus,
                                               double eta, double xi,
                                               int window_states,
                                               const InteriorWindow& w) {
  std::vector<IWSweepPoint> out;
  out.reserve(mus.size());
  for (double mu : mus) {
    if (mu == 0.0)
      throw std::invalid_argument("iw_contraction_sweep: mu must be nonzero");
    const double j = eta * xi / (2.0 * mu * mu);
    // Small j (large mu) may not hold the requested window; use what fits.
    const int count =
        std::min(window_states, static_cast<int>(std::floor(2.0 * j)) + 1);
    const SpinRep spin =
        build_spin_window_bottom(j, count, BracketBase::Undeformed);
    const IWImage im =
        apply_iw(spin, IWTransform{Complex(mu, 0.0), Complex(eta, 0.0),
                                   Complex(xi, 0.0)});
    const Op target = Complex(-eta * xi, 0.0) * identity_like(im.h0);
    IWSweepPoint pt;
    pt.mu = mu;
    pt.residual =
        interior_residual(commutator(im.h_plus, im.h_minus), target, w);
    out.push_back(pt);
  }
  return out;
}

HYFromSpin hy_from_suq(const SpinRep& spin, int ell) {
  require_base(spin, BracketBase::SqrtQ, "hy_from_suq");
  const Deformation d = *spin.d;
  HYFromSpin h;
  h.spin = spin;
  h.scalars = solve_iw_scalars(d, ell);
  const Complex shift =
      Complex(0.0, 1.0) * Complex(h.scalars.alpha_prime, 0.0) / d.log_q() -
      Complex(0.5, 0.0);
  h.adag = h.scalars.mu * spin.jp;
  h.a = h.scalars.mu * spin.jm;
  h.n_op = spin.j0 + shift * identity_like(spin.j0);
  return h;
}

VerificationReport verify_hy_from_suq(const HYFromSpin& h,
                                      const InteriorWindow& w, double tol) {
  const Deformation d = *h.spin.d;
  std::ostringstream echo;
  echo << "q=" << format_complex(d.q) << " j=" << h.spin.j
       << " D=" << h.spin.dim << " ell=" << h.scalars.ell << " w=(" << w.low
       << "," << w.high << ")";
  VerificationReport out;
  const double grading = std::max(
      interior_residual(commutator(h.n_op, h.adag), h.adag, w),
      interior_residual(commutator(h.n_op, h.a), Complex(-1.0, 0.0) * h.a, w));
  out.add("cele.a", echo.str(), grading, tol);
  const Op rhs = diag_fn(
      [&d](Complex x) { return qbracket(d, x + 1.0) - qbracket(d, x); },
      h.n_op);
  out.add("cele.b", echo.str(),
          interior_residual(commutator(h.a, h.adag), rhs, w), tol);
  return out;
}

AqRep build_aq_rep(const Deformation& d, int dim) {
  if (dim < 1) throw std::invalid_argument("build_aq_rep: dim must be >= 1");
  AqRep aq;
  aq.d = d;
  aq.c.assign(dim + 1, Complex(0.0, 0.0));
  const Complex r = qm2(d);
  for (int n = 0; n < dim; ++n) aq.c[n + 1] = Complex(1.0, 0.0) + r * aq.c[n];

  std::ostringstream tag;
  tag << "aq[q=" << format_complex(d.q) << ",l=" << d.log_branch
      << ",D=" << dim << "]";
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd Ad = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd N = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) N(n, n) = Complex(double(n), 0.0);
  for (int n = 1; n < dim; ++n) {
    const Complex s = std::sqrt(aq.c[n]);
    A(n - 1, n) = s;
    Ad(n, n - 1) = s;
  }
  aq.A = make_op(A, tag.str());
  aq.Adag = make_op(Ad, tag.str());
  aq.n_op = make_op(N, tag.str());
  return aq;
}

VerificationReport verify_aq(const AqRep& aq, const InteriorWindow& w,
                             double tol) {
  std::ostringstream echo;
  echo << "q=" << format_complex(aq.d.q) << " D=" << aq.n_op.dim() << " w=("
       << w.low << "," << w.high << ")";
  VerificationReport out;
  const double grading =
      std::max(interior_residual(commutator(aq.n_op, aq.Adag), aq.Adag, w),
               interior_residual(commutator(aq.n_op, aq.A),
                                 Complex(-1.0, 0.0) * aq.A, w));
  out.add("aq.a", echo.str(), grading, tol);
  const Op rhs = diag_fn(
      [&](Complex x) { return qpow(aq.d, Complex(-2.0, 0.0) * x); }, aq.n_op);
  out.add("aq.b", echo.str(),
          interior_residual(commutator(aq.A, aq.Adag), rhs, w), tol);
  return out;
}

OscRep mb_from_aq(const AqRep& aq) {
  OscParams p;
  p.kind = OscKind::MB;
  p.d = aq.d;
  p.dim = aq.n_op.dim();
  p.norm = LadderNorm::SqrtSplit;
  const Op half =
      diag_fn([&](Complex x) { return qpow(aq.d, Complex(0.5, 0.0) * x); },
              aq.n_op);
  OscRep r;
  r.params = p;
  r.a = half * aq.A;
  r.adag = aq.Adag * half;
  r.n_op = aq.n_op;
  r.casimir = Complex(0.0, 0.0);
  return r;
}

CKResult ck_contract(const SpinRep& spin, double s, bool sqrt_prefactor,
                     const InteriorWindow& w) {
  require_base(spin, BracketBase::Q, "ck_contract");
  const Deformation d = *spin.d;
  const Complex gap = d.q - Complex(1.0, 0.0) / d.q;
  const Complex pref =
      (sqrt_prefactor ? std::sqrt(gap) : gap) * qpow(d, Complex(-s, 0.0));
  CKResult r;
  r.s = s;
  r.sqrt_prefactor = sqrt_prefactor;
  r.A = pref * spin.jp;
  r.Adag = pref * spin.jm;
  r.n_op = Complex(s, 0.0) * identity_like(spin.j0) - spin.j0;
  const Op target = diag_fn(
      [&](Complex x) { return qpow(d, Complex(-2.0, 0.0) * x); }, r.n_op);
  r.residual = interior_residual(commutator(r.A, r.Adag), target, w);
  r.scale = interior_residual(target, Complex(0.0, 0.0) * target, w);
  return r;
}

std::vector<CKResult> ck_sweep(const SpinRep& spin,
                               const std::vector<double>& ss,
                               bool sqrt_prefactor, const InteriorWindow& w) {
  std::vector<CKResult> out;
  out.reserve(ss.size());
  for (double s : ss) out.push_back(ck_contract(spin, s, sqrt_prefactor, w));
  return out;
}

std::vector<CKResult> ck_limit_sweep(const Deformation& d,
                                     const std::vector<double>& ss,
                                     int window_states, bool sqrt_prefactor,
                                     const InteriorWindow& w) {
  std::vector<CKResult> out;
  out.reserve(ss.size());
  for (double s : ss) {
    const int count =
        std::min(window_states, static_cast<int>(std::floor(2.0 * s)) + 1);
    const SpinRep spin = build_spin_window_top(s, count, BracketBase::Q, d);
    out.push_back(ck_contract(spin, s, sqrt_prefactor, w));
  }
  return out;
}

VerificationReport coaction_check(const AqRep& aq, const SpinRep& spin,
                                  const InteriorWindow& w, double tol) {
  require_base(spin, BracketBase::Q, "coaction_check");
  const Deformation d = aq.d;
  if (spin.d->q != d.q || spin.d->log_branch != d.log_branch)
    throw std::invalid_argument("coaction_check: mismatched deformations");

  std::ostringstream es;
  es << "q=" << format_complex(d.q) << " D=" << aq.n_op.dim()
     << " j=" << spin.j << " w=(" << w.low << "," << w.high << ")";
  const std::string echo = es.str();

  const Complex sq = std::sqrt(d.q - Complex(1.0, 0.0) / d.q);
  const Op ia = identity_like(aq.n_op);
  const Op ih = identity_like(spin.j0);
  auto dpow = [&](const Op& diag, double k) {
    return diag_fn([&, k](Complex x) { return qpow(d, Complex(k, 0.0) * x); },
                   diag);
  };
  const Op qmJ0 = dpow(spin.j0, -1.0);
  const Op qpJ0 = dpow(spin.j0, 1.0);
  const Op qp2J0 = dpow(spin.j0, 2.0);
  const Op qmN = dpow(aq.n_op, -1.0);
  const Op qm2N = dpow(aq.n_op, -2.0);

  const Op psiA = tensor(aq.A, qmJ0) + sq * tensor(qmN, spin.jp);
  const Op psiAd = tensor(aq.Adag, qmJ0) + sq * tensor(qmN, spin.jm);
  const Op psiN = tensor(aq.n_op, ih) - tensor(ia, spin.j0);

  VerificationReport out;
  out.add("coact.hom.na", echo,
          interior_residual(commutator(psiN, psiA),
                            Complex(-1.0, 0.0) * psiA, w),
          tol);
  out.add("coact.hom.nad", echo,
          interior_residual(commutator(psiN, psiAd), psiAd, w), tol);
  out.add("coact.hom.aad", echo,
          interior_residual(commutator(psiA, psiAd), tensor(qm2N, qp2J0), w),
          tol);

  // Counit substitution eps(J+-) = 0, eps(q^{+-J0}) = 1 must return the
  // generators themselves.
  const Complex eps_group(1.0, 0.0);
  const Complex eps_ladder(0.0, 0.0);
  const Op backA = eps_group * aq.A + (sq * eps_ladder) * qmN;
  const Op backN = aq.n_op - eps_ladder * ia;
  const double counit = std::max(max_abs(backA - aq.A),
                                 max_abs(backN - aq.n_op));
  out.add("coact.counit", echo, counit, tol);

  // Coassociativity on the triple space with the coproduct written in the
  // header; the q^{+-J0} pairing swap is the documented negative control.
  // Both sides are linear in the generators (no products), so there is no
  // truncation defect and the comparison runs over the full matrices.
  const Op psi_qmN = tensor(qmN, qpJ0);
  const Op d_qmJ0 = tensor(qmJ0, qmJ0);
  auto coassoc = [&](bool swapped) {
    const Op& lo = swapped ? qpJ0 : qmJ0;
    const Op& hi = swapped ? qmJ0 : qpJ0;
    const Op d_jp = tensor(spin.jp, lo) + tensor(hi, spin.jp);
    const Op d_jm = tensor(spin.jm, lo) + tensor(hi, spin.jm);
    const Op d_j0 = tensor(spin.j0, ih) + tensor(ih, spin.j0);
    const Op lhsA = tensor(psiA, qmJ0) + sq * tensor(psi_qmN, spin.jp);
    const Op rhsA = tensor(aq.A, d_qmJ0) + sq * tensor(qmN, d_jp);
    const Op lhsAd = tensor(psiAd, qmJ0) + sq * tensor(psi_qmN, spin.jm);
    const Op rhsAd = tensor(aq.Adag, d_qmJ0) + sq * tensor(qmN, d_jm);
    const Op lhsN = tensor(psiN, ih) - tensor(tensor(ia, ih), spin.j0);
    const Op rhsN = tensor(aq.n_op, tensor(ih, ih)) - tensor(ia, d_j0);
    return std::max({max_abs(lhsA - rhsA), max_abs(lhsAd - rhsAd),
                     max_abs(lhsN - rhsN)});
  };
  CheckItem& item = out.add("coact.coassoc", echo, coassoc(false), tol);
  std::ostringstream note;
  note << "swapped q^{+-J0} pairing residual " << coassoc(true);
  item.notes.push_back(note.str());
  return out;
}

CeleghiniSystem celeghini_contract(const CeleghiniParams& p,
                                   int window_states) {
  if (p.eta <= 0.0)
    throw std::invalid_argument("celeghini_contract: eta must be > 0");
  if (p.omega == 0.0)
    throw std::invalid_argument("celeghini_contract: omega must be nonzero");
  CeleghiniSystem s;
  s.p = p;
  s.d = Deformation::from_q(Complex(std::exp(p.eta * p.eta * p.omega), 0.0));
  const double j = p.kappa / (p.eta * p.eta);
  // Large eta shrinks j below the requested window; use what fits.
  const int count =
      std::min(window_states, static_cast<int>(std::floor(2.0 * j)) + 1);
  s.spin = build_spin_window_top(j, count, BracketBase::Q, s.d);
  const Op id = identity_like(s.spin.j0);
  s.B = Complex(p.eta, 0.0) * s.spin.jp;
  s.Bdag = Complex(p.eta, 0.0) * s.spin.jm;
  s.n_op = Complex(j, 0.0) * id - s.spin.j0;
  s.h = Complex(2.0 * p.kappa, 0.0) * id;
  return s;
}

CeleghiniPoint celeghini_measure(const CeleghiniSystem& s,
                                 const InteriorWindow& w) {
  const double omega = s.p.omega;
  const double kappa = s.p.kappa;
  const Op id = identity_like(s.n_op);
  const Op bb = commutator(s.B, s.Bdag);
  CeleghiniPoint pt;
  pt.eta = s.p.eta;
  pt.rho_limit = interior_residual(
      bb, Complex(std::sinh(2.0 * omega * kappa) / omega, 0.0) * id, w);
  pt.rho_printed = interior_residual(
      bb, Complex(2.0 * std::sinh(omega * kappa) / omega, 0.0) * id, w);
  pt.grading = interior_residual(commutator(s.n_op, s.B),
                                 Complex(-1.0, 0.0) * s.B, w);
  return pt;
}

std::vector<CeleghiniPoint> celeghini_sweep(const std::vector<double>& etas,
                                            double omega, double kappa,
                                            int window_states,
                                            const InteriorWindow& w) {
  std::vector<CeleghiniPoint> out;
  out.reserve(etas.size());
  for (double eta : etas) {
    const CeleghiniSystem s =
        celeghini_contract(CeleghiniParams{eta, omega, kappa}, window_states);
    out.push_back(celeghini_measure(s, w));
  }
  return out;
}

}  // namespace qosc
