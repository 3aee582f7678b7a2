#include "qosc/reps.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qosc {

namespace {

void validate_osc_params(const OscParams& p) {
  if (p.dim < 1) throw std::invalid_argument("oscillator dim must be >= 1");
  const bool two_param = p.kind == OscKind::GMB || p.kind == OscKind::GHY;
  if (two_param && !p.gen)
    throw std::invalid_argument("GMB/GHY need two-parameter bracket data");
}

Complex kind_bracket(const OscParams& p, Complex x) {
  if (p.kind == OscKind::GMB || p.kind == OscKind::GHY)
    return qbracket_gen(p.d, *p.gen, x);
  return qbracket(p.d, x);
}

std::string osc_tag(const OscParams& p) {
  std::ostringstream o;
  o << "osc[" << kind_name(p.kind) << ",q=" << format_complex(p.d.q)
    << ",D=" << p.dim << ",nmin=" << p.window_offset
    << ",nu0=" << format_complex(p.nu0)
    << ",l0=" << format_complex(p.lambda0);
  if (p.gen)
    o << ",a=" << format_complex(p.gen->alpha)
      << ",b=" << format_complex(p.gen->beta);
  o << (p.norm == LadderNorm::UnitRaise ? ",unit" : ",sqrt") << "]";
  return o.str();
}

std::string osc_echo(const OscParams& p, const InteriorWindow& w) {
  std::ostringstream o;
  o << kind_name(p.kind) << " q=" << format_complex(p.d.q) << " D=" << p.dim
    << " nmin=" << p.window_offset << " nu0=" << format_complex(p.nu0)
    << " lambda0=" << format_complex(p.lambda0);
  if (p.gen)
    o << " alpha=" << format_complex(p.gen->alpha)
      << " beta=" << format_complex(p.gen->beta);
  o << " c=" << format_complex(osc_casimir_value(p)) << " w=(" << w.low << ","
    << w.high << ")";
  return o.str();
}

const char* base_code(BracketBase b) {
  switch (b) {
    case BracketBase::Q: return "q";
    case BracketBase::SqrtQ: return "sqrtq";
    case BracketBase::Undeformed: return "lin";
  }
  return "?";
}

std::function<Complex(Complex)> base_bracket(BracketBase base,
                                             const std::optional<Deformation>& d) {
  if (base == BracketBase::Undeformed)
    return [](Complex x) { return x; };
  if (!d)
    throw std::invalid_argument("deformed spin ladder needs a deformation");
  const Deformation dd = *d;
  if (base == BracketBase::Q)
    return [dd](Complex x) { return qbracket(dd, x); };
  const GenBracketParams half{Complex(0.5, 0.0), Complex(-0.5, 0.0)};
  return [dd, half](Complex x) { return qbracket_gen(dd, half, x); };
}

SpinRep build_spin_ladder(double j, double m_lo, int count, BracketBase base,
                          std::optional<Deformation> d) {
  if (count < 1) throw std::invalid_argument("spin window must be >= 1 state");
  if (m_lo < -j - 1e-9 || m_lo + (count - 1) > j + 1e-9)
    throw std::invalid_argument("spin window exceeds the weight range");
  auto br = base_bracket(base, d);

  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(count, count);
  Eigen::MatrixXcd jm = Eigen::MatrixXcd::Zero(count, count);
  Eigen::MatrixXcd j0 = Eigen::MatrixXcd::Zero(count, count);
  for (int i = 0; i < count; ++i) j0(i, i) = Complex(m_lo + i, 0.0);
  for (int i = 0; i + 1 < count; ++i) {
    const double m = m_lo + i;
    jp(i + 1, i) = std::sqrt(br(j - m) * br(j + m + 1));
  }
  for (int i = 1; i < count; ++i) {
    const double m = m_lo + i;
    jm(i - 1, i) = std::sqrt(br(j + m) * br(j - m + 1));
  }

  std::ostringstream tag;
  tag << "spin[j=" << j << ",mlo=" << m_lo << ",D=" << count << ","
      << base_code(base);
  if (base != BracketBase::Undeformed)
    tag << ",q=" << format_complex(d->q) << ",l=" << d->log_branch;
  tag << "]";

  SpinRep s;
  s.j = j;
  s.m_lo = m_lo;
  s.dim = count;
  s.base = base;
  s.d = d;
  s.jp = make_op(jp, tag.str());
  s.jm = make_op(jm, tag.str());
  s.j0 = make_op(j0, tag.str());
  return s;
}

}  // namespace

const char* kind_name(OscKind k) {
  switch (k) {
    case OscKind::MB: return "MB";
    case OscKind::HY: return "HY";
    case OscKind::GMB: return "GMB";
    case OscKind::GHY: return "GHY";
  }
  return "?";
}

Complex osc_casimir_value(const OscParams& p) {
  validate_osc_params(p);
  const Complex gap = p.lambda0 - kind_bracket(p, p.nu0);
  switch (p.kind) {
    case OscKind::MB: return qpow(p.d, p.nu0) * gap;
    case OscKind::HY: return gap;
    case OscKind::GMB: return qpow(p.d, -p.gen->alpha * p.nu0) * gap;
    case OscKind::GHY: return gap;
  }
  return gap;
}

Complex ladder_coefficient(const OscParams& p, int n) {
  validate_osc_params(p);
  const Complex x = p.nu0 + Complex(double(n), 0.0);
  const Complex c = osc_casimir_value(p);
  switch (p.kind) {
    case OscKind::MB: return qbracket(p.d, x) + qpow(p.d, -x) * c;
    case OscKind::HY: return qbracket(p.d, x) + c;
    case OscKind::GMB:
      return qbracket_gen(p.d, *p.gen, x) + qpow(p.d, p.gen->alpha * x) * c;
    case OscKind::GHY: return qbracket_gen(p.d, *p.gen, x) + c;
  }
  return c;
}

OscRep build_general_osc(const OscParams& p) {
  validate_osc_params(p);
  const int D = p.dim;
  std::vector<Complex> lam(D + 1);
  for (int i = 0; i <= D; ++i)
    lam[i] = ladder_coefficient(p, p.window_offset + i);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(D, D);
  Eigen::MatrixXcd ad = Eigen::MatrixXcd::Zero(D, D);
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(D, D);
  for (int i = 0; i < D; ++i)
    n(i, i) = p.nu0 + Complex(double(p.window_offset + i), 0.0);
  if (p.norm == LadderNorm::UnitRaise) {
    for (int i = 0; i + 1 < D; ++i) ad(i + 1, i) = 1.0;
    for (int i = 1; i < D; ++i) a(i - 1, i) = lam[i];
  } else {
    // One sqrt per level, reused on both sides, so products recover lambda
    // exactly whatever branch sqrt picks.
    std::vector<Complex> s(D);
    for (int i = 0; i < D; ++i) s[i] = std::sqrt(lam[i]);
    for (int i = 0; i + 1 < D; ++i) ad(i + 1, i) = s[i + 1];
    for (int i = 1; i < D; ++i) a(i - 1, i) = s[i];
  }

  const std::string tag = osc_tag(p);
  OscRep r;
  r.params = p;
  r.a = make_op(a, tag);
  r.adag = make_op(ad, tag);
  r.n_op = make_op(n, tag);
  r.casimir = osc_casimir_value(p);
  return r;
}

OscRep build_fock_osc(OscKind kind, const Deformation& d, int dim,
                      std::optional<GenBracketParams> gen) {
  OscParams p;
  p.kind = kind;
  p.d = d;
  p.gen = gen;
  p.dim = dim;
  p.norm = LadderNorm::SqrtSplit;
  return build_general_osc(p);
}

SpinRep build_spin_rep(double j, BracketBase base,
                       std::optional<Deformation> d) {
  const double two_j = 2.0 * j;
  if (j < 0 || std::abs(two_j - std::lround(two_j)) > 1e-9)
    throw std::invalid_argument("full spin rep needs half-integer j >= 0");
  return build_spin_ladder(j, -j, int(std::lround(two_j)) + 1, base, d);
}

SpinRep build_spin_window_bottom(double j, int count, BracketBase base,
                                 std::optional<Deformation> d) {
  return build_spin_ladder(j, -j, count, base, d);
}

SpinRep build_spin_window_top(double j, int count, BracketBase base,
                              std::optional<Deformation> d) {
  return build_spin_ladder(j, j - (count - 1), count, base, d);
}

VerificationReport verify_osc_relations(const OscRep& r,
                                        const InteriorWindow& w, double tol) {
  const OscParams& p = r.params;
  validate_osc_params(p);
  const std::string echo = osc_echo(p, w);
  const Deformation& d = p.d;
  const Op& a = r.a;
  const Op& ad = r.adag;
  const Op& n = r.n_op;
  VerificationReport out;

  const double grading =
      std::max(interior_residual(commutator(n, ad), ad, w),
               interior_residual(commutator(n, a), Complex(-1.0, 0.0) * a, w));
  const Op num = ad * a;
  const Op cas_target = r.casimir * identity_like(n);

  // The number-operator grading is the same equation for every family.
  out.add("macf.a", echo, grading, tol);

  switch (p.kind) {
    case OscKind::MB: {
      const Op lhs = qcommutator(a, ad, qpow(d, Complex(-1.0, 0.0)));
      const Op rhs = diag_fn([&d](Complex x) { return qpow(d, x); }, n);
      out.add("macf.b", echo, interior_residual(lhs, rhs, w), tol);
      const Op c1 = diag_fn([&d](Complex x) { return qpow(d, x); }, n) *
                    (num - diag_fn([&d](Complex x) { return qbracket(d, x); }, n));
      out.add("macf.c", echo, interior_residual(c1, cas_target, w), tol);
      break;
    }
    case OscKind::HY: {
      const Op lhs = commutator(a, ad);
      const Op rhs = diag_fn(
          [&d](Complex x) { return qbracket(d, x + 1.0) - qbracket(d, x); }, n);
      out.add("hyo.a", echo, interior_residual(lhs, rhs, w), tol);
      const Op c2 = num - diag_fn([&d](Complex x) { return qbracket(d, x); }, n);
      out.add("hyo.b", echo, interior_residual(c2, cas_target, w), tol);
      break;
    }
    case OscKind::GMB: {
      const GenBracketParams g = *p.gen;
      const Op lhs = qcommutator(a, ad, qpow(d, g.alpha));
      const Op rhs = diag_fn([&](Complex x) { return qpow(d, g.beta * x); }, n);
      out.add("genmacf.a", echo, interior_residual(lhs, rhs, w), tol);
      const Op c3 =
          diag_fn([&](Complex x) { return qpow(d, -g.alpha * x); }, n) *
          (num - diag_fn([&](Complex x) { return qbracket_gen(d, g, x); }, n));
      out.add("genmacf.b", echo, interior_residual(c3, cas_target, w), tol);
      break;
    }
    case OscKind::GHY: {
      const GenBracketParams g = *p.gen;
      const Op lhs = commutator(a, ad);
      const Op rhs = diag_fn(
          [&](Complex x) {
            return qbracket_gen(d, g, x + 1.0) - qbracket_gen(d, g, x);
          },
          n);
      out.add("genhyo.a", echo, interior_residual(lhs, rhs, w), tol);
      const Op c4 =
          num - diag_fn([&](Complex x) { return qbracket_gen(d, g, x); }, n);
      out.add("genhyo.b", echo, interior_residual(c4, cas_target, w), tol);
      break;
    }
  }
  return out;
}

VerificationReport verify_spin_relations(const SpinRep& s,
                                         const InteriorWindow& w, double tol) {
  auto br = base_bracket(s.base, s.d);
  std::ostringstream echo;
  echo << "j=" << s.j << " mlo=" << s.m_lo << " D=" << s.dim << " base="
       << base_code(s.base);
  if (s.base != BracketBase::Undeformed)
    echo << " q=" << format_complex(s.d->q);
  echo << " w=(" << w.low << "," << w.high << ")";

  VerificationReport out;
  const double grading = std::max(
      interior_residual(commutator(s.j0, s.jp), s.jp, w),
      interior_residual(commutator(s.j0, s.jm), Complex(-1.0, 0.0) * s.jm, w));
  out.add("cr.a", echo.str(), grading, tol);
  const Op lhs = commutator(s.jp, s.jm);
  const Op rhs = diag_fn([&br](Complex x) { return br(2.0 * x); }, s.j0);
  out.add("cr.b", echo.str(), interior_residual(lhs, rhs, w), tol);
  return out;
}

VerificationReport check_structure_function(
    const Op& jp, const Op& jm, const Op& j0,
    const std::function<Complex(Complex)>& psi, const InteriorWindow& w,
    double tol) {
  const Op lhs = commutator(jp, jm);
  const Op rhs =
      diag_fn(psi, j0) - diag_fn(psi, j0 - identity_like(j0));
  std::ostringstream echo;
  echo << "D=" << j0.dim() << " w=(" << w.low << "," << w.high << ")";
  VerificationReport out;
  out.add("mcr", echo.str(), interior_residual(lhs, rhs, w), tol);
  return out;
}

}  // namespace qosc
