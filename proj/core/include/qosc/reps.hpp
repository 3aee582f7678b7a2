#pragma once

#include <functional>
#include <optional>

#include "qosc/linop.hpp"
#include "qosc/report.hpp"

namespace qosc {

/// The four deformed oscillator families.
///   MB : a a+ - q^-1 a+ a = q^N,             C1 = q^N (a+ a - [N])
///   HY : [a, a+] = [N+1] - [N],              C2 = a+ a - [N]
///   GMB: a a+ - q^alpha a+ a = q^{beta N},   C3 = q^{-alpha N} (a+ a - [N]ab)
///   GHY: [a, a+] = [N+1]ab - [N]ab,          C4 = a+ a - [N]ab
/// where [x]ab is the two-parameter bracket.
enum class OscKind { MB, HY, GMB, GHY };

/// Matrix normalization of a ladder with a+ a eigenvalues lambda_n.
///   UnitRaise: a+|n> = |n+1>, a|n> = lambda_n |n-1>
///   SqrtSplit: a+|n> = sqrt(lambda_{n+1}) |n+1>, a|n> = sqrt(lambda_n) |n-1>
/// Both give identical a+ a, a a+ products, hence identical relation
/// residuals; SqrtSplit is the usual Fock-space convention.
enum class LadderNorm { UnitRaise, SqrtSplit };

struct OscParams {
  OscKind kind = OscKind::MB;
  Deformation d;
  std::optional<GenBracketParams> gen;  // required for GMB/GHY
  Complex nu0{0.0, 0.0};     // N eigenvalue on the n = 0 state
  Complex lambda0{0.0, 0.0}; // a+ a eigenvalue on the n = 0 state
  int dim = 0;
  int window_offset = 0;     // lowest ladder index kept in the matrix
  LadderNorm norm = LadderNorm::UnitRaise;
};

struct OscRep {
  OscParams params;
  Op a;
  Op adag;
  Op n_op;
  Complex casimir{0.0, 0.0};
};

const char* kind_name(OscKind k);

/// Central-element value fixed by (nu0, lambda0).
Complex osc_casimir_value(const OscParams& p);

/// lambda_n at ladder index n (the a+ a eigenvalue on |n>).
Complex ladder_coefficient(const OscParams& p, int n);

/// D-state window of the ladder representation. Relations hold on the
/// interior; the bottom row is an artifact unless lambda_{n_min} = 0 and the
/// top row is an artifact unless lambda_{n_min + D} = 0.
OscRep build_general_osc(const OscParams& p);

/// Fock representation (nu0 = 0, lambda0 = 0, SqrtSplit normalization).
OscRep build_fock_osc(OscKind kind, const Deformation& d, int dim,
                      std::optional<GenBracketParams> gen = {});

/// Which bracket the su(2) ladder matrix elements use.
enum class BracketBase { Q, SqrtQ, Undeformed };

/// Weight ladder of spin j: J+|j,m> = ([j-m][j+m+1])^{1/2} |j,m+1>,
/// J-|j,m> = ([j+m][j-m+1])^{1/2} |j,m-1>, J0|j,m> = m |j,m>, with the
/// bracket picked by `base`. May be a window of a larger (even non-integer
/// 2j) ladder; windows have artifact edges like oscillator windows.
struct SpinRep {
  double j = 0.0;
  double m_lo = 0.0;
  int dim = 0;
  BracketBase base = BracketBase::Q;
  std::optional<Deformation> d;
  Op jp;
  Op jm;
  Op j0;
};

SpinRep build_spin_rep(double j, BracketBase base,
                       std::optional<Deformation> d = {});
SpinRep build_spin_window_bottom(double j, int count, BracketBase base,
                                 std::optional<Deformation> d = {});
SpinRep build_spin_window_top(double j, int count, BracketBase base,
                              std::optional<Deformation> d = {});

/// Defining relations and Casimir constancy of the rep's family, one check
/// item per relation, all measured on window w against tol.
VerificationReport verify_osc_relations(const OscRep& r,
                                        const InteriorWindow& w, double tol);

/// [J0, J+-] = +-J+- and [J+, J-] = [2 J0] in the rep's bracket base.
VerificationReport verify_spin_relations(const SpinRep& s,
                                         const InteriorWindow& w, double tol);

/// [J+, J-] = Psi(J0) - Psi(J0 - 1) for a caller-supplied structure
/// function Psi.
VerificationReport check_structure_function(
    const Op& jp, const Op& jm, const Op& j0,
    const std::function<Complex(Complex)>& psi, const InteriorWindow& w,
    double tol);

}  // namespace qosc
