#pragma once

#include <optional>

#include "qosc/reps.hpp"

namespace qosc {

/// One-mode realization of the deformed su(2) relations:
///   J+ = a+ sqrt([2j - N]),  J- = sqrt([2j - N]) a,  J0 = N - j
/// with j a free c-number. The generalized variant uses the two-parameter
/// bracket under the root and dresses J+- with q^{-(alpha+beta) N / 2}.
struct HPSystem {
  OscRep osc;
  double j = 0.0;
  bool generalized = false;
  bool negate_sqrt = false;
  Op jp, jm, j0;
};

/// Kind MB or HY. negate_sqrt flips the branch of every diagonal square
/// root; all verified identities are insensitive to it since only squares of
/// the root survive in the products.
HPSystem hp_build(const OscRep& osc, double j, bool negate_sqrt = false);

/// Kind GMB or GHY.
HPSystem hp_gen_build(const OscRep& osc, double j, bool negate_sqrt = false);

/// MB closure, keys "hol1.a" (grading) and "hol1.b":
///   [J+, J-] = [2 J0] + c q^{-2 J0}.
VerificationReport verify_hp_mb(const HPSystem& h, const InteriorWindow& w,
                                double tol = 1e-10,
                                const std::optional<Complex>& rhs_c_override = {});

/// HY closure, keys "hol2.a" and "hol2.b":
///   [J+, J-] = [2 J0] + c {[j - J0 + 1] - [j - J0]}.
VerificationReport verify_hp_hy(const HPSystem& h, const InteriorWindow& w,
                                double tol = 1e-10,
                                const std::optional<Complex>& rhs_c_override = {});

/// Generalized closure under J~+ J~- - q^{alpha+beta} J~- J~+, keys
/// "genhol1.a"/"genhol1.b" (GMB) and "genhol2.a"/"genhol2.b" (GHY). The
/// bracket term enters as -[-2 J0]_{a,b}, the sign fixed by the
/// (alpha,beta) = (1,-1) reduction to the MB/HY closures; the residual of
/// the opposite sign is recorded in the notes.
VerificationReport verify_hp_gen(const HPSystem& h, const InteriorWindow& w,
                                 double tol = 1e-10);

}  // namespace qosc
