#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qosc/holstein.hpp"

using namespace qosc;

namespace {

OscRep make_rep(OscKind kind, const Deformation& d, int dim, Complex lambda0,
                std::optional<GenBracketParams> gen = {}) {
  OscParams p;
  p.kind = kind;
  p.d = d;
  p.gen = gen;
  p.lambda0 = lambda0;
  p.dim = dim;
  return build_general_osc(p);
}

}  // namespace

TEST_CASE("fock mb realization reproduces the spin matrices entrywise") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const OscRep f = build_fock_osc(OscKind::MB, d, 4);
  const HPSystem h = hp_build(f, 1.5);
  const SpinRep s = build_spin_rep(1.5, BracketBase::Q, d);
  CHECK((h.jp.m - s.jp.m).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((h.jm.m - s.jm.m).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((h.j0.m - s.j0.m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("integer-2j fock window closes exactly, edges included") {
  const Deformation d = Deformation::unit_circle(0.7);
  const OscRep f = build_fock_osc(OscKind::MB, d, 7);  // 2j = 6
  const HPSystem h = hp_build(f, 3.0);
  CHECK(verify_hp_mb(h, {0, 0}).all_pass());
  const OscRep fh = build_fock_osc(OscKind::HY, d, 7);
  CHECK(verify_hp_hy(hp_build(fh, 3.0), {0, 0}).all_pass());
}

TEST_CASE("mb and hy closures with a casimir") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  for (double c : {0.0, 0.25}) {
    const HPSystem hm = hp_build(make_rep(OscKind::MB, d, 9, {c, 0.0}), 4.0);
    CHECK(verify_hp_mb(hm, {1, 1}).all_pass());
    const HPSystem hh = hp_build(make_rep(OscKind::HY, d, 9, {c, 0.0}), 4.0);
    CHECK(verify_hp_hy(hh, {1, 1}).all_pass());
  }
}

TEST_CASE("hy closure: bracket form equals the structure-function form") {
  const Deformation d = Deformation::unit_circle(0.9);
  const double j = 4.0;
  OscParams p;
  p.kind = OscKind::HY;
  p.d = d;
  p.lambda0 = {0.25, 0.0};
  p.dim = 9;
  const OscRep r = build_general_osc(p);
  const HPSystem h = hp_build(r, j);
  const Complex c = r.casimir;
  for (int n = 1; n < 8; ++n) {
    const Complex m(n - j, 0.0);
    // as printed: [2 J0] + c {[j - J0 + 1] - [j - J0]}
    const Complex printed =
        qbracket(d, 2.0 * m) +
        c * (qbracket(d, Complex(j, 0.0) - m + 1.0) -
             qbracket(d, Complex(j, 0.0) - m));
    // as the structure function difference of the underlying ladder
    const Complex lam_n = ladder_coefficient(p, n);
    const Complex lam_n1 = ladder_coefficient(p, n + 1);
    const Complex direct = lam_n * qbracket(d, 2.0 * j - n + 1.0) -
                           lam_n1 * qbracket(d, 2.0 * j - n);
    CHECK(std::abs(printed - direct) < 1e-13);
  }
}

TEST_CASE("sqrt branch choice cannot leak into the closures") {
  const Deformation d = Deformation::from_q({1.4, 0.0});
  const OscRep r = make_rep(OscKind::MB, d, 8, {0.2, 0.0});
  const HPSystem plus = hp_build(r, 3.5);
  const HPSystem minus = hp_build(r, 3.5, true);
  CHECK((commutator(plus.jp, plus.jm).m - commutator(minus.jp, minus.jm).m)
            .cwiseAbs()
            .maxCoeff() < 1e-13);

  const GenBracketParams gen{1.2, 0.3};
  const OscRep g = make_rep(OscKind::GMB, d, 8, {0.2, 0.0}, gen);
  const HPSystem gp = hp_gen_build(g, 3.5);
  const HPSystem gm = hp_gen_build(g, 3.5, true);
  const Complex qs = qpow(d, gen.alpha + gen.beta);
  CHECK((qcommutator(gp.jp, gp.jm, qs).m - qcommutator(gm.jp, gm.jm, qs).m)
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("generalized closures at c in {0, 0.25}") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const GenBracketParams gen{1.2, 0.3};
  for (double c : {0.0, 0.25}) {
    const HPSystem hg =
        hp_gen_build(make_rep(OscKind::GMB, d, 9, {c, 0.0}, gen), 4.0);
    CHECK(verify_hp_gen(hg, {1, 1}).all_pass());
    const HPSystem hG =
        hp_gen_build(make_rep(OscKind::GHY, d, 9, {c, 0.0}, gen), 4.0);
    CHECK(verify_hp_gen(hG, {1, 1}).all_pass());
  }
}

TEST_CASE("the bracket term sign: printed orientation fails") {
  // At c = 0 the GMB closure reduces to the pure bracket term; orienting it
  // as +[-2 J0]_{a,b} (instead of the negative) misses by O(1).
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const GenBracketParams gen{1.2, 0.3};
  const OscRep g = make_rep(OscKind::GMB, d, 9, {0.0, 0.0}, gen);
  const HPSystem h = hp_gen_build(g, 4.0);
  const Complex qs = qpow(d, gen.alpha + gen.beta);
  const Op lhs = qcommutator(h.jp, h.jm, qs);
  const Op flipped = diag_fn(
      [&](Complex m) { return qbracket_gen(d, gen, -2.0 * m); }, h.j0);
  const Op correct = Complex(-1.0, 0.0) * flipped;
  CHECK(interior_residual(lhs, correct, {1, 1}) < 1e-10);
  CHECK(interior_residual(lhs, flipped, {1, 1}) > 1e-1);
  // and the report carries the flipped-orientation residual in a note
  const auto rep = verify_hp_gen(h, {1, 1});
  REQUIRE(rep.find("genhol1.b") != nullptr);
  bool noted = false;
  for (const auto& note : rep.find("genhol1.b")->notes)
    if (note.find("+[-2J0]") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("generalized reduction at (1,-1) matches the plain closures") {
  const Deformation d = Deformation::unit_circle(0.8);
  const GenBracketParams one{1.0, -1.0};
  const OscRep g = make_rep(OscKind::GHY, d, 9, {0.25, 0.0}, one);
  const OscRep h = make_rep(OscKind::HY, d, 9, {0.25, 0.0});
  const HPSystem hg = hp_gen_build(g, 4.0);
  const HPSystem hh = hp_build(h, 4.0);
  // alpha + beta = 0: no dressing, and the brackets coincide
  CHECK((hg.jp.m - hh.jp.m).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((hg.jm.m - hh.jm.m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kind restrictions") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const GenBracketParams gen{1.2, 0.3};
  const OscRep plain = make_rep(OscKind::MB, d, 5, {0.0, 0.0});
  const OscRep two = make_rep(OscKind::GMB, d, 5, {0.0, 0.0}, gen);
  CHECK_THROWS_AS(hp_build(two, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(hp_gen_build(plain, 2.0), std::invalid_argument);
}
