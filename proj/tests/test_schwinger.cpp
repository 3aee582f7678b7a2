#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qosc/schwinger.hpp"

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

TEST_CASE("two-mode assembly: lifted operators and combinations") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const OscRep a = make_rep(OscKind::MB, d, 4, {0.0, 0.0});
  const OscRep b = make_rep(OscKind::MB, d, 3, {0.0, 0.0});
  const TwoModeSystem s = schwinger_build(a, b);
  CHECK(s.a.dim() == 12);
  CHECK(s.a.factor_dims == std::vector<int>{4, 3});
  CHECK(max_abs(s.jp - s.adag * s.b) < 1e-15);
  CHECK(max_abs(s.jm - s.bdag * s.a) < 1e-15);
  CHECK(max_abs(s.j0 - Complex(0.5, 0.0) * (s.na - s.nb)) < 1e-15);
  CHECK(max_abs(s.cas - Complex(0.5, 0.0) * (s.na + s.nb)) < 1e-15);
  // modes commute
  CHECK(max_abs(commutator(s.a, s.bdag)) < 1e-15);
  CHECK(max_abs(commutator(s.a, s.b)) < 1e-15);
}

TEST_CASE("mode compatibility is enforced") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const Deformation d2 = Deformation::from_q({1.4, 0.0});
  const OscRep a = make_rep(OscKind::MB, d, 4, {0.0, 0.0});
  CHECK_THROWS_AS(
      schwinger_build(a, make_rep(OscKind::HY, d, 4, {0.0, 0.0})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      schwinger_build(a, make_rep(OscKind::MB, d2, 4, {0.0, 0.0})),
      std::invalid_argument);
  // tilde construction is only defined for the two-parameter kinds
  CHECK_THROWS_AS(schwinger_tilde_build(a, a), std::invalid_argument);
}

TEST_CASE("mb closure: equal, zero, and differing casimirs") {
  const Deformation d = Deformation::from_q({1.3, 0.0});

  SUBCASE("c = 0 collapses to [2 J0]") {
    const OscRep m = make_rep(OscKind::MB, d, 8, {0.0, 0.0});
    const TwoModeSystem s = schwinger_build(m, m);
    const auto rep = verify_mb_schwinger(s, {1, 1});
    CHECK(rep.all_pass());
  }

  SUBCASE("equal c: scalar form matches the mixed form") {
    const OscRep m = make_rep(OscKind::MB, d, 8, {0.35, 0.0});
    const TwoModeSystem s = schwinger_build(m, m);
    CHECK(verify_mb_schwinger(s, {1, 1}).all_pass());
    // explicit scalar form {-c (q - 1/q) + 1}[2 J0]
    const Complex c = s.repA.casimir;
    const Complex factor =
        -c * (d.q - Complex(1.0, 0.0) / d.q) + Complex(1.0, 0.0);
    const Op lhs = commutator(s.jp, s.jm);
    const Op rhs = factor * diag_fn([&](Complex m2) {
                     return qbracket(d, 2.0 * m2);
                   }, s.j0);
    CHECK(interior_residual(lhs, rhs, {1, 1}) < 1e-10);
  }

  SUBCASE("differing per-mode casimirs verify with a note") {
    OscParams pa;
    pa.kind = OscKind::MB;
    pa.d = d;
    pa.lambda0 = {0.2, 0.0};
    pa.dim = 8;
    OscParams pb = pa;
    pb.lambda0 = {0.5, 0.0};
    const TwoModeSystem s =
        schwinger_build(build_general_osc(pa), build_general_osc(pb));
    const auto rep = verify_mb_schwinger(s, {1, 1});
    CHECK(rep.all_pass());
    REQUIRE(!rep.items.empty());
    bool flagged = false;
    for (const auto& note : rep.items.back().notes)
      if (note.find("per-mode") != std::string::npos) flagged = true;
    CHECK(flagged);
  }

  SUBCASE("negative control: forcing c = 0 in the rhs fails loudly") {
    const OscRep m = make_rep(OscKind::MB, d, 8, {0.35, 0.0});
    const TwoModeSystem s = schwinger_build(m, m);
    const auto rep = verify_mb_schwinger(s, {1, 1}, 1e-10, Complex{0.0, 0.0});
    REQUIRE(!rep.items.empty());
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.max_residual() > 1e-3);
  }
}

TEST_CASE("hy closure at complex q") {
  const Deformation d = Deformation::unit_circle(0.7);
  const OscRep h = make_rep(OscKind::HY, d, 10, {0.25, 0.0});
  const TwoModeSystem s = schwinger_build(h, h);
  CHECK(verify_schwinger_structure(s, {1, 1}).all_pass());
  CHECK(verify_fujikawa(s, {1, 1}).all_pass());

  const OscRep h0 = make_rep(OscKind::HY, d, 10, {0.0, 0.0});
  const TwoModeSystem s0 = schwinger_build(h0, h0);
  const auto rep = verify_fujikawa(s0, {1, 1});
  CHECK(rep.all_pass());
  // c = 0: plain [2 J0] on the diagonal
  const Op rhs = diag_fn([&](Complex m2) { return qbracket(d, 2.0 * m2); },
                         s0.j0);
  CHECK(interior_residual(commutator(s0.jp, s0.jm), rhs, {1, 1}) < 1e-10);
}

TEST_CASE("generalized closures at both exponent pairs") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  for (const GenBracketParams gen :
       {GenBracketParams{1.2, 0.3}, GenBracketParams{1.2, -1.2}}) {
    for (OscKind kind : {OscKind::GMB, OscKind::GHY}) {
      const OscRep r = make_rep(kind, d, 8, {0.15, 0.0}, gen);
      const TwoModeSystem s = schwinger_build(r, r);
      const auto rep = verify_gen_schwinger(s, {1, 1});
      CHECK(rep.all_pass());
      const bool balanced = std::abs(gen.alpha + gen.beta) < 1e-14;
      CHECK((rep.find("gencon.g") != nullptr) == balanced);
    }
  }
}

TEST_CASE("tilde dressing closes with the half exponent") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  for (const GenBracketParams gen :
       {GenBracketParams{1.2, 0.3}, GenBracketParams{1.2, -1.2}}) {
    for (OscKind kind : {OscKind::GMB, OscKind::GHY}) {
      const OscRep r = make_rep(kind, d, 8, {0.15, 0.0}, gen);
      const TwoModeSystem s = schwinger_tilde_build(r, r);
      CHECK(s.tilde);
      CHECK(verify_schwinger_structure(s, {1, 1}).all_pass());
      const auto rep = verify_gen_tilde(s, {1, 1});
      CHECK(rep.all_pass());
      const bool balanced = std::abs(gen.alpha + gen.beta) < 1e-14;
      const bool reduced = rep.find("gencon3.red") != nullptr ||
                           rep.find("gencon4.red") != nullptr;
      CHECK(reduced == balanced);
    }
  }
}

TEST_CASE("tilde dressing with the full exponent does not close") {
  const Deformation d = Deformation::from_q({1.3, 0.0});
  const GenBracketParams gen{1.2, 0.3};
  const OscRep r = make_rep(OscKind::GMB, d, 8, {0.0, 0.0}, gen);
  const TwoModeSystem s = schwinger_tilde_build(r, r, true);
  const auto rep = verify_gen_tilde(s, {1, 1});
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.max_residual() > 1e-2);
}

TEST_CASE("grading survives the tilde dressing") {
  const Deformation d = Deformation::unit_circle(0.9);
  const GenBracketParams gen{0.8, -0.3};
  const OscRep r = make_rep(OscKind::GHY, d, 7, {0.1, 0.0}, gen);
  const TwoModeSystem s = schwinger_tilde_build(r, r);
  CHECK(interior_residual(commutator(s.j0, s.jp), s.jp, {1, 1}) < 1e-12);
  CHECK(interior_residual(commutator(s.j0, s.jm),
                          Complex(-1.0, 0.0) * s.jm, {1, 1}) < 1e-12);
}
