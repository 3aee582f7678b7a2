#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qosc/reps.hpp"
#include "qosc/truncation.hpp"

using namespace qosc;

TEST_CASE("closed-form solution, frozen values") {
  // k = 0, ell = 0, eps = pi/2: nu0 = (-eps/2 + pi/2)/eps = 1/2
  CHECK(solve_truncation({0, 0, kPi / 2}) == doctest::Approx(0.5).epsilon(1e-14));
  // k = 2, ell = 0, eps = 1/2: nu0 = pi - 3/2
  CHECK(solve_truncation({2, 0, 0.5}) ==
        doctest::Approx(1.64159265358979).epsilon(1e-13));
  CHECK_THROWS_AS(solve_truncation({1, 0, kPi}), std::domain_error);
}

TEST_CASE("solved nu0 kills the truncation residual across a grid") {
  for (double eps : {0.3, 0.5, 1.0, 2.0, 2.8}) {
    for (int k = 0; k <= 4; ++k) {
      for (int ell : {0, 1, 2}) {
        const TruncationProblem t{k, ell, eps};
        const double nu0 = solve_truncation(t);
        CHECK(truncation_residual(t, nu0) < 1e-12);
        CHECK(check_positivity(t).cross_residual < 1e-12);
      }
    }
  }
}

TEST_CASE("difference and product forms of lambda agree") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double nu0 = 2.0 * unit(rng);
    const Complex lambda0{unit(rng), unit(rng)};
    const Deformation d = (trial % 2 == 0)
                              ? Deformation::from_q({1.1 + 0.4 * (unit(rng) + 1.0), 0.0})
                              : Deformation::unit_circle(0.2 + unit(rng) * 0.1);
    CHECK(lambda_form_residual(nu0, lambda0, d, 12) < 1e-12);
  }
}

TEST_CASE("positivity margins at k = 2, eps = 1/2") {
  const PositivityResult ok = check_positivity({2, 0, 0.5});
  CHECK(ok.feasible);
  REQUIRE(ok.margins.size() == 2);
  const double frozen = (std::cos(0.25) - std::cos(0.75)) / std::sin(0.5);
  CHECK(ok.margins[0] == doctest::Approx(frozen).epsilon(1e-13));
  CHECK(ok.margins[1] == doctest::Approx(frozen).epsilon(1e-13));
  CHECK(!ok.first_failure.has_value());

  const PositivityResult bad = check_positivity({2, 1, 0.5});
  CHECK(!bad.feasible);
  REQUIRE(bad.first_failure.has_value());
  CHECK(*bad.first_failure == 1);
}

TEST_CASE("k = 0 has no interior states and is always feasible") {
  for (double eps : {0.3, 1.1, 2.9}) {
    const PositivityResult r = check_positivity({0, 0, eps});
    CHECK(r.feasible);
    CHECK(r.margins.empty());
  }
}

TEST_CASE("branches two apart give the same margins") {
  const auto rows = scan_equivalence({0.3, 0.7, 1.3}, 3, {0, 2});
  REQUIRE(rows.size() == 3 * 4 * 2);
  // pair each ell = 0 row with the ell = 2 row of the same (eps, k)
  for (const auto& r0 : rows) {
    if (r0.ell != 0) continue;
    for (const auto& r2 : rows) {
      if (r2.ell != 2 || r2.k != r0.k || r2.epsilon != r0.epsilon) continue;
      CHECK(r0.feasible == r2.feasible);
      CHECK(std::abs(r0.min_margin - r2.min_margin) < 1e-12);
      CHECK(r0.first_failure == r2.first_failure);
      // nu0 itself moves along the branch by 2 pi / eps
      CHECK(std::abs(r2.nu0 - r0.nu0 - 2.0 * kPi / r0.epsilon) < 1e-10);
    }
  }
}

TEST_CASE("grid points at multiples of pi are kept as skipped rows") {
  const auto rows = scan_equivalence({kPi}, 2, {0});
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.skipped);
    CHECK(!r.feasible);
  }
}

TEST_CASE("real q admits no truncation") {
  for (double q : {1.1, 1.5}) {
    CHECK(real_q_truncation_scan(q, 0, -10.0, 10.0, 1e-3) > 1e-6);
    CHECK(real_q_truncation_scan(q, 3, -10.0, 10.0, 1e-3) > 1e-6);
  }
}

TEST_CASE("a feasible cell really is a finite-dimensional ladder") {
  const TruncationProblem t{2, 0, 0.5};
  const PositivityResult pos = check_positivity(t);
  REQUIRE(pos.feasible);

  OscParams p;
  p.kind = OscKind::HY;
  p.d = Deformation::unit_circle(t.epsilon);
  p.nu0 = Complex(pos.nu0, 0.0);
  p.lambda0 = Complex(0.0, 0.0);
  p.dim = t.k + 1;
  const OscRep r = build_general_osc(p);

  // the relations hold on the full matrices, top row included, because the
  // would-be lambda_{k+1} is the truncation residual itself
  CHECK(verify_osc_relations(r, {0, 0}, 1e-10).all_pass());
  CHECK(std::abs(ladder_coefficient(p, t.k + 1)) < 1e-10);

  // interior structure-function values match the screened margins
  for (int n = 1; n <= t.k; ++n) {
    const Complex ln = ladder_coefficient(p, n);
    CHECK(std::abs(ln.imag()) < 1e-12);
    CHECK(ln.real() == doctest::Approx(pos.margins[n - 1]).epsilon(1e-12));
    CHECK(ln.real() >= 0.0);
  }
}
