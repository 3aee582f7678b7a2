#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qosc/linop.hpp"

using namespace qosc;

namespace {

Op random_op(std::mt19937& rng, int n, const std::string& tag) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(u(rng), u(rng));
  return make_op(m, tag);
}

}  // namespace

TEST_CASE("construction and arithmetic") {
  const Op d = make_diag({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, "n");
  CHECK(d.dim() == 3);
  CHECK(d.basis_tag == "n");
  CHECK(d.factor_dims == std::vector<int>{3});

  const Op i = identity_like(d);
  CHECK(max_abs(d * i - d) == 0.0);
  CHECK(max_abs(i * d - d) == 0.0);
  CHECK(max_abs((d + d) - Complex(2.0, 0.0) * d) < 1e-15);
  CHECK(max_abs((d - d)) == 0.0);
  CHECK(max_abs(d * Complex(0.5, 0.0) - Complex(0.5, 0.0) * d) == 0.0);
}

TEST_CASE("mixed bases are rejected") {
  const Op a = make_diag({{1.0, 0.0}, {2.0, 0.0}}, "a");
  const Op b = make_diag({{1.0, 0.0}, {2.0, 0.0}}, "b");
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a - b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(commutator(a, b), std::invalid_argument);
  CHECK_THROWS_AS(interior_residual(a, b, {0, 0}), std::invalid_argument);
}

TEST_CASE("commutator properties") {
  std::mt19937 rng(7);
  const Op a = random_op(rng, 5, "x");
  const Op b = random_op(rng, 5, "x");
  CHECK(max_abs(commutator(a, b) + commutator(b, a)) < 1e-14);
  CHECK(max_abs(qcommutator(a, b, {1.0, 0.0}) - commutator(a, b)) == 0.0);
  // qcommutator interpolates: [a,b]_p = ab - p ba
  const Complex p{0.3, 0.4};
  CHECK(max_abs(qcommutator(a, b, p) - (a * b - p * (b * a))) < 1e-15);
}

TEST_CASE("tensor product ordering: first factor slowest") {
  const Op na = make_diag({{0.0, 0.0}, {1.0, 0.0}}, "A");
  const Op ib = identity_like(make_diag({{0.0, 0.0}, {0.0, 0.0}}, "B"));
  const Op t = tensor(na, ib);
  CHECK(t.dim() == 4);
  CHECK(t.factor_dims == std::vector<int>{2, 2});
  // diag(0, 0, 1, 1): the A index changes every two states.
  CHECK(std::abs(t.m(0, 0)) < 1e-15);
  CHECK(std::abs(t.m(1, 1)) < 1e-15);
  CHECK(std::abs(t.m(2, 2) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(t.m(3, 3) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("tensor against the index formula") {
  std::mt19937 rng(11);
  const Op a = random_op(rng, 3, "A");
  const Op b = random_op(rng, 4, "B");
  const Op t = tensor(a, b);
  REQUIRE(t.dim() == 12);
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = 0; i2 < 4; ++i2)
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 4; ++j2)
          CHECK(std::abs(t.m(i1 * 4 + i2, j1 * 4 + j2) -
                         a.m(i1, j1) * b.m(i2, j2)) < 1e-15);
}

TEST_CASE("tensor is associative, including the basis tag") {
  std::mt19937 rng(13);
  const Op a = random_op(rng, 2, "A");
  const Op b = random_op(rng, 3, "B");
  const Op c = random_op(rng, 2, "C");
  const Op left = tensor(tensor(a, b), c);
  const Op right = tensor(a, tensor(b, c));
  CHECK(left.basis_tag == right.basis_tag);
  CHECK(left.factor_dims == right.factor_dims);
  CHECK(max_abs(left - right) < 1e-14);
  // mixed-product property
  const Op a2 = random_op(rng, 2, "A");
  const Op b2 = random_op(rng, 3, "B");
  CHECK(max_abs(tensor(a, b) * tensor(a2, b2) - tensor(a * a2, b * b2)) <
        1e-13);
}

TEST_CASE("diag_fn maps eigenvalues and keeps the basis") {
  const Op n = make_diag({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, "n");
  const Op sq = diag_fn([](Complex x) { return x * x; }, n);
  CHECK(sq.basis_tag == "n");
  CHECK(std::abs(sq.m(2, 2) - Complex(4.0, 0.0)) < 1e-15);
  const Op offdiag = make_op(Eigen::MatrixXcd::Ones(2, 2), "n2");
  CHECK_THROWS_AS(diag_fn([](Complex x) { return x; }, offdiag),
                  std::invalid_argument);
}

TEST_CASE("interior residual windows rows and columns per factor") {
  // Nonzero only on the boundary of a 4-state ladder.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 2) = 5.0;   // boundary row 0
  m(2, 3) = 7.0;   // boundary column 3
  const Op a = make_op(m, "n");
  const Op z = make_op(Eigen::MatrixXcd::Zero(4, 4), "n");
  CHECK(interior_residual(a, z, {0, 0}) == 7.0);
  CHECK(interior_residual(a, z, {1, 1}) == 0.0);

  // Tensor factors are windowed independently.
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(8, 8);
  big(1 * 4 + 0, 1 * 4 + 1) = 3.0;  // second factor touches its row 0
  const Op t{big, "AxB", {2, 4}};
  const Op zt{Eigen::MatrixXcd::Zero(8, 8), "AxB", {2, 4}};
  CHECK(interior_residual(t, zt, {0, 0}) == 3.0);
  CHECK(interior_residual(t, zt, {1, 0}) == 0.0);
}

TEST_CASE("window wider than a factor is an error, not a vacuous pass") {
  const Op a = make_diag({{1.0, 0.0}, {2.0, 0.0}}, "n");
  CHECK_THROWS_AS(interior_residual(a, a, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(interior_residual(a, a, {5, 5}), std::invalid_argument);
}
