#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "qosc/qnum.hpp"

namespace qosc {

/// Dense operator on a finite ladder (or tensor product of ladders).
/// basis_tag names the basis; operators from different bases never mix.
/// factor_dims records the tensor factorisation, first factor slowest
/// (row index i decomposes as i = i_1 * D_2 * ... + ... + i_k).
struct Op {
  Eigen::MatrixXcd m;
  std::string basis_tag;
  std::vector<int> factor_dims;

  int dim() const { return static_cast<int>(m.rows()); }
};

/// Margins of the index window on which truncated-ladder relations are
/// meaningful. An index n of a factor of dimension D is interior when
/// low <= n <= D - 1 - high. Applied per factor on tensor bases.
struct InteriorWindow {
  int low = 1;
  int high = 1;
};

Op make_op(Eigen::MatrixXcd m, std::string basis_tag);
Op make_diag(const std::vector<Complex>& entries, std::string basis_tag);
Op identity_like(const Op& a);

Op operator+(const Op& a, const Op& b);
Op operator-(const Op& a, const Op& b);
Op operator*(const Op& a, const Op& b);
Op operator*(const Complex& c, const Op& a);
Op operator*(const Op& a, const Complex& c);

/// AB - BA.
Op commutator(const Op& a, const Op& b);
/// AB - p BA.
Op qcommutator(const Op& a, const Op& b, Complex p);
/// Kronecker product, first factor slowest.
Op tensor(const Op& a, const Op& b);
/// Entrywise f on the diagonal of an (already) diagonal operator.
/// Throws if any off-diagonal entry exceeds 1e-13 in magnitude.
Op diag_fn(const std::function<Complex(Complex)>& f, const Op& a);

/// Largest |(A - B)_{ij}| over index pairs whose row and column are both
/// interior (per factor) for the window w. Throws if the window empties
/// any factor.
double interior_residual(const Op& a, const Op& b, const InteriorWindow& w);

/// Largest entry magnitude (whole matrix, no window).
double max_abs(const Op& a);

}  // namespace qosc
