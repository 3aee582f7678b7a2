#include "qosc/linop.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qosc {

namespace {

void check_finite(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("Op: matrix has non-finite entries");
  }
}

void check_same_basis(const Op& a, const Op& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
  if (a.basis_tag != b.basis_tag) {
    throw std::invalid_argument(std::string(what) + ": basis mismatch ('" +
                                a.basis_tag + "' vs '" + b.basis_tag + "')");
  }
}

// Interior index set of one tensor factor structure.
std::vector<bool> interior_mask(const std::vector<int>& factors, int dim,
                                const InteriorWindow& w) {
  if (w.low < 0 || w.high < 0) {
    throw std::invalid_argument("InteriorWindow: margins must be >= 0");
  }
  for (int d : factors) {
    if (w.low + w.high >= d) {
      throw std::invalid_argument(
          "interior_residual: window exhausts a factor of dimension " +
          std::to_string(d));
    }
  }
  std::vector<bool> mask(dim, true);
  for (int i = 0; i < dim; ++i) {
    int rest = i;
    // Decompose mixed-radix, first factor slowest.
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const int digit = rest % *it;
      rest /= *it;
      if (digit < w.low || digit > *it - 1 - w.high) {
        mask[i] = false;
        break;
      }
    }
  }
  return mask;
}

}  // namespace

Op make_op(Eigen::MatrixXcd m, std::string basis_tag) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("Op: matrix must be square and non-empty");
  }
  check_finite(m);
  Op op;
  op.factor_dims = {static_cast<int>(m.rows())};
  op.m = std::move(m);
  op.basis_tag = std::move(basis_tag);
  return op;
}

Op make_diag(const std::vector<Complex>& entries, std::string basis_tag) {
  const int n = static_cast<int>(entries.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return make_op(std::move(m), std::move(basis_tag));
}

Op identity_like(const Op& a) {
  Op op = a;
  op.m = Eigen::MatrixXcd::Identity(a.dim(), a.dim());
  return op;
}

Op operator+(const Op& a, const Op& b) {
  check_same_basis(a, b, "operator+");
  Op r = a;
  r.m += b.m;
  return r;
}

Op operator-(const Op& a, const Op& b) {
  check_same_basis(a, b, "operator-");
  Op r = a;
  r.m -= b.m;
  return r;
}

Op operator*(const Op& a, const Op& b) {
  check_same_basis(a, b, "operator*");
  Op r = a;
  r.m = a.m * b.m;
  check_finite(r.m);
  return r;
}

Op operator*(const Complex& c, const Op& a) {
  Op r = a;
  r.m *= c;
  check_finite(r.m);
  return r;
}

Op operator*(const Op& a, const Complex& c) { return c * a; }

Op commutator(const Op& a, const Op& b) {
  check_same_basis(a, b, "commutator");
  Op r = a;
  r.m = a.m * b.m - b.m * a.m;
  return r;
}

Op qcommutator(const Op& a, const Op& b, Complex p) {
  check_same_basis(a, b, "qcommutator");
  Op r = a;
  r.m = a.m * b.m - p * (b.m * a.m);
  return r;
}

Op tensor(const Op& a, const Op& b) {
  const int da = a.dim();
  const int db = b.dim();
  Eigen::MatrixXcd m(da * db, da * db);
  for (int ia = 0; ia < da; ++ia) {
    for (int ja = 0; ja < da; ++ja) {
      m.block(ia * db, ja * db, db, db) = a.m(ia, ja) * b.m;
    }
  }
  Op r;
  r.m = std::move(m);
  // Flat concatenation keeps the tag associative: (AxB)xC and Ax(BxC) name
  // the same product basis.
  r.basis_tag = a.basis_tag + "x" + b.basis_tag;
  r.factor_dims = a.factor_dims;
  r.factor_dims.insert(r.factor_dims.end(), b.factor_dims.begin(),
                       b.factor_dims.end());
  return r;
}

Op diag_fn(const std::function<Complex(Complex)>& f, const Op& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && std::abs(a.m(i, j)) >= 1e-13) {
        throw std::invalid_argument("diag_fn: operand is not diagonal");
      }
    }
  }
  Op r = a;
  r.m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) r.m(i, i) = f(a.m(i, i));
  check_finite(r.m);
  return r;
}

double interior_residual(const Op& a, const Op& b, const InteriorWindow& w) {
  check_same_basis(a, b, "interior_residual");
  if (a.factor_dims != b.factor_dims) {
    throw std::invalid_argument("interior_residual: factor structure mismatch");
  }
  const auto mask = interior_mask(a.factor_dims, a.dim(), w);
  bool any = false;
  double r = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    if (!mask[i]) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (!mask[j]) continue;
      any = true;
      r = std::max(r, std::abs(a.m(i, j) - b.m(i, j)));
    }
  }
  if (!any) {
    throw std::invalid_argument("interior_residual: window is empty");
  }
  return r;
}

double max_abs(const Op& a) { return a.m.cwiseAbs().maxCoeff(); }

}  // namespace qosc
