#include "jframe/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jframe::num {

namespace {

void require_finite(const std::vector<double>& entries) {
  for (double v : entries) {
    if (!std::isfinite(v)) {
      fail_validation("non_finite_entry",
                      "matrix entries must be finite (no NaN/Inf)");
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) {
    fail_validation("dimension_mismatch",
                    "entry count does not match rows*cols");
  }
  require_finite(a_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<double>>& cols) {
  if (cols.empty()) fail_validation("dimension_mismatch", "no columns given");
  const std::size_t n = cols.front().size();
  Matrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) {
      fail_validation("dimension_mismatch", "columns have unequal lengths");
    }
    require_finite(cols[j]);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) {
    fail_validation("dimension_mismatch", "matrix product shape mismatch");
  }
  Matrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const double xik = x(i, k);
      if (xik == 0.0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    fail_validation("dimension_mismatch", "matrix sum shape mismatch");
  }
  Matrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    fail_validation("dimension_mismatch", "matrix difference shape mismatch");
  }
  Matrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

Matrix operator*(double s, const Matrix& x) {
  Matrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = s * x(i, j);
  return r;
}

std::vector<double> operator*(const Matrix& x, const std::vector<double>& v) {
  if (x.cols() != v.size()) {
    fail_validation("dimension_mismatch", "matrix-vector shape mismatch");
  }
  std::vector<double> r(x.rows(), 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) s += x(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double max_abs(const Matrix& x) {
  double m = 0.0;
  for (double v : x.data()) m = std::max(m, std::abs(v));
  return m;
}

void Tolerances::validate() const {
  if (!(eig_tol > 0.0) || !(rank_tol_factor > 0.0) || !(verify_tol > 0.0)) {
    fail_validation("bad_tolerances", "tolerances must be strictly positive");
  }
  if (eig_tol > verify_tol) {
    fail_validation("bad_tolerances", "eig_tol must not exceed verify_tol");
  }
}

namespace {

// One cyclic Jacobi sweep over the strict upper triangle. Rotations zero
// a(p,q) exactly; V accumulates the product of rotations columnwise.
void jacobi_sweep(Matrix& a, Matrix& v, double threshold) {
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double apq = a(p, q);
      if (std::abs(apq) <= threshold) continue;
      const double app = a(p, p);
      const double aqq = a(q, q);
      const double theta = (aqq - app) / (2.0 * apq);
      // Smaller-root tangent keeps rotations below 45 degrees.
      const double t =
          (theta >= 0.0 ? 1.0 : -1.0) /
          (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
      }
    }
  }
}

double max_offdiag(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

}  // namespace

EigResult sym_eig(const Matrix& a, const Tolerances& tol) {
  tol.validate();
  if (a.rows() != a.cols()) {
    fail_validation("not_symmetric", "eigendecomposition needs a square matrix");
  }
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, max_abs(a));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > tol.eig_tol * scale) {
        fail_validation("not_symmetric",
                        "matrix is not symmetric within eig_tol");
      }
    }
  }

  Matrix work = a;
  // Symmetrize exactly so rotation updates stay consistent.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (work(i, j) + work(j, i));
      work(i, j) = m;
      work(j, i) = m;
    }
  }
  Matrix v = Matrix::identity(n);
  const double threshold = tol.eig_tol * scale;
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (max_offdiag(work) > threshold) {
    if (++sweep > kMaxSweeps) {
      fail_numerical("no_convergence",
                     "Jacobi eigensolver exceeded the sweep cap");
    }
    jacobi_sweep(work, v, 0.0);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i) > work(j, j);
  });

  EigResult r;
  r.values.resize(n);
  r.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    r.values[j] = work(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) r.vectors(i, j) = v(i, order[j]);
  }
  return r;
}

std::vector<double> singular_values(const Matrix& a, const Tolerances& tol) {
  tol.validate();
  if (a.rows() == 0 || a.cols() == 0) return {};
  const Matrix ata = a.transposed() * a;
  EigResult eig = sym_eig(ata, tol);
  const std::size_t k = std::min(a.rows(), a.cols());
  std::vector<double> sv(k);
  for (std::size_t i = 0; i < k; ++i) {
    sv[i] = std::sqrt(std::max(0.0, eig.values[i]));
  }
  return sv;
}

std::size_t numerical_rank(const std::vector<double>& singvals,
                           const Tolerances& tol) {
  tol.validate();
  if (singvals.empty() || singvals.front() <= 0.0) return 0;
  const double cutoff = tol.rank_tol_factor * singvals.front();
  std::size_t r = 0;
  for (double s : singvals) {
    if (s > cutoff) ++r;
  }
  return r;
}

}  // namespace jframe::num
