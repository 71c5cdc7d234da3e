#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jframe/errors.hpp"

namespace jframe::num {

/// Dense real matrix, row-major. Entries must be finite; constructors
/// taking data reject NaN and infinities.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  /// Columns given as equal-length coordinate lists.
  static Matrix from_columns(const std::vector<std::vector<double>>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Matrix transposed() const;
  std::vector<double> column(std::size_t j) const;

  const std::vector<double>& data() const noexcept { return a_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(double s, const Matrix& x);
std::vector<double> operator*(const Matrix& x, const std::vector<double>& v);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Matrix& x);

/// Thresholds shared across the toolkit.
///   eig_tol:          off-diagonal convergence threshold of the eigensolver
///   rank_tol_factor:  relative singular value cutoff for numerical rank
///   verify_tol:       tight/Parseval/equality verdict threshold
/// All must be strictly positive with eig_tol <= verify_tol.
struct Tolerances {
  double eig_tol = 1e-12;
  double rank_tol_factor = 1e-9;
  double verify_tol = 1e-9;

  void validate() const;
};

struct EigResult {
  std::vector<double> values;  // descending
  Matrix vectors;              // column j pairs with values[j]
};

/// Symmetric eigendecomposition by cyclic Jacobi sweeps (deterministic,
/// no pivot selection). Input must be symmetric within eig_tol relative
/// to its magnitude. Satisfies a = V diag(values) V^T within 10*eig_tol
/// elementwise for entries of order one.
EigResult sym_eig(const Matrix& a, const Tolerances& tol = {});

/// Singular values, descending, length min(rows, cols); computed from the
/// symmetric eigenproblem of a^T a (adequate at small dense scale).
std::vector<double> singular_values(const Matrix& a,
                                    const Tolerances& tol = {});

/// Count of singular values above rank_tol_factor times the largest;
/// 0 when the list is empty or its head is 0.
std::size_t numerical_rank(const std::vector<double>& singvals,
                           const Tolerances& tol = {});

}  // namespace jframe::num
