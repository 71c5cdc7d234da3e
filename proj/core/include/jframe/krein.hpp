#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jframe/numerics.hpp"

namespace jframe {

/// Coordinates of a vector in the ambient basis of its space.
using KVector = std::vector<double>;

/// Finite-dimensional space with an indefinite inner product [x,y] given
/// by a symmetric involution J: [x,y] = x^T J y. The signature (m, n)
/// counts the +1 and -1 eigenvalues of J.
struct KreinSpace {
  std::size_t dim = 0;
  num::Matrix j;
  std::size_t sig_plus = 0;
  std::size_t sig_minus = 0;
  /// True when J is the canonical diag(+1 x m, -1 x n).
  bool canonical = false;
};

enum class SignTag { Positive, Negative, Neutral };

/// Classification of a single vector by the sign of its self-product.
struct SignClass {
  SignTag tag;
  double self_product;  // [f, f]
};

/// Space with J = diag(+1 x m, -1 x n). Requires m + n >= 1.
KreinSpace make_space_from_signature(std::size_t m, std::size_t n);

/// Space from an explicit J. Validates symmetry and J^2 = I within
/// eig_tol and reads the signature off the spectrum. J is kept verbatim;
/// user coordinates are never rotated.
KreinSpace make_space_from_j(const num::Matrix& j,
                             const num::Tolerances& tol = {});

/// [x, y] = x^T J y. Symmetric and bilinear.
double indefinite_ip(const KreinSpace& s, const KVector& x, const KVector& y);

/// J-metric [x, y]_J = [x, Jy]; positive definite, Euclidean in the
/// canonical model.
double j_ip(const KreinSpace& s, const KVector& x, const KVector& y);

/// sqrt([x, x]_J) >= 0.
double j_norm(const KreinSpace& s, const KVector& x);

/// Sign of [x, x] with a relative neutrality band:
/// Neutral iff |[x,x]| <= verify_tol * ||x||_J^2.
/// Classification of the zero vector is refused.
SignClass classify(const KreinSpace& s, const KVector& x,
                   const num::Tolerances& tol = {});

/// Canonical components (P+ x, P- x) with P+- = (I +- J)/2.
std::pair<KVector, KVector> project_canonical(const KreinSpace& s,
                                              const KVector& x);

}  // namespace jframe
