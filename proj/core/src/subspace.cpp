#include "jframe/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace jframe {

Subspace span_of(const KreinSpace& space, const std::vector<KVector>& vectors,
                 const num::Tolerances& tol) {
  tol.validate();
  if (vectors.empty()) {
    fail_validation("all_zero", "span of an empty family is refused");
  }
  const num::Matrix a = num::Matrix::from_columns(vectors);
  if (a.rows() != space.dim) {
    fail_validation("dimension_mismatch",
                    "vector length does not match the space dimension");
  }

  // Rank-revealing orthonormalization: eigenvectors of A A^T with
  // eigenvalue above the rank cutoff span range(A). The cutoff is applied
  // on the eigenvalue scale: taking square roots first would lift the
  // noise floor of true zeros (about machine epsilon times the leading
  // eigenvalue) above a relative singular value cutoff.
  const num::Matrix aat = a * a.transposed();
  const num::EigResult eig = num::sym_eig(aat, tol);
  std::vector<double> lam(eig.values.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    lam[i] = std::max(0.0, eig.values[i]);
  }
  const std::size_t rank = num::numerical_rank(lam, tol);
  if (rank == 0) {
    fail_validation("all_zero", "span of all-zero vectors is refused");
  }

  Subspace m;
  m.space = space;
  m.dim_m = rank;
  m.basis = num::Matrix(space.dim, rank);
  for (std::size_t j = 0; j < rank; ++j) {
    for (std::size_t i = 0; i < space.dim; ++i) {
      m.basis(i, j) = eig.vectors(i, j);
    }
  }
  return m;
}

num::Matrix gram_operator(const Subspace& m) {
  const num::Matrix p = m.basis * m.basis.transposed();
  return p * m.space.j * p;
}

num::Matrix restricted_gram(const Subspace& m) {
  return m.basis.transposed() * m.space.j * m.basis;
}

double reduced_min_modulus(const num::Matrix& g, const num::Tolerances& tol) {
  // Gram matrices here are symmetric, so the singular values are the
  // eigenvalue moduli. Going through eigenvalues keeps small singular
  // values accurate to machine precision; squaring the matrix would not.
  const num::EigResult eig = num::sym_eig(g, tol);
  std::vector<double> mags(eig.values.size());
  for (std::size_t i = 0; i < mags.size(); ++i) {
    mags[i] = std::abs(eig.values[i]);
  }
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  const std::size_t rank = num::numerical_rank(mags, tol);
  if (rank == 0) return 0.0;
  return mags[rank - 1];
}

Definiteness definiteness(const Subspace& m, const num::Tolerances& tol) {
  tol.validate();
  const num::EigResult eig = num::sym_eig(restricted_gram(m), tol);
  bool all_pos = true;
  bool all_neg = true;
  bool any_near_zero = false;
  for (double v : eig.values) {
    if (!(v > tol.verify_tol)) all_pos = false;
    if (!(v < -tol.verify_tol)) all_neg = false;
    if (std::abs(v) <= tol.verify_tol) any_near_zero = true;
  }
  if (all_pos) return Definiteness::UniformlyPositive;
  if (all_neg) return Definiteness::UniformlyNegative;
  if (any_near_zero) return Definiteness::Degenerate;
  return Definiteness::Indefinite;
}

GramReport gram_report(const Subspace& m, const num::Tolerances& tol) {
  GramReport r;
  r.gram = gram_operator(m);
  r.gamma = reduced_min_modulus(r.gram, tol);
  r.definiteness = definiteness(m, tol);
  return r;
}

double c_zero(const Subspace& m, const num::Tolerances& tol) {
  const Definiteness d = definiteness(m, tol);
  if (d != Definiteness::UniformlyPositive &&
      d != Definiteness::UniformlyNegative) {
    fail_validation("not_definite",
                    "c_zero needs a uniformly definite subspace");
  }
  double alpha = reduced_min_modulus(gram_operator(m), tol);
  if (alpha < 0.0) alpha = 0.0;
  if (alpha > 1.0) alpha = 1.0;  // ||G_M|| <= 1; clip rounding spill
  return (std::sqrt((1.0 + alpha) / 2.0) + std::sqrt((1.0 - alpha) / 2.0)) /
         std::sqrt(2.0);
}

}  // namespace jframe
