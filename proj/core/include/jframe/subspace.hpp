#pragma once

#include <cstddef>
#include <vector>

#include "jframe/krein.hpp"
#include "jframe/numerics.hpp"

namespace jframe {

/// Subspace M of a Krein space, carried by a Euclidean-orthonormal basis
/// (columns of `basis`). dim_m equals the column count.
struct Subspace {
  KreinSpace space;
  num::Matrix basis;  // dim x dim_m, basis^T basis = I
  std::size_t dim_m = 0;
};

enum class Definiteness {
  UniformlyPositive,
  UniformlyNegative,
  Indefinite,
  Degenerate
};

/// Report of the Gram operator G_M = P_M J P_M of a subspace.
struct GramReport {
  num::Matrix gram;  // ambient dim x dim representation
  double gamma = 0.0;
  Definiteness definiteness = Definiteness::Degenerate;
};

/// Span of the given vectors with a rank-revealing orthonormal basis
/// (eigenvectors of the stacked outer product above the rank cutoff).
/// Input vectors need not be independent; all-zero input is refused.
Subspace span_of(const KreinSpace& space, const std::vector<KVector>& vectors,
                 const num::Tolerances& tol = {});

/// Ambient Gram operator G_M = P_M J P_M with P_M = basis basis^T.
num::Matrix gram_operator(const Subspace& m);

/// Restriction of J to M in the basis coordinates: basis^T J basis.
/// Definiteness verdicts are read off this form.
num::Matrix restricted_gram(const Subspace& m);

/// Smallest singular value above the rank cutoff; 0 for the zero matrix.
double reduced_min_modulus(const num::Matrix& g, const num::Tolerances& tol = {});

/// Verdict from the spectrum of the restricted Gram: uniformly positive
/// (all eigenvalues > verify_tol), uniformly negative (all < -verify_tol),
/// degenerate (some |eigenvalue| <= verify_tol), else indefinite.
Definiteness definiteness(const Subspace& m, const num::Tolerances& tol = {});

/// Full Gram report: ambient operator, gamma, definiteness verdict.
GramReport gram_report(const Subspace& m, const num::Tolerances& tol = {});

/// Distance constant to the neutral cone for a definite subspace:
/// with a = gamma(G_M), returns (sqrt((1+a)/2) + sqrt((1-a)/2)) / sqrt2.
/// Monotone decreasing in a on [0,1]; value 1/sqrt2 at a = 1.
/// Refused for subspaces that are not uniformly definite.
double c_zero(const Subspace& m, const num::Tolerances& tol = {});

}  // namespace jframe
