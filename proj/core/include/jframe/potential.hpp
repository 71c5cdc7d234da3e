#pragma once

#include <cstddef>
#include <vector>

#include "jframe/frame.hpp"
#include "jframe/krein.hpp"
#include "jframe/numerics.hpp"

namespace jframe {

/// Force between two family members: vector = coefficient * (f_i - f_j).
struct ForceResult {
  double coefficient = 0.0;
  KVector direction;
  KVector vector;
};

/// Potential summary of a family.
///   fp_j:            double sums of squared products over same-sign pairs
///   tp_j:            total potential including the mixed constant term
///   floor:           p^2/m + q^2/n
///   pair_matrix:     per-pair potentials, zero diagonal
///   intrinsic_norms: a_i = sqrt(|[f_i, f_i]|)
struct PotentialReport {
  double fp_j = 0.0;
  double tp_j = 0.0;
  double floor = 0.0;
  num::Matrix pair_matrix;
  std::vector<double> intrinsic_norms;
};

/// Pair force (0-based indices, i != j):
///   both positive: coefficient  2[f_i, f_j]
///   both negative: coefficient -2[f_i, f_j]
///   mixed:         coefficient  2(||f_i||_J ||f_j||_J zeta + [f_i, f_j]_J)
/// zeta must lie in [sqrt2, 2).
ForceResult frame_force(const FrameFamily& f, double zeta, std::size_t i,
                        std::size_t j);

/// Pair potential (0-based, i != j): same-sign pairs
/// [f_i,f_j]^2 - (a_i^2 + a_j^2)^2 / 4 with a^2 = |[f,f]|;
/// mixed pairs (zeta^2 - 1)/2.
double pair_potential(const FrameFamily& f, double zeta, std::size_t i,
                      std::size_t j);

/// Radial profile p(x) = x^2 (x^2 - 2(ai2 + aj2)) / 4 whose negated
/// derivative is x * radial_force; pair_potential equals p at the
/// intrinsic pair distance.
double radial_potential(double ai2, double aj2, double x);

/// Radial force magnitude profile f(x) = ai2 + aj2 - x^2.
double radial_force(double ai2, double aj2, double x);

/// Sum over ordered same-sign pairs, diagonal included, of [f_i,f_j]^2.
double frame_potential(const FrameFamily& f);

/// tr(S+^2) + tr(S-^2) from the intrinsic frame operators; agrees with
/// frame_potential on J-frames.
double frame_potential_trace(const FrameFamily& f,
                             const num::Tolerances& tol = {});

/// Both same-sign double sums, plus p*q*(zeta^2 - 1)/2, minus the
/// quarter sums of (a_i^2 + a_j^2)^2 over each part.
double total_potential(const FrameFamily& f, double zeta);

/// p^2/m + q^2/n for the family's part sizes and signature; empty parts
/// contribute zero.
double potential_floor(const FrameFamily& f);

/// d FP / d f_i = 4 sum_{j in part(i)} [f_i, f_j] P_M (J f_j), with P_M
/// the projector onto the part's span; tangent finite differences of
/// frame_potential reproduce it.
std::vector<KVector> potential_gradient(const FrameFamily& f,
                                        const num::Tolerances& tol = {});

PotentialReport potential_report(const FrameFamily& f, double zeta,
                                 const num::Tolerances& tol = {});

}  // namespace jframe
