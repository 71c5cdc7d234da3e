#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jframe/frame.hpp"
#include "jframe/krein.hpp"
#include "jframe/numerics.hpp"
#include "jframe/rng.hpp"

namespace jframe {

/// Settings of the projected-descent minimizer. Restarts draw their
/// starting points from substreams of `seed`, so a (seed, config) pair
/// pins the whole run bit for bit.
struct MinimizeConfig {
  std::size_t max_iters = 50000;
  double step = 0.1;       // initial step, halved on objective increase
  double grad_tol = 1e-10; // projected-gradient stopping norm
  std::size_t restarts = 8;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Outcome of a minimization (or of evaluating an external family).
/// `iterations` is the larger of the two independent part-descent
/// counts; the parts decouple, so they are optimized separately.
struct MinimizeResult {
  FrameFamily family;
  double fp_j = 0.0;
  double floor = 0.0;
  double gap = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> lambda;  // positive-part frame spectrum, descending
  std::vector<double> mu;      // negative-part frame spectrum, descending
};

/// Unit-norm tight frame of the plane: the standard basis for p = 2,
/// p-th roots of unity for p >= 3. Frame operator (p/2) I.
std::vector<KVector> generate_fntf_2d(std::size_t p);

/// Unit-norm tight frame of R^d for any p >= d >= 1: harmonic rows
/// (constant row for odd d, cosine/sine pairs otherwise), the standard
/// basis when p = d. Frame operator (p/d) I.
std::vector<KVector> generate_fntf(std::size_t d, std::size_t p);

/// Weakly normalized tight J-frame in the canonical model with
/// M+ = K+ and M- = K-: a unit tight frame embedded per part. A nonzero
/// seed additionally rotates each part by a seeded random rotation.
/// Requires a canonical space with both signature parts >= 1.
FrameFamily generate_tight_j_frame(const KreinSpace& space, std::size_t p,
                                   std::size_t q, std::uint64_t seed = 0);

/// Projected gradient descent for the frame potential over p unit
/// vectors of K+ and q unit vectors of K- (independent descents, joint
/// backtracking per part). The objective never increases while it can
/// still resolve a decrease; once it saturates at rounding resolution
/// the accept rule switches to a strictly decreasing gradient norm.
/// Returns the best restart by final potential; restarts within rounding
/// distance of the best are ties, broken toward a converged run, then
/// toward the earlier restart.
MinimizeResult minimize_potential(const KreinSpace& space, std::size_t p,
                                  std::size_t q, const MinimizeConfig& cfg = {});

/// Potential, floor, gap and part spectra of an external family, in the
/// same shape minimize_potential reports.
MinimizeResult evaluate_family(const FrameFamily& f,
                               const num::Tolerances& tol = {});

/// True iff gap <= tol, every positive-part eigenvalue is within tol of
/// p/m, every negative-part eigenvalue within tol of q/n, and the family
/// is weakly normalized.
bool certify_minimum(const MinimizeResult& r, double tol);

/// Haar-like random rotation as a product of seeded Givens rotations.
num::Matrix random_rotation(std::size_t dim, rng::SplitMix64& gen);

}  // namespace jframe
