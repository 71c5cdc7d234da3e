#include "jframe/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "jframe/potential.hpp"

namespace jframe {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kStepFloor = 1e-12;

void require_canonical(const KreinSpace& space) {
  if (!space.canonical || space.sig_plus < 1 || space.sig_minus < 1) {
    fail_validation("bad_signature",
                    "generation and minimization need the canonical model "
                    "with both signature parts nonzero");
  }
}

}  // namespace

void MinimizeConfig::validate() const {
  if (max_iters < 1 || restarts < 1 || !(step > 0.0) || !(grad_tol > 0.0)) {
    fail_validation("bad_config",
                    "minimizer settings must be strictly positive");
  }
}

std::vector<KVector> generate_fntf_2d(std::size_t p) {
  if (p < 2) {
    fail_validation("too_few", "a tight frame of the plane needs p >= 2");
  }
  return generate_fntf(2, p);
}

std::vector<KVector> generate_fntf(std::size_t d, std::size_t p) {
  if (d < 1 || p < d) {
    fail_validation("too_few", "a unit tight frame needs p >= d >= 1");
  }
  std::vector<KVector> out(p, KVector(d, 0.0));
  if (p == d) {
    for (std::size_t k = 0; k < p; ++k) out[k][k] = 1.0;
    return out;
  }
  // Harmonic rows: all frequency sums vanish because every frequency
  // pair j, j' in 1..floor(d/2) has j + j' < p and j - j' < p.
  const std::size_t pairs = d / 2;
  const bool has_const = (d % 2) == 1;
  const double scale = std::sqrt(2.0 / static_cast<double>(d));
  for (std::size_t k = 0; k < p; ++k) {
    std::size_t c = 0;
    if (has_const) out[k][c++] = scale / std::sqrt(2.0);
    for (std::size_t j = 1; j <= pairs; ++j) {
      const double angle = kTwoPi * static_cast<double>(j) *
                           static_cast<double>(k) / static_cast<double>(p);
      out[k][c++] = scale * std::cos(angle);
      out[k][c++] = scale * std::sin(angle);
    }
  }
  return out;
}

num::Matrix random_rotation(std::size_t dim, rng::SplitMix64& gen) {
  num::Matrix q = num::Matrix::identity(dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double angle = kTwoPi * gen.uniform01();
      const double c = std::cos(angle);
      const double s = std::sin(angle);
      for (std::size_t r = 0; r < dim; ++r) {
        const double qi = q(r, i);
        const double qj = q(r, j);
        q(r, i) = c * qi - s * qj;
        q(r, j) = s * qi + c * qj;
      }
    }
  }
  return q;
}

namespace {

// Embed part coordinates into the canonical ambient space at `offset`.
KVector embed(const KVector& x, std::size_t dim, std::size_t offset) {
  KVector v(dim, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) v[offset + i] = x[i];
  return v;
}

std::vector<KVector> rotate_all(const num::Matrix& q,
                                const std::vector<KVector>& xs) {
  std::vector<KVector> out;
  out.reserve(xs.size());
  for (const KVector& x : xs) out.push_back(q * x);
  return out;
}

}  // namespace

FrameFamily generate_tight_j_frame(const KreinSpace& space, std::size_t p,
                                   std::size_t q, std::uint64_t seed) {
  require_canonical(space);
  const std::size_t m = space.sig_plus;
  const std::size_t n = space.sig_minus;
  if (p < m || q < n) {
    fail_validation("too_few_vectors",
                    "each part needs at least as many vectors as its "
                    "signature dimension");
  }
  std::vector<KVector> plus = generate_fntf(m, p);
  std::vector<KVector> minus = generate_fntf(n, q);
  if (seed != 0) {
    rng::SplitMix64 gp = rng::SplitMix64::substream(seed, 1);
    rng::SplitMix64 gm = rng::SplitMix64::substream(seed, 2);
    plus = rotate_all(random_rotation(m, gp), plus);
    minus = rotate_all(random_rotation(n, gm), minus);
  }
  std::vector<KVector> all;
  all.reserve(p + q);
  for (const KVector& x : plus) all.push_back(embed(x, space.dim, 0));
  for (const KVector& y : minus) all.push_back(embed(y, space.dim, m));
  return partition(space, all);
}

namespace {

// State of one part's descent: `count` unit vectors of R^d as rows.
struct PartState {
  std::size_t d = 0;
  std::vector<KVector> x;
};

double part_potential(const PartState& s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      double ip = 0.0;
      for (std::size_t c = 0; c < s.d; ++c) ip += s.x[i][c] * s.x[j][c];
      acc += ip * ip;
    }
  }
  return acc;
}

void normalize(KVector& v) {
  double n2 = 0.0;
  for (double c : v) n2 += c * c;
  const double s = 1.0 / std::sqrt(n2);
  for (double& c : v) c *= s;
}

PartState random_part(std::size_t d, std::size_t count,
                      rng::SplitMix64& gen) {
  PartState s;
  s.d = d;
  s.x.assign(count, KVector(d, 0.0));
  for (KVector& v : s.x) {
    double n2 = 0.0;
    while (n2 == 0.0) {  // a zero Gaussian draw has vanishing probability
      for (double& c : v) c = gen.gaussian();
      n2 = 0.0;
      for (double c : v) n2 += c * c;
    }
    normalize(v);
  }
  return s;
}

struct PartDescent {
  PartState state;
  double fp = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Tangential gradient of the part potential: G_i = 4 sum_j <x_i, x_j> x_j
// minus its radial component at x_i. Returns the squared norm.
double part_gradient(const PartState& s, std::vector<KVector>& grad) {
  const std::size_t count = s.x.size();
  const std::size_t d = s.d;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    KVector& g = grad[i];
    std::fill(g.begin(), g.end(), 0.0);
    for (std::size_t j = 0; j < count; ++j) {
      double ip = 0.0;
      for (std::size_t c = 0; c < d; ++c) ip += s.x[i][c] * s.x[j][c];
      for (std::size_t c = 0; c < d; ++c) g[c] += 4.0 * ip * s.x[j][c];
    }
    double radial = 0.0;
    for (std::size_t c = 0; c < d; ++c) radial += g[c] * s.x[i][c];
    for (std::size_t c = 0; c < d; ++c) {
      g[c] -= radial * s.x[i][c];
      norm2 += g[c] * g[c];
    }
  }
  return norm2;
}

// Projected gradient descent on the product of unit spheres, in two
// phases sharing one iteration budget.
//
// Objective phase: each iteration retries from the initial step, halving
// until the objective strictly decreases, or ties at its floating point
// resolution while the gradient norm strictly shrinks. Both acceptances
// strictly decrease the pair (objective, gradient norm) in lexicographic
// order, so no cycle is possible.
//
// Gradient phase: once no step can make such progress the objective has
// reached double resolution, where comparison is blind: unit
// normalization is itself only exact to rounding, so the computed
// objective admits off floor pockets an ulp deep that trap any rule
// keyed on objective comparison. The gradient is still smooth and
// computable far below that scale, so the search switches to the same
// backtracking with acceptance keyed on a strict gradient norm decrease.
// Each accepted step shrinks a nonnegative scalar, so termination stays
// guaranteed; a stall in this phase means the iterate is numerically
// stationary.
PartDescent descend_part(std::size_t d, std::size_t count,
                         const MinimizeConfig& cfg, rng::SplitMix64 gen) {
  PartDescent r;
  r.state = random_part(d, count, gen);
  r.fp = part_potential(r.state);

  std::vector<KVector> grad(count, KVector(d, 0.0));
  std::vector<KVector> trial_grad(count, KVector(d, 0.0));
  bool gradient_phase = false;
  for (r.iterations = 0; r.iterations < cfg.max_iters; ++r.iterations) {
    const double grad_norm2 = part_gradient(r.state, grad);
    if (std::sqrt(grad_norm2) <= cfg.grad_tol) {
      r.converged = true;
      return r;
    }

    double step = cfg.step;
    PartState trial = r.state;
    bool accepted = false;
    while (step >= kStepFloor) {
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
          trial.x[i][c] = r.state.x[i][c] - step * grad[i][c];
        }
        normalize(trial.x[i]);
      }
      if (gradient_phase) {
        accepted = part_gradient(trial, trial_grad) < grad_norm2;
      } else {
        const double trial_fp = part_potential(trial);
        accepted = trial_fp < r.fp ||
                   (trial_fp == r.fp &&
                    part_gradient(trial, trial_grad) < grad_norm2);
      }
      if (accepted) {
        r.state = trial;
        r.fp = part_potential(r.state);
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (gradient_phase) return r;  // stationary to step-floor resolution
      gradient_phase = true;
    }
  }
  return r;
}

}  // namespace

MinimizeResult minimize_potential(const KreinSpace& space, std::size_t p,
                                  std::size_t q, const MinimizeConfig& cfg) {
  require_canonical(space);
  cfg.validate();
  const std::size_t m = space.sig_plus;
  const std::size_t n = space.sig_minus;
  if (p < m || q < n) {
    fail_validation("too_few_vectors",
                    "each part needs at least as many vectors as its "
                    "signature dimension");
  }

  PartDescent best_plus, best_minus;
  double best_fp = 0.0;
  bool have_best = false;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    PartDescent plus = descend_part(
        m, p, cfg, rng::SplitMix64::substream(cfg.seed, 2 * r + 1));
    PartDescent minus = descend_part(
        n, q, cfg, rng::SplitMix64::substream(cfg.seed, 2 * r + 2));
    const double fp = plus.fp + minus.fp;
    const bool conv = plus.converged && minus.converged;
    // Objective values within rounding distance of each other are ties;
    // a tie is broken toward the converged run (a cap-hitting restart can
    // undercut the true minimum by a few ulps of summation noise).
    bool better = false;
    if (!have_best) {
      better = true;
    } else {
      const double slack = 1e-9 * std::max(1.0, std::abs(best_fp));
      const bool best_conv = best_plus.converged && best_minus.converged;
      if (fp < best_fp - slack) {
        better = true;
      } else if (fp <= best_fp + slack && conv && !best_conv) {
        better = true;
      }
    }
    if (better) {
      have_best = true;
      best_fp = fp;
      best_plus = std::move(plus);
      best_minus = std::move(minus);
    }
  }

  std::vector<KVector> all;
  all.reserve(p + q);
  for (const KVector& x : best_plus.state.x)
    all.push_back(embed(x, space.dim, 0));
  for (const KVector& y : best_minus.state.x)
    all.push_back(embed(y, space.dim, m));

  MinimizeResult result;
  result.family = partition(space, all);
  result.fp_j = frame_potential(result.family);
  result.floor = potential_floor(result.family);
  result.gap = result.fp_j - result.floor;
  result.iterations = std::max(best_plus.iterations, best_minus.iterations);
  result.converged = best_plus.converged && best_minus.converged;
  const num::Tolerances tol{};
  result.lambda = part_frame(result.family, Part::Plus, tol).spectrum;
  result.mu = part_frame(result.family, Part::Minus, tol).spectrum;
  return result;
}

MinimizeResult evaluate_family(const FrameFamily& f,
                               const num::Tolerances& tol) {
  MinimizeResult result;
  result.family = f;
  result.fp_j = frame_potential(f);
  result.floor = potential_floor(f);
  result.gap = result.fp_j - result.floor;
  result.converged = true;
  if (!f.i_plus.empty()) {
    result.lambda = part_frame(f, Part::Plus, tol).spectrum;
  }
  if (!f.i_minus.empty()) {
    result.mu = part_frame(f, Part::Minus, tol).spectrum;
  }
  return result;
}

bool certify_minimum(const MinimizeResult& r, double tol) {
  if (r.gap > tol) return false;
  const FrameFamily& f = r.family;
  if (f.space.sig_plus == 0 || f.space.sig_minus == 0) return false;
  const double want_lambda =
      static_cast<double>(f.p()) / static_cast<double>(f.space.sig_plus);
  const double want_mu =
      static_cast<double>(f.q()) / static_cast<double>(f.space.sig_minus);
  for (double v : r.lambda) {
    if (std::abs(v - want_lambda) > tol) return false;
  }
  for (double v : r.mu) {
    if (std::abs(v - want_mu) > tol) return false;
  }
  return normalization_flags(f).weakly_normalized;
}

}  // namespace jframe
