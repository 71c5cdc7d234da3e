#pragma once

// Shared fixtures and random family builders for the test suite.

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "jframe/frame.hpp"
#include "jframe/krein.hpp"
#include "jframe/optimize.hpp"
#include "jframe/rng.hpp"

namespace testutil {

using jframe::FrameFamily;
using jframe::KreinSpace;
using jframe::KVector;

inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kSqrt3 = 1.7320508075688772935;
inline constexpr double kSqrt5 = 2.2360679774997896964;
inline constexpr double kSqrt6 = 2.4494897427831780982;

// Four-vector family in signature (2,1): three members of a common
// positive plane scaled to unit self-product plus one negative member
// leaning into both canonical parts. Parseval, weakly normalized, not an
// orthonormal basis.
inline FrameFamily leaning_family() {
  const KreinSpace space = jframe::make_space_from_signature(2, 1);
  const std::vector<KVector> vectors = {
      {-1.0 / kSqrt2, -1.0 / kSqrt6, 0.0},
      {1.0 / kSqrt2, -1.0 / kSqrt6, 0.0},
      {0.0, 2.0 / kSqrt6, 0.0},
      {1.0 / kSqrt2, 0.0, kSqrt3 / kSqrt2},
  };
  return jframe::partition(space, vectors);
}

// Five-vector family in signature (2,1): a J-frame that is not tight,
// with three positive and two negative members of varied lengths.
inline FrameFamily skewed_family() {
  const KreinSpace space = jframe::make_space_from_signature(2, 1);
  const std::vector<KVector> vectors = {
      {1.0, 0.0, -1.0 / kSqrt6},
      {0.0, 1.0, -1.0 / kSqrt6},
      {1.0, 1.0, -kSqrt2 / kSqrt3},
      {1.0 / kSqrt5, 1.0 / kSqrt5, kSqrt3 / kSqrt5},
      {1.0, 1.0, kSqrt3},
  };
  return jframe::partition(space, vectors);
}

// Embed part coordinates at a canonical offset (0 for the positive part,
// m for the negative part).
inline KVector embed(const KVector& x, std::size_t dim, std::size_t offset) {
  KVector v(dim, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) v[offset + i] = x[i];
  return v;
}

// Random orthonormal basis pair aligned with the canonical parts: m + n
// vectors built by rotating each canonical block independently. The zero
// tails stay exactly zero, so the family is exactly doubly orthogonal.
inline FrameFamily random_onb_family(std::size_t m, std::size_t n,
                                     std::uint64_t seed) {
  const KreinSpace space = jframe::make_space_from_signature(m, n);
  jframe::rng::SplitMix64 gp = jframe::rng::SplitMix64::substream(seed, 11);
  jframe::rng::SplitMix64 gm = jframe::rng::SplitMix64::substream(seed, 12);
  const jframe::num::Matrix qp = jframe::random_rotation(m, gp);
  const jframe::num::Matrix qm = jframe::random_rotation(n, gm);
  std::vector<KVector> vectors;
  vectors.reserve(m + n);
  for (std::size_t k = 0; k < m; ++k) {
    vectors.push_back(embed(qp.column(k), m + n, 0));
  }
  for (std::size_t k = 0; k < n; ++k) {
    vectors.push_back(embed(qm.column(k), m + n, m));
  }
  return jframe::partition(space, vectors);
}

// Random maximal uniformly definite subspace bases realized as graphs:
// the positive span is {(x, Kx)} and the negative span {(Ly, y)} with
// coupling blocks of operator norm at most 0.8, so every member keeps a
// definiteness margin of at least 0.36 of its squared length.
struct GraphBases {
  std::vector<KVector> plus;   // m columns spanning the positive part
  std::vector<KVector> minus;  // n columns spanning the negative part
};

inline GraphBases random_graph_bases(std::size_t m, std::size_t n,
                                     jframe::rng::SplitMix64& gen) {
  const std::size_t dim = m + n;
  const double bound = 0.8 / std::sqrt(static_cast<double>(m * n));
  std::vector<std::vector<double>> k(n, std::vector<double>(m));
  std::vector<std::vector<double>> l(m, std::vector<double>(n));
  for (auto& row : k) {
    for (double& e : row) e = bound * (2.0 * gen.uniform01() - 1.0);
  }
  for (auto& row : l) {
    for (double& e : row) e = bound * (2.0 * gen.uniform01() - 1.0);
  }
  GraphBases out;
  for (std::size_t c = 0; c < m; ++c) {
    KVector v(dim, 0.0);
    v[c] = 1.0;
    for (std::size_t r = 0; r < n; ++r) v[m + r] = k[r][c];
    out.plus.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < n; ++c) {
    KVector v(dim, 0.0);
    v[m + c] = 1.0;
    for (std::size_t r = 0; r < m; ++r) v[r] = l[r][c];
    out.minus.push_back(std::move(v));
  }
  return out;
}

// Random family whose positive part spans a random maximal uniformly
// positive subspace with p members, and likewise q members on the
// negative side. The first dim(part) members reproduce the part basis
// plus a Gaussian mix, which keeps the span full.
inline FrameFamily random_j_frame(std::size_t m, std::size_t n, std::size_t p,
                                  std::size_t q, std::uint64_t seed,
                                  bool weakly_normalized = true) {
  const KreinSpace space = jframe::make_space_from_signature(m, n);
  jframe::rng::SplitMix64 gen = jframe::rng::SplitMix64::substream(seed, 21);
  const GraphBases bases = random_graph_bases(m, n, gen);
  const std::size_t dim = m + n;
  std::vector<KVector> vectors;
  vectors.reserve(p + q);
  const auto mix = [&](const std::vector<KVector>& basis, std::size_t index) {
    KVector v(dim, 0.0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const double w = (b == index ? 1.0 : 0.0) + 0.5 * gen.gaussian();
      for (std::size_t c = 0; c < dim; ++c) v[c] += w * basis[b][c];
    }
    return v;
  };
  for (std::size_t i = 0; i < p; ++i) vectors.push_back(mix(bases.plus, i));
  for (std::size_t i = 0; i < q; ++i) vectors.push_back(mix(bases.minus, i));
  FrameFamily f = jframe::partition(space, vectors);
  if (weakly_normalized) f = jframe::weakly_normalize(f);
  return f;
}

// Two per-part Parseval families: scaled unit tight frames of each
// canonical part, independently rotated inside their parts. Their spans
// are the full canonical parts, hence exactly strictly disjoint.
struct ParsevalParts {
  KreinSpace space;
  std::vector<KVector> plus;
  std::vector<KVector> minus;
};

inline ParsevalParts random_parseval_parts(std::size_t m, std::size_t n,
                                           std::size_t p, std::size_t q,
                                           std::uint64_t seed) {
  ParsevalParts out;
  out.space = jframe::make_space_from_signature(m, n);
  jframe::rng::SplitMix64 gp = jframe::rng::SplitMix64::substream(seed, 31);
  jframe::rng::SplitMix64 gm = jframe::rng::SplitMix64::substream(seed, 32);
  const jframe::num::Matrix qp = jframe::random_rotation(m, gp);
  const jframe::num::Matrix qm = jframe::random_rotation(n, gm);
  const double sp = std::sqrt(static_cast<double>(m) / static_cast<double>(p));
  const double sq = std::sqrt(static_cast<double>(n) / static_cast<double>(q));
  for (const KVector& x : jframe::generate_fntf(m, p)) {
    KVector r = qp * x;
    for (double& c : r) c *= sp;
    out.plus.push_back(embed(r, m + n, 0));
  }
  for (const KVector& y : jframe::generate_fntf(n, q)) {
    KVector r = qm * y;
    for (double& c : r) c *= sq;
    out.minus.push_back(embed(r, m + n, m));
  }
  return out;
}

// Rotation pair in signature (2,2): g applies a quarter turn inside each
// part of the canonical basis family f, so both cross part Grams are
// exactly skew and every unit circle combination stays Parseval.
struct CombinePair {
  FrameFamily f;
  FrameFamily g;
};

inline CombinePair rotation_pair_22() {
  const KreinSpace space = jframe::make_space_from_signature(2, 2);
  const std::vector<KVector> f = {
      {1.0, 0.0, 0.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.0},
      {0.0, 0.0, 0.0, 1.0},
  };
  const std::vector<KVector> g = {
      {0.0, 1.0, 0.0, 0.0},
      {-1.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 1.0},
      {0.0, 0.0, -1.0, 0.0},
  };
  return {jframe::partition(space, f), jframe::partition(space, g)};
}

// Largest |a - b|.
inline double spread(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double lo = v[0], hi = v[0];
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi - lo;
}

}  // namespace testutil
