#include <cmath>
#include <vector>

#include "doctest.h"
#include "jframe/errors.hpp"
#include "jframe/optimize.hpp"
#include "jframe/potential.hpp"
#include "testutil.hpp"

using jframe::Error;
using jframe::FrameFamily;
using jframe::KreinSpace;
using jframe::KVector;
using jframe::MinimizeConfig;

namespace {

// Frame operator sum of outer products and its largest deviation from
// (p/d) times the identity.
double tightness_defect(const std::vector<KVector>& xs, std::size_t d) {
  jframe::num::Matrix s(d, d);
  for (const KVector& x : xs) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) s(i, j) += x[i] * x[j];
    }
  }
  const double want = static_cast<double>(xs.size()) / static_cast<double>(d);
  double defect = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      defect = std::max(defect, std::abs(s(i, j) - (i == j ? want : 0.0)));
    }
  }
  return defect;
}

}  // namespace

TEST_CASE("unit tight frame generator over a size grid") {
  for (std::size_t d = 1; d <= 5; ++d) {
    for (std::size_t p = d; p <= 2 * d + 3; ++p) {
      const std::vector<KVector> xs = jframe::generate_fntf(d, p);
      REQUIRE(xs.size() == p);
      for (const KVector& x : xs) {
        double n2 = 0.0;
        for (double c : x) n2 += c * c;
        CHECK(std::abs(n2 - 1.0) <= 1e-12);
      }
      CHECK(tightness_defect(xs, d) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(jframe::generate_fntf(3, 2), Error);
  CHECK_THROWS_AS(jframe::generate_fntf_2d(1), Error);
}

TEST_CASE("planar generator matches the general one") {
  const std::vector<KVector> a = jframe::generate_fntf_2d(5);
  const std::vector<KVector> b = jframe::generate_fntf(2, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
  }
}

TEST_CASE("tight generator output is a tight weakly normalized j frame") {
  const KreinSpace space = jframe::make_space_from_signature(3, 2);
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    const FrameFamily f = jframe::generate_tight_j_frame(space, 5, 3, seed);
    CHECK(f.p() == 5);
    CHECK(f.q() == 3);
    CHECK(jframe::is_j_frame(f).ok);
    CHECK(jframe::is_tight(f).tight);
    CHECK(jframe::normalization_flags(f).weakly_normalized);
    const double fp = jframe::frame_potential(f);
    const double floor = jframe::potential_floor(f);
    CHECK(std::abs(fp - floor) <= 1e-9);
  }
  // Determinism per seed.
  const FrameFamily x = jframe::generate_tight_j_frame(space, 5, 3, 9);
  const FrameFamily y = jframe::generate_tight_j_frame(space, 5, 3, 9);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x.vectors[i] == y.vectors[i]);
  }
  CHECK_THROWS_AS(jframe::generate_tight_j_frame(space, 2, 3, 0), Error);
}

TEST_CASE("rotations are orthogonal") {
  jframe::rng::SplitMix64 gen(5);
  for (std::size_t d : {2u, 3u, 5u}) {
    const jframe::num::Matrix q = jframe::random_rotation(d, gen);
    const jframe::num::Matrix qtq = q.transposed() * q;
    CHECK(jframe::num::max_abs(qtq - jframe::num::Matrix::identity(d)) <
          1e-12);
  }
}

TEST_CASE("minimizer reaches the floor") {
  const KreinSpace space = jframe::make_space_from_signature(2, 1);
  MinimizeConfig cfg;
  cfg.seed = 3;
  const jframe::MinimizeResult r = jframe::minimize_potential(space, 3, 2, cfg);
  CHECK(r.converged);
  CHECK(r.floor == doctest::Approx(8.5));
  CHECK(std::abs(r.gap) <= 1e-6);
  for (double v : r.lambda) {
    CHECK(std::abs(v - 1.5) <= 1e-4);
  }
  for (double v : r.mu) {
    CHECK(std::abs(v - 2.0) <= 1e-4);
  }
  CHECK(jframe::normalization_flags(r.family).weakly_normalized);
  CHECK(r.iterations <= cfg.max_iters);
}

TEST_CASE("minimizer is deterministic per seed") {
  const KreinSpace space = jframe::make_space_from_signature(2, 2);
  MinimizeConfig cfg;
  cfg.seed = 11;
  const jframe::MinimizeResult a = jframe::minimize_potential(space, 3, 3, cfg);
  const jframe::MinimizeResult b = jframe::minimize_potential(space, 3, 3, cfg);
  REQUIRE(a.family.size() == b.family.size());
  for (std::size_t i = 0; i < a.family.size(); ++i) {
    CHECK(a.family.vectors[i] == b.family.vectors[i]);
  }
  CHECK(a.fp_j == b.fp_j);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("minimizer validates its inputs") {
  const KreinSpace space = jframe::make_space_from_signature(2, 1);
  MinimizeConfig cfg;
  CHECK_THROWS_AS(jframe::minimize_potential(space, 1, 1, cfg), Error);
  cfg.restarts = 0;
  CHECK_THROWS_AS(jframe::minimize_potential(space, 3, 2, cfg), Error);
  cfg = MinimizeConfig{};
  cfg.step = -0.1;
  CHECK_THROWS_AS(jframe::minimize_potential(space, 3, 2, cfg), Error);
  const KreinSpace swap =
      jframe::make_space_from_j(jframe::num::Matrix(2, 2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(jframe::minimize_potential(swap, 2, 2, MinimizeConfig{}),
                  Error);
}

TEST_CASE("family evaluation mirrors the minimizer report") {
  const FrameFamily f = testutil::leaning_family();
  const jframe::MinimizeResult r = jframe::evaluate_family(f);
  CHECK(r.fp_j == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(r.floor == doctest::Approx(5.5));
  CHECK(r.gap == doctest::Approx(-2.5).epsilon(1e-12));
  REQUIRE(r.lambda.size() == 2);
  CHECK(r.lambda[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("minimum certificates") {
  const KreinSpace space = jframe::make_space_from_signature(2, 1);
  MinimizeConfig cfg;
  cfg.seed = 3;
  const jframe::MinimizeResult good =
      jframe::minimize_potential(space, 3, 2, cfg);
  CHECK(jframe::certify_minimum(good, 1e-6));

  // The leaning family is weakly normalized and Parseval yet its part
  // constants sit at 1, far from p/m = 3/2, so it is not a potential
  // minimizer among weakly normalized families.
  const jframe::MinimizeResult lean =
      jframe::evaluate_family(testutil::leaning_family());
  CHECK_FALSE(jframe::certify_minimum(lean, 1e-6));
}
