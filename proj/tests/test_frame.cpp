#include <cmath>
#include <vector>

#include "doctest.h"
#include "jframe/errors.hpp"
#include "jframe/frame.hpp"
#include "jframe/optimize.hpp"
#include "testutil.hpp"

using jframe::Error;
using jframe::FrameFamily;
using jframe::KreinSpace;
using jframe::KVector;
using jframe::Part;
using testutil::kSqrt2;
using testutil::kSqrt3;

TEST_CASE("partition splits by self product sign") {
  const FrameFamily lean = testutil::leaning_family();
  CHECK(lean.p() == 3);
  CHECK(lean.q() == 1);
  CHECK(lean.i_plus == std::vector<std::size_t>{0, 1, 2});
  CHECK(lean.i_minus == std::vector<std::size_t>{3});
  CHECK(lean.part_of(3) == Part::Minus);

  const FrameFamily skew = testutil::skewed_family();
  CHECK(skew.p() == 3);
  CHECK(skew.q() == 2);
  CHECK(skew.i_minus == std::vector<std::size_t>{3, 4});
}

TEST_CASE("partition refuses neutral and zero members") {
  const KreinSpace s = jframe::make_space_from_signature(1, 1);
  CHECK_THROWS_AS(jframe::partition(s, {{1.0, 1.0}}), Error);
  CHECK_THROWS_AS(jframe::partition(s, {{0.0, 0.0}}), Error);
  CHECK_THROWS_AS(jframe::partition(s, {{1.0, 0.0}, {1.0}}), Error);
}

TEST_CASE("j frame verdicts") {
  CHECK(jframe::is_j_frame(testutil::leaning_family()).ok);
  CHECK(jframe::is_j_frame(testutil::skewed_family()).ok);

  // Positive span short of maximal: two copies of one direction.
  const KreinSpace s = jframe::make_space_from_signature(2, 1);
  const FrameFamily thin = jframe::partition(
      s, {{1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}, {0.0, 0.0, 1.0}});
  CHECK_FALSE(jframe::is_j_frame(thin).ok);

  // A missing part is refused rather than reported false.
  const FrameFamily no_minus =
      jframe::partition(s, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
  CHECK_THROWS_AS(jframe::is_j_frame(no_minus), Error);
}

TEST_CASE("zeta of the leaning family") {
  const double zeta = jframe::compute_zeta(testutil::leaning_family());
  const double expect = (3.0 + kSqrt3) / (2.0 * kSqrt2);
  CHECK(zeta == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("zeta of the skewed family matches its part constants") {
  const FrameFamily f = testutil::skewed_family();
  const jframe::JFrameCheck check = jframe::is_j_frame(f);
  REQUIRE(check.ok);
  const double zeta = jframe::compute_zeta(f);
  CHECK(zeta == doctest::Approx(jframe::c_zero(check.m_plus, {}) +
                                jframe::c_zero(check.m_minus, {}))
                    .epsilon(1e-15));
  CHECK(zeta >= kSqrt2);
  CHECK(zeta < 2.0);
}

TEST_CASE("part frames of the skewed family") {
  const FrameFamily f = testutil::skewed_family();
  const jframe::PartFrame plus = jframe::part_frame(f, Part::Plus);
  REQUIRE(plus.spectrum.size() == 2);
  CHECK(plus.spectrum[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(plus.spectrum[1] == doctest::Approx(1.0).epsilon(1e-12));
  const jframe::PartFrame minus = jframe::part_frame(f, Part::Minus);
  REQUIRE(minus.spectrum.size() == 1);
  CHECK(minus.spectrum[0] == doctest::Approx(1.2).epsilon(1e-12));
  // The frame operator is the coordinate Gram of the part members.
  const jframe::num::Matrix op =
      plus.coords.transposed() * plus.coords;
  CHECK(jframe::num::max_abs(op - plus.frame_op) < 1e-12);
}

TEST_CASE("frame bounds bracket the spectra") {
  const jframe::FrameBounds b = jframe::frame_bounds(testutil::skewed_family());
  CHECK(b.plus.first == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.plus.second == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b.minus.first == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(b.minus.second == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("tightness and parseval verdicts") {
  const jframe::TightVerdict lean = jframe::is_tight(testutil::leaning_family());
  CHECK(lean.tight);
  REQUIRE(lean.a_plus.has_value());
  REQUIRE(lean.a_minus.has_value());
  CHECK(*lean.a_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*lean.a_minus == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(jframe::is_parseval(testutil::leaning_family()));

  const jframe::TightVerdict skew = jframe::is_tight(testutil::skewed_family());
  CHECK_FALSE(skew.tight);
  CHECK_FALSE(skew.a_plus.has_value());
  CHECK_FALSE(jframe::is_parseval(testutil::skewed_family()));

  // Tight but not Parseval: scale every member by 2 (constants become 4).
  FrameFamily scaled = testutil::leaning_family();
  for (KVector& v : scaled.vectors) {
    for (double& c : v) c *= 2.0;
  }
  const jframe::TightVerdict big = jframe::is_tight(scaled);
  CHECK(big.tight);
  CHECK(*big.a_plus == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_FALSE(jframe::is_parseval(scaled));
}

TEST_CASE("normalization flags and weak normalization") {
  // The positive members carry self product 2/3, so the family is
  // Parseval without being weakly normalized.
  const jframe::NormalizationFlags lean =
      jframe::normalization_flags(testutil::leaning_family());
  CHECK_FALSE(lean.weakly_normalized);
  CHECK_FALSE(lean.normalized);

  const jframe::NormalizationFlags skew =
      jframe::normalization_flags(testutil::skewed_family());
  CHECK_FALSE(skew.weakly_normalized);

  const FrameFamily fixed = jframe::weakly_normalize(testutil::skewed_family());
  CHECK(jframe::normalization_flags(fixed).weakly_normalized);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const double self =
        jframe::indefinite_ip(fixed.space, fixed.vectors[i], fixed.vectors[i]);
    CHECK(std::abs(std::abs(self) - 1.0) < 1e-12);
  }
  // Idempotent to rounding.
  const FrameFamily twice = jframe::weakly_normalize(fixed);
  for (std::size_t i = 0; i < twice.size(); ++i) {
    for (std::size_t c = 0; c < twice.vectors[i].size(); ++c) {
      CHECK(std::abs(twice.vectors[i][c] - fixed.vectors[i][c]) < 1e-14);
    }
  }
}

TEST_CASE("orthonormal basis verdicts agree on canonical constructions") {
  const std::pair<std::size_t, std::size_t> sigs[] = {
      {1, 1}, {2, 1}, {2, 2}, {3, 2}};
  for (const auto& [m, n] : sigs) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const FrameFamily f = testutil::random_onb_family(m, n, seed * 131 + m);
      CHECK(jframe::is_j_onb(f));
      CHECK(jframe::onb_characterization(f));
      const double zeta = jframe::compute_zeta(f);
      CHECK(std::abs(zeta - kSqrt2) <= 1e-9);
    }
  }
}

TEST_CASE("parseval family that is not a basis fails both verdicts") {
  const FrameFamily f = testutil::leaning_family();
  CHECK_FALSE(jframe::is_j_onb(f));
  CHECK_FALSE(jframe::onb_characterization(f));
}

TEST_CASE("hyperbolic pair passes the literal pattern only") {
  // In signature (1,1) the pair (cosh t, sinh t), (sinh t, cosh t) has
  // [e_i, e_j] = +-delta exactly, yet its spans lean into the neutral
  // cone, so the characterization through zeta rejects it.
  const double t = 0.5;
  const KreinSpace s = jframe::make_space_from_signature(1, 1);
  const FrameFamily f = jframe::partition(
      s, {{std::cosh(t), std::sinh(t)}, {std::sinh(t), std::cosh(t)}});
  CHECK(jframe::is_j_onb(f));
  CHECK_FALSE(jframe::onb_characterization(f));
  CHECK(jframe::compute_zeta(f) > kSqrt2 + 1e-6);
}

TEST_CASE("disjointness verdicts") {
  const jframe::Disjointness lean = jframe::disjointness(testutil::leaning_family());
  CHECK(lean.disjoint);
  CHECK_FALSE(lean.strictly_disjoint);

  const FrameFamily onb = testutil::random_onb_family(2, 2, 5);
  const jframe::Disjointness d = jframe::disjointness(onb);
  CHECK(d.disjoint);
  CHECK(d.strictly_disjoint);
}

TEST_CASE("union of per part parseval families") {
  const testutil::ParsevalParts parts = testutil::random_parseval_parts(2, 1, 4, 2, 9);
  const FrameFamily u = jframe::union_parseval(parts.plus, parts.minus, parts.space);
  CHECK(u.p() == 4);
  CHECK(u.q() == 2);
  CHECK(jframe::is_parseval(u));
  CHECK(jframe::is_j_frame(u).ok);
}

TEST_CASE("union requires strict disjointness") {
  // The negative line leans into the first canonical direction, so it is
  // not orthogonal to the positive span under the indefinite product.
  const KreinSpace s = jframe::make_space_from_signature(2, 1);
  const std::vector<KVector> x = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  const std::vector<KVector> y = {{1.0 / kSqrt2, 0.0, kSqrt3 / kSqrt2}};
  CHECK_THROWS_AS(jframe::union_parseval(x, y, s), Error);
}

TEST_CASE("combine on the rotation pair") {
  const testutil::CombinePair pair = testutil::rotation_pair_22();
  const jframe::CombineResult r = jframe::combine(pair.f, pair.g, 0.6, 0.8);
  CHECK(r.conditions.sign_preserved);
  CHECK(r.conditions.skew_plus);
  CHECK(r.conditions.skew_minus);
  CHECK(r.conditions.all());
  CHECK(r.combined_parseval);
  CHECK(r.combined.size() == 4);
  // First combined member is 0.6 f1 + 0.8 g1.
  CHECK(r.combined.vectors[0][0] == doctest::Approx(0.6));
  CHECK(r.combined.vectors[0][1] == doctest::Approx(0.8));
}

TEST_CASE("combining a family with itself fails the conditions") {
  const testutil::CombinePair pair = testutil::rotation_pair_22();
  const double a = 1.0 / kSqrt2;
  const jframe::CombineResult r = jframe::combine(pair.f, pair.f, a, a);
  CHECK_FALSE(r.conditions.skew_plus);
  CHECK_FALSE(r.conditions.skew_minus);
  CHECK_FALSE(r.combined_parseval);
}

TEST_CASE("combine validates its inputs") {
  const testutil::CombinePair pair = testutil::rotation_pair_22();
  CHECK_THROWS_AS(jframe::combine(pair.f, pair.g, 0.5, 0.5), Error);  // not unit
  const FrameFamily small = testutil::random_onb_family(2, 1, 3);
  CHECK_THROWS_AS(jframe::combine(pair.f, small, 0.6, 0.8), Error);
}

TEST_CASE("analysis aggregate equals the single verdicts") {
  const FrameFamily f = testutil::leaning_family();
  const jframe::FrameAnalysis a = jframe::analyze(f);
  CHECK(a.is_j_frame == jframe::is_j_frame(f).ok);
  CHECK(a.is_tight == jframe::is_tight(f).tight);
  CHECK(a.is_parseval == jframe::is_parseval(f));
  CHECK(a.is_onb == jframe::is_j_onb(f));
  CHECK(a.is_weakly_normalized ==
        jframe::normalization_flags(f).weakly_normalized);
  REQUIRE(a.zeta.has_value());
  CHECK(*a.zeta == doctest::Approx(jframe::compute_zeta(f)).epsilon(1e-15));
  REQUIRE(a.bound_plus.has_value());
  CHECK(a.bound_plus->first == doctest::Approx(1.0).epsilon(1e-12));
}
