#include "jframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jframe {

std::vector<KVector> FrameFamily::part_vectors(Part part) const {
  std::vector<KVector> out;
  for (std::size_t i : indices(part)) out.push_back(vectors[i]);
  return out;
}

Part FrameFamily::part_of(std::size_t index) const {
  for (std::size_t i : i_plus) {
    if (i == index) return Part::Plus;
  }
  for (std::size_t i : i_minus) {
    if (i == index) return Part::Minus;
  }
  fail_validation("dimension_mismatch", "family index out of range");
}

FrameFamily partition(const KreinSpace& space,
                      const std::vector<KVector>& vectors,
                      const num::Tolerances& tol) {
  tol.validate();
  if (vectors.empty()) {
    fail_validation("empty_family", "cannot partition an empty family");
  }
  FrameFamily f;
  f.space = space;
  f.vectors = vectors;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (j_ip(space, vectors[i], vectors[i]) <= 0.0) {
      fail_validation("zero_vector",
                      "family member " + std::to_string(i) + " is zero");
    }
    const SignClass c = classify(space, vectors[i], tol);
    switch (c.tag) {
      case SignTag::Positive:
        f.i_plus.push_back(i);
        break;
      case SignTag::Negative:
        f.i_minus.push_back(i);
        break;
      case SignTag::Neutral:
        fail_validation("neutral_vector",
                        "family member " + std::to_string(i) +
                            " is neutral; no J-frame can contain it");
    }
  }
  return f;
}

JFrameCheck is_j_frame(const FrameFamily& f, const num::Tolerances& tol) {
  tol.validate();
  if (f.i_plus.empty() || f.i_minus.empty()) {
    fail_validation("empty_part",
                    "a J-frame needs members of both signs");
  }
  JFrameCheck r;
  r.m_plus = span_of(f.space, f.part_vectors(Part::Plus), tol);
  r.m_minus = span_of(f.space, f.part_vectors(Part::Minus), tol);
  const bool plus_ok =
      definiteness(r.m_plus, tol) == Definiteness::UniformlyPositive &&
      r.m_plus.dim_m == f.space.sig_plus;
  const bool minus_ok =
      definiteness(r.m_minus, tol) == Definiteness::UniformlyNegative &&
      r.m_minus.dim_m == f.space.sig_minus;
  r.ok = plus_ok && minus_ok;
  return r;
}

double compute_zeta(const FrameFamily& f, const num::Tolerances& tol) {
  const JFrameCheck check = is_j_frame(f, tol);
  if (!check.ok) {
    fail_validation("not_j_frame", "zeta is defined only for J-frames");
  }
  return c_zero(check.m_plus, tol) + c_zero(check.m_minus, tol);
}

num::Matrix intrinsic_basis(const Subspace& m, int sign,
                            const num::Tolerances& tol) {
  tol.validate();
  const num::Matrix r = restricted_gram(m);
  const num::EigResult eig = num::sym_eig(r, tol);
  num::Matrix scaled = eig.vectors;  // columns U_j / sqrt(sign * d_j)
  for (std::size_t j = 0; j < scaled.cols(); ++j) {
    const double d = sign * eig.values[j];
    if (!(d > 0.0)) {
      fail_validation("not_definite",
                      "subspace is not uniformly definite with that sign");
    }
    const double s = 1.0 / std::sqrt(d);
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, j) *= s;
  }
  return m.basis * scaled;
}

PartFrame part_frame(const FrameFamily& f, Part part,
                     const num::Tolerances& tol) {
  tol.validate();
  const std::vector<KVector> vecs = f.part_vectors(part);
  if (vecs.empty()) {
    fail_validation("empty_part", "the requested part has no members");
  }
  PartFrame pf;
  pf.subspace = span_of(f.space, vecs, tol);
  const int sign = part_sign(part);
  const num::Matrix basis = intrinsic_basis(pf.subspace, sign, tol);
  const std::size_t k = basis.cols();

  // Row i holds sign*[f_i, b_j]: the expansion of f_i in the intrinsic
  // basis, since [b_a, b_b] = sign * delta_ab.
  pf.coords = num::Matrix(vecs.size(), k);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      pf.coords(i, j) =
          sign * indefinite_ip(f.space, vecs[i], basis.column(j));
    }
  }
  pf.frame_op = pf.coords.transposed() * pf.coords;
  pf.spectrum = num::sym_eig(pf.frame_op, tol).values;
  return pf;
}

num::Matrix frame_operator_part(const FrameFamily& f, Part part,
                                const num::Tolerances& tol) {
  const JFrameCheck check = is_j_frame(f, tol);
  if (!check.ok) {
    fail_validation("not_j_frame",
                    "frame operator parts are defined only for J-frames");
  }
  return part_frame(f, part, tol).frame_op;
}

FrameBounds frame_bounds(const FrameFamily& f, const num::Tolerances& tol) {
  const JFrameCheck check = is_j_frame(f, tol);
  if (!check.ok) {
    fail_validation("not_j_frame",
                    "frame bounds are defined only for J-frames");
  }
  const PartFrame plus = part_frame(f, Part::Plus, tol);
  const PartFrame minus = part_frame(f, Part::Minus, tol);
  FrameBounds b;
  b.spectrum_plus = plus.spectrum;
  b.spectrum_minus = minus.spectrum;
  b.plus = {plus.spectrum.back(), plus.spectrum.front()};
  b.minus = {minus.spectrum.back(), minus.spectrum.front()};
  return b;
}

namespace {

bool spectrum_is_flat(const std::vector<double>& spectrum, double verify_tol) {
  const double hi = spectrum.front();
  const double lo = spectrum.back();
  if (!(hi > 0.0)) return false;
  return (hi - lo) <= verify_tol * hi;
}

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

}  // namespace

TightVerdict is_tight(const FrameFamily& f, const num::Tolerances& tol) {
  const FrameBounds b = frame_bounds(f, tol);
  TightVerdict v;
  v.tight = spectrum_is_flat(b.spectrum_plus, tol.verify_tol) &&
            spectrum_is_flat(b.spectrum_minus, tol.verify_tol);
  if (v.tight) {
    v.a_plus = mean(b.spectrum_plus);
    v.a_minus = -mean(b.spectrum_minus);
  }
  return v;
}

bool is_parseval(const FrameFamily& f, const num::Tolerances& tol) {
  const TightVerdict v = is_tight(f, tol);
  return v.tight && std::abs(*v.a_plus - 1.0) <= tol.verify_tol &&
         std::abs(*v.a_minus + 1.0) <= tol.verify_tol;
}

NormalizationFlags normalization_flags(const FrameFamily& f,
                                       const num::Tolerances& tol) {
  tol.validate();
  NormalizationFlags flags{true, true};
  for (std::size_t i = 0; i < f.vectors.size(); ++i) {
    const double jn = j_norm(f.space, f.vectors[i]);
    if (std::abs(jn - 1.0) > tol.verify_tol) flags.normalized = false;
    const double self = indefinite_ip(f.space, f.vectors[i], f.vectors[i]);
    const double want = f.part_of(i) == Part::Plus ? 1.0 : -1.0;
    if (std::abs(self - want) > tol.verify_tol) flags.weakly_normalized = false;
  }
  return flags;
}

FrameFamily weakly_normalize(const FrameFamily& f) {
  FrameFamily out = f;
  for (std::size_t i = 0; i < out.vectors.size(); ++i) {
    const double self =
        indefinite_ip(out.space, out.vectors[i], out.vectors[i]);
    const double s = 1.0 / std::sqrt(std::abs(self));
    for (double& c : out.vectors[i]) c *= s;
  }
  return out;
}

bool is_j_onb(const FrameFamily& f, const num::Tolerances& tol) {
  tol.validate();
  if (f.size() != f.space.dim) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      const double ip = indefinite_ip(f.space, f.vectors[i], f.vectors[j]);
      double want = 0.0;
      if (i == j) want = f.part_of(i) == Part::Plus ? 1.0 : -1.0;
      if (std::abs(ip - want) > tol.verify_tol) return false;
    }
  }
  return true;
}

bool onb_characterization(const FrameFamily& f, const num::Tolerances& tol) {
  tol.validate();
  if (f.i_plus.empty() || f.i_minus.empty()) return false;
  try {
    const double zeta = compute_zeta(f, tol);
    if (std::abs(zeta - std::sqrt(2.0)) > tol.verify_tol) return false;
    if (!normalization_flags(f, tol).weakly_normalized) return false;
    return is_parseval(f, tol);
  } catch (const Error&) {
    return false;
  }
}

Disjointness disjointness(const FrameFamily& f, const num::Tolerances& tol) {
  tol.validate();
  if (f.i_plus.empty() || f.i_minus.empty()) {
    fail_validation("empty_part", "disjointness needs members of both signs");
  }
  const Subspace mp = span_of(f.space, f.part_vectors(Part::Plus), tol);
  const Subspace mm = span_of(f.space, f.part_vectors(Part::Minus), tol);

  std::vector<KVector> joint;
  for (std::size_t j = 0; j < mp.dim_m; ++j) joint.push_back(mp.basis.column(j));
  for (std::size_t j = 0; j < mm.dim_m; ++j) joint.push_back(mm.basis.column(j));
  const num::Matrix stacked = num::Matrix::from_columns(joint);
  // Rank on the eigenvalue scale of the Gram, for the same noise floor
  // reason as in span_of.
  const num::EigResult eig =
      num::sym_eig(stacked.transposed() * stacked, tol);
  std::vector<double> lam(eig.values.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    lam[i] = std::max(0.0, eig.values[i]);
  }
  const std::size_t joint_rank = num::numerical_rank(lam, tol);

  Disjointness d;
  d.disjoint = joint_rank == mp.dim_m + mm.dim_m;
  d.strictly_disjoint = true;
  for (std::size_t a = 0; a < mp.dim_m && d.strictly_disjoint; ++a) {
    for (std::size_t b = 0; b < mm.dim_m; ++b) {
      const double ip =
          indefinite_ip(f.space, mp.basis.column(a), mm.basis.column(b));
      if (std::abs(ip) > tol.verify_tol) {
        d.strictly_disjoint = false;
        break;
      }
    }
  }
  return d;
}

namespace {

// Parseval check of `vecs` as a frame for its own span under sign*[.,.].
bool part_is_parseval(const KreinSpace& space, const std::vector<KVector>& vecs,
                      const Subspace& m, int sign, const num::Tolerances& tol) {
  const num::Matrix basis = intrinsic_basis(m, sign, tol);
  num::Matrix coords(vecs.size(), basis.cols());
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      coords(i, j) = sign * indefinite_ip(space, vecs[i], basis.column(j));
    }
  }
  const num::Matrix s = coords.transposed() * coords;
  const std::vector<double> spectrum = num::sym_eig(s, tol).values;
  if (!spectrum_is_flat(spectrum, tol.verify_tol)) return false;
  return std::abs(mean(spectrum) - 1.0) <= tol.verify_tol;
}

}  // namespace

FrameFamily union_parseval(const std::vector<KVector>& x_family,
                           const std::vector<KVector>& y_family,
                           const KreinSpace& space,
                           const num::Tolerances& tol) {
  tol.validate();
  if (x_family.empty() || y_family.empty()) {
    fail_validation("empty_part", "both union inputs must be nonempty");
  }
  const Subspace m1 = span_of(space, x_family, tol);
  const Subspace m2 = span_of(space, y_family, tol);
  if (definiteness(m1, tol) != Definiteness::UniformlyPositive ||
      !part_is_parseval(space, x_family, m1, +1, tol)) {
    fail_validation("not_parseval_part",
                    "x family is not Parseval for a uniformly positive span");
  }
  if (definiteness(m2, tol) != Definiteness::UniformlyNegative ||
      !part_is_parseval(space, y_family, m2, -1, tol)) {
    fail_validation("not_parseval_part",
                    "y family is not Parseval for a uniformly negative span");
  }
  if (m1.dim_m != space.sig_plus || m2.dim_m != space.sig_minus) {
    fail_validation("not_maximal", "the spans must be maximal definite");
  }
  for (std::size_t a = 0; a < m1.dim_m; ++a) {
    for (std::size_t b = 0; b < m2.dim_m; ++b) {
      const double ip =
          indefinite_ip(space, m1.basis.column(a), m2.basis.column(b));
      if (std::abs(ip) > tol.verify_tol) {
        fail_validation("not_strictly_disjoint",
                        "the spans are not strictly disjoint");
      }
    }
  }
  std::vector<KVector> all = x_family;
  all.insert(all.end(), y_family.begin(), y_family.end());
  return partition(space, all, tol);
}

CombineResult combine(const FrameFamily& f, const FrameFamily& g, double alpha,
                      double beta, const num::Tolerances& tol) {
  tol.validate();
  if (std::abs(alpha * alpha + beta * beta - 1.0) > tol.verify_tol) {
    fail_validation("bad_coefficients", "alpha^2 + beta^2 must equal 1");
  }
  if (f.p() != g.p() || f.q() != g.q()) {
    fail_validation("partition_mismatch",
                    "the families must have matching part sizes");
  }
  const JFrameCheck cf = is_j_frame(f, tol);
  const JFrameCheck cg = is_j_frame(g, tol);
  if (!cf.ok || !cg.ok || !is_parseval(f, tol) || !is_parseval(g, tol)) {
    fail_validation("not_parseval_input",
                    "combine needs two Parseval J-frames");
  }
  const num::Matrix pf_plus = cf.m_plus.basis * cf.m_plus.basis.transposed();
  const num::Matrix pg_plus = cg.m_plus.basis * cg.m_plus.basis.transposed();
  const num::Matrix pf_minus = cf.m_minus.basis * cf.m_minus.basis.transposed();
  const num::Matrix pg_minus = cg.m_minus.basis * cg.m_minus.basis.transposed();
  if (num::max_abs(pf_plus - pg_plus) > 100.0 * tol.verify_tol ||
      num::max_abs(pf_minus - pg_minus) > 100.0 * tol.verify_tol) {
    fail_validation("mismatched_spans",
                    "the families must share both part spans");
  }

  CombineResult r;
  r.conditions.sign_preserved = true;
  for (Part part : {Part::Plus, Part::Minus}) {
    const auto& fi = f.indices(part);
    const auto& gi = g.indices(part);
    const std::size_t k = fi.size();
    num::Matrix cross(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        cross(a, b) =
            indefinite_ip(f.space, f.vectors[fi[a]], g.vectors[gi[b]]);
      }
    }
    bool skew = true;
    for (std::size_t a = 0; a < k && skew; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (std::abs(cross(a, b) + cross(b, a)) > tol.verify_tol) {
          skew = false;
          break;
        }
      }
    }
    (part == Part::Plus ? r.conditions.skew_plus : r.conditions.skew_minus) =
        skew;
    for (std::size_t a = 0; a < k; ++a) {
      const double ff =
          indefinite_ip(f.space, f.vectors[fi[a]], f.vectors[fi[a]]);
      const double gg =
          indefinite_ip(g.space, g.vectors[gi[a]], g.vectors[gi[a]]);
      const double lhs = 2.0 * alpha * beta * cross(a, a);
      const double rhs = -(alpha * alpha * ff + beta * beta * gg);
      // Combined self-product keeps its sign iff lhs sits on the correct
      // side of rhs (above on I+, below on I-).
      const bool ok = part == Part::Plus ? (lhs > rhs) : (lhs < rhs);
      if (!ok) r.conditions.sign_preserved = false;
    }
  }

  // Pair part-wise in order; the combined member takes f's index slot,
  // so the partition is inherited from f rather than re-derived.
  r.combined.space = f.space;
  r.combined.vectors.resize(f.size());
  r.combined.i_plus = f.i_plus;
  r.combined.i_minus = f.i_minus;
  for (Part part : {Part::Plus, Part::Minus}) {
    const auto& fi = f.indices(part);
    const auto& gi = g.indices(part);
    for (std::size_t a = 0; a < fi.size(); ++a) {
      KVector v(f.space.dim);
      for (std::size_t c = 0; c < f.space.dim; ++c) {
        v[c] = alpha * f.vectors[fi[a]][c] + beta * g.vectors[gi[a]][c];
      }
      r.combined.vectors[fi[a]] = std::move(v);
    }
  }
  try {
    r.combined_parseval =
        is_j_frame(r.combined, tol).ok && is_parseval(r.combined, tol);
  } catch (const Error&) {
    r.combined_parseval = false;
  }
  return r;
}

FrameAnalysis analyze(const FrameFamily& f, const num::Tolerances& tol) {
  tol.validate();
  FrameAnalysis a;
  const NormalizationFlags flags = normalization_flags(f, tol);
  a.is_weakly_normalized = flags.weakly_normalized;
  a.is_normalized = flags.normalized;
  a.is_onb = is_j_onb(f, tol);
  if (!f.i_plus.empty()) {
    a.m_plus = span_of(f.space, f.part_vectors(Part::Plus), tol);
  }
  if (!f.i_minus.empty()) {
    a.m_minus = span_of(f.space, f.part_vectors(Part::Minus), tol);
  }
  if (f.i_plus.empty() || f.i_minus.empty()) return a;

  const JFrameCheck check = is_j_frame(f, tol);
  a.is_j_frame = check.ok;
  if (!check.ok) return a;

  a.zeta = compute_zeta(f, tol);
  const FrameBounds b = frame_bounds(f, tol);
  a.bound_plus = b.plus;
  a.bound_minus = b.minus;
  a.spectrum_plus = b.spectrum_plus;
  a.spectrum_minus = b.spectrum_minus;
  const TightVerdict tv = is_tight(f, tol);
  a.is_tight = tv.tight;
  a.a_plus = tv.a_plus;
  a.a_minus = tv.a_minus;
  a.is_parseval = is_parseval(f, tol);
  return a;
}

}  // namespace jframe
