#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jframe/krein.hpp"
#include "jframe/numerics.hpp"
#include "jframe/subspace.hpp"

namespace jframe {

enum class Part { Plus, Minus };

inline int part_sign(Part p) { return p == Part::Plus ? 1 : -1; }

/// Ordered vector family with its index partition by self-product sign.
/// Construct through partition(); neutral members are refused there, so
/// i_plus and i_minus always cover all indices.
struct FrameFamily {
  KreinSpace space;
  std::vector<KVector> vectors;
  std::vector<std::size_t> i_plus;
  std::vector<std::size_t> i_minus;

  std::size_t size() const { return vectors.size(); }
  std::size_t p() const { return i_plus.size(); }
  std::size_t q() const { return i_minus.size(); }
  const std::vector<std::size_t>& indices(Part part) const {
    return part == Part::Plus ? i_plus : i_minus;
  }
  std::vector<KVector> part_vectors(Part part) const;
  Part part_of(std::size_t index) const;
};

/// Per-part intrinsic picture of a family: the part's span, the part
/// vectors' coordinates in a basis of that span orthonormal under
/// sign*[.,.] (rows of `coords`), the frame operator coords^T coords,
/// and its descending spectrum.
struct PartFrame {
  Subspace subspace;
  num::Matrix coords;
  num::Matrix frame_op;
  std::vector<double> spectrum;
};

struct JFrameCheck {
  bool ok = false;
  Subspace m_plus;
  Subspace m_minus;
};

struct FrameBounds {
  std::pair<double, double> plus{0.0, 0.0};   // (low, high) on (M+, [.,.])
  std::pair<double, double> minus{0.0, 0.0};  // (low, high) on (M-, -[.,.])
  std::vector<double> spectrum_plus;
  std::vector<double> spectrum_minus;
};

/// Tightness verdict. a_plus is the common positive-part constant;
/// a_minus is reported negative (the defining identity on the minus part
/// has a negative constant since [f,f] < 0 there). Both are present only
/// when tight holds.
struct TightVerdict {
  bool tight = false;
  std::optional<double> a_plus;
  std::optional<double> a_minus;
};

struct NormalizationFlags {
  bool normalized = false;         // ||f_i||_J = 1 for all i
  bool weakly_normalized = false;  // [f_i,f_i] = +1 on I+, -1 on I-
};

struct Disjointness {
  bool disjoint = false;           // M+ and M- intersect trivially
  bool strictly_disjoint = false;  // [x,y] = 0 across the two spans
};

/// Conditions report of combine(): sign preservation of every combined
/// member at the given (alpha, beta), and skewness of the cross-Gram
/// [f_i, g_j] over each part.
struct CombineConditions {
  bool sign_preserved = false;
  bool skew_plus = false;
  bool skew_minus = false;
  bool all() const { return sign_preserved && skew_plus && skew_minus; }
};

struct CombineResult {
  CombineConditions conditions;
  FrameFamily combined;
  bool combined_parseval = false;
};

/// Aggregate verdicts of a family. Span/zeta/bounds fields are present
/// only where computable (both parts nonempty, J-frame holds).
struct FrameAnalysis {
  std::optional<Subspace> m_plus;
  std::optional<Subspace> m_minus;
  std::optional<double> zeta;
  std::optional<std::pair<double, double>> bound_plus;
  std::optional<std::pair<double, double>> bound_minus;
  std::vector<double> spectrum_plus;
  std::vector<double> spectrum_minus;
  bool is_j_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
  bool is_weakly_normalized = false;
  bool is_normalized = false;
  bool is_onb = false;
  std::optional<double> a_plus;
  std::optional<double> a_minus;
};

/// Split a family by sign class, preserving order. Zero and neutral
/// members are refused with the offending index in the message.
FrameFamily partition(const KreinSpace& space,
                      const std::vector<KVector>& vectors,
                      const num::Tolerances& tol = {});

/// J-frame test: span of the positive part uniformly positive with
/// dimension sig_plus, span of the negative part uniformly negative with
/// dimension sig_minus (maximality in finite dimension). Both parts must
/// be nonempty.
JFrameCheck is_j_frame(const FrameFamily& f, const num::Tolerances& tol = {});

/// zeta = c_zero(M+) + c_zero(M-), in [sqrt2, 2) for J-frames.
double compute_zeta(const FrameFamily& f, const num::Tolerances& tol = {});

/// Basis of a uniformly definite subspace orthonormal under sign*[.,.]
/// (columns, ambient coordinates).
num::Matrix intrinsic_basis(const Subspace& m, int sign,
                            const num::Tolerances& tol = {});

/// Intrinsic picture of one part of a J-frame.
PartFrame part_frame(const FrameFamily& f, Part part,
                     const num::Tolerances& tol = {});

/// Frame operator of one part in its intrinsic basis.
num::Matrix frame_operator_part(const FrameFamily& f, Part part,
                                const num::Tolerances& tol = {});

/// Intrinsic frame bounds and spectra of both parts.
FrameBounds frame_bounds(const FrameFamily& f, const num::Tolerances& tol = {});

/// Tight iff each part's spectrum has relative spread <= verify_tol.
TightVerdict is_tight(const FrameFamily& f, const num::Tolerances& tol = {});

/// Parseval iff tight with constants +1 and -1.
bool is_parseval(const FrameFamily& f, const num::Tolerances& tol = {});

NormalizationFlags normalization_flags(const FrameFamily& f,
                                       const num::Tolerances& tol = {});

/// Scale every member to unit |[f,f]|.
FrameFamily weakly_normalize(const FrameFamily& f);

/// Literal pairwise test: size == dim and [e_i,e_j] matches +delta on
/// I+ diagonal, -delta on I- diagonal, 0 off-diagonal, within verify_tol.
bool is_j_onb(const FrameFamily& f, const num::Tolerances& tol = {});

/// Independent route to the same verdict: zeta = sqrt2 within verify_tol,
/// weakly normalized, and Parseval. False for non-J-frames.
bool onb_characterization(const FrameFamily& f, const num::Tolerances& tol = {});

/// disjoint: dim(M+ u M-) = dim M+ + dim M-.
/// strictly_disjoint: [x, y] = 0 for all basis pairs across the spans.
Disjointness disjointness(const FrameFamily& f, const num::Tolerances& tol = {});

/// Union of a Parseval family for a maximal uniformly positive subspace
/// and one for a maximal uniformly negative subspace, checked strictly
/// disjoint; the concatenation (x then y) is returned partitioned.
FrameFamily union_parseval(const std::vector<KVector>& x_family,
                           const std::vector<KVector>& y_family,
                           const KreinSpace& space,
                           const num::Tolerances& tol = {});

/// Linear combination alpha*f_i + beta*g_i of two Parseval families with
/// identical part spans and part sizes, alpha^2 + beta^2 = 1. Members are
/// paired part-wise in order; the combined family inherits f's partition.
CombineResult combine(const FrameFamily& f, const FrameFamily& g, double alpha,
                      double beta, const num::Tolerances& tol = {});

/// Full verdict aggregate over one family.
FrameAnalysis analyze(const FrameFamily& f, const num::Tolerances& tol = {});

}  // namespace jframe
