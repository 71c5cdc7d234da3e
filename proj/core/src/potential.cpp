#include "jframe/potential.hpp"

#include <cmath>

namespace jframe {

namespace {

void require_pair(const FrameFamily& f, std::size_t i, std::size_t j) {
  if (i >= f.size() || j >= f.size()) {
    fail_validation("dimension_mismatch", "pair index out of range");
  }
  if (i == j) {
    fail_validation("same_index", "pair operations need two distinct members");
  }
}

void require_zeta(double zeta) {
  // The lower edge allows for rounding in a computed sqrt2.
  if (!(zeta >= std::sqrt(2.0) - 1e-12) || !(zeta < 2.0)) {
    fail_validation("zeta_out_of_range", "zeta must lie in [sqrt2, 2)");
  }
}

double self_product(const FrameFamily& f, std::size_t i) {
  return indefinite_ip(f.space, f.vectors[i], f.vectors[i]);
}

}  // namespace

ForceResult frame_force(const FrameFamily& f, double zeta, std::size_t i,
                        std::size_t j) {
  require_pair(f, i, j);
  require_zeta(zeta);
  const Part pi = f.part_of(i);
  const Part pj = f.part_of(j);
  double coefficient = 0.0;
  if (pi == pj) {
    const double ip = indefinite_ip(f.space, f.vectors[i], f.vectors[j]);
    coefficient = (pi == Part::Plus ? 2.0 : -2.0) * ip;
  } else {
    const double ni = j_norm(f.space, f.vectors[i]);
    const double nj = j_norm(f.space, f.vectors[j]);
    const double jip = j_ip(f.space, f.vectors[i], f.vectors[j]);
    coefficient = 2.0 * (ni * nj * zeta + jip);
  }
  ForceResult r;
  r.coefficient = coefficient;
  r.direction.resize(f.space.dim);
  r.vector.resize(f.space.dim);
  for (std::size_t c = 0; c < f.space.dim; ++c) {
    r.direction[c] = f.vectors[i][c] - f.vectors[j][c];
    r.vector[c] = coefficient * r.direction[c];
  }
  return r;
}

double pair_potential(const FrameFamily& f, double zeta, std::size_t i,
                      std::size_t j) {
  require_pair(f, i, j);
  const Part pi = f.part_of(i);
  const Part pj = f.part_of(j);
  if (pi != pj) {
    return (zeta * zeta - 1.0) / 2.0;
  }
  const double ip = indefinite_ip(f.space, f.vectors[i], f.vectors[j]);
  const double ai2 = std::abs(self_product(f, i));
  const double aj2 = std::abs(self_product(f, j));
  return ip * ip - 0.25 * (ai2 + aj2) * (ai2 + aj2);
}

double radial_potential(double ai2, double aj2, double x) {
  return 0.25 * x * x * (x * x - 2.0 * (ai2 + aj2));
}

double radial_force(double ai2, double aj2, double x) {
  return ai2 + aj2 - x * x;
}

double frame_potential(const FrameFamily& f) {
  double acc = 0.0;
  for (Part part : {Part::Plus, Part::Minus}) {
    const auto& idx = f.indices(part);
    for (std::size_t a : idx) {
      for (std::size_t b : idx) {
        const double ip = indefinite_ip(f.space, f.vectors[a], f.vectors[b]);
        acc += ip * ip;
      }
    }
  }
  return acc;
}

double frame_potential_trace(const FrameFamily& f, const num::Tolerances& tol) {
  const JFrameCheck check = is_j_frame(f, tol);
  if (!check.ok) {
    fail_validation("not_j_frame",
                    "the trace form is defined only for J-frames");
  }
  double acc = 0.0;
  for (Part part : {Part::Plus, Part::Minus}) {
    const num::Matrix s = part_frame(f, part, tol).frame_op;
    // tr(S^2) is the squared Frobenius norm of the symmetric S.
    for (double v : s.data()) acc += v * v;
  }
  return acc;
}

double total_potential(const FrameFamily& f, double zeta) {
  double acc = frame_potential(f);
  acc += static_cast<double>(f.p()) * static_cast<double>(f.q()) *
         (zeta * zeta - 1.0) / 2.0;
  for (Part part : {Part::Plus, Part::Minus}) {
    const auto& idx = f.indices(part);
    for (std::size_t a : idx) {
      const double aa = std::abs(self_product(f, a));
      for (std::size_t b : idx) {
        const double bb = std::abs(self_product(f, b));
        acc -= 0.25 * (aa + bb) * (aa + bb);
      }
    }
  }
  return acc;
}

double potential_floor(const FrameFamily& f) {
  double acc = 0.0;
  if (f.p() > 0) {
    if (f.space.sig_plus == 0) {
      fail_validation("bad_signature",
                      "positive members need a positive signature part");
    }
    acc += static_cast<double>(f.p()) * static_cast<double>(f.p()) /
           static_cast<double>(f.space.sig_plus);
  }
  if (f.q() > 0) {
    if (f.space.sig_minus == 0) {
      fail_validation("bad_signature",
                      "negative members need a negative signature part");
    }
    acc += static_cast<double>(f.q()) * static_cast<double>(f.q()) /
           static_cast<double>(f.space.sig_minus);
  }
  return acc;
}

std::vector<KVector> potential_gradient(const FrameFamily& f,
                                        const num::Tolerances& tol) {
  const JFrameCheck check = is_j_frame(f, tol);
  if (!check.ok) {
    fail_validation("not_j_frame",
                    "the potential gradient is defined only for J-frames");
  }
  std::vector<KVector> grad(f.size(), KVector(f.space.dim, 0.0));
  for (Part part : {Part::Plus, Part::Minus}) {
    const Subspace& m = part == Part::Plus ? check.m_plus : check.m_minus;
    const num::Matrix proj = m.basis * m.basis.transposed();
    const auto& idx = f.indices(part);
    // Projected J-images of the part members, reused across i.
    std::vector<KVector> pj(idx.size());
    for (std::size_t b = 0; b < idx.size(); ++b) {
      pj[b] = proj * (f.space.j * f.vectors[idx[b]]);
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
      KVector& g = grad[idx[a]];
      for (std::size_t b = 0; b < idx.size(); ++b) {
        const double ip =
            indefinite_ip(f.space, f.vectors[idx[a]], f.vectors[idx[b]]);
        for (std::size_t c = 0; c < f.space.dim; ++c) {
          g[c] += 4.0 * ip * pj[b][c];
        }
      }
    }
  }
  return grad;
}

PotentialReport potential_report(const FrameFamily& f, double zeta,
                                 const num::Tolerances& tol) {
  tol.validate();
  PotentialReport r;
  r.fp_j = frame_potential(f);
  r.tp_j = total_potential(f, zeta);
  r.floor = potential_floor(f);
  r.pair_matrix = num::Matrix(f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i == j) continue;
      r.pair_matrix(i, j) = pair_potential(f, zeta, i, j);
    }
  }
  r.intrinsic_norms.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    r.intrinsic_norms[i] = std::sqrt(std::abs(self_product(f, i)));
  }
  return r;
}

}  // namespace jframe
