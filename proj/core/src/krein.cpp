#include "jframe/krein.hpp"

#include <cmath>

namespace jframe {

namespace {

void require_dim(const KreinSpace& s, const KVector& x) {
  if (x.size() != s.dim) {
    fail_validation("dimension_mismatch",
                    "vector length does not match the space dimension");
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      fail_validation("non_finite_entry", "vector entries must be finite");
    }
  }
}

}  // namespace

KreinSpace make_space_from_signature(std::size_t m, std::size_t n) {
  if (m + n < 1) {
    fail_validation("zero_dimension", "signature must have m + n >= 1");
  }
  KreinSpace s;
  s.dim = m + n;
  s.sig_plus = m;
  s.sig_minus = n;
  s.j = num::Matrix(s.dim, s.dim);
  for (std::size_t i = 0; i < s.dim; ++i) s.j(i, i) = (i < m) ? 1.0 : -1.0;
  s.canonical = true;
  return s;
}

KreinSpace make_space_from_j(const num::Matrix& j, const num::Tolerances& tol) {
  tol.validate();
  if (j.rows() != j.cols() || j.rows() == 0) {
    fail_validation("zero_dimension", "J must be square and nonempty");
  }
  const std::size_t n = j.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (std::abs(j(i, k) - j(k, i)) > tol.eig_tol) {
        fail_validation("not_symmetric", "J must be symmetric");
      }
    }
  }
  const num::Matrix jj = j * j;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double want = (i == k) ? 1.0 : 0.0;
      if (std::abs(jj(i, k) - want) > tol.eig_tol) {
        fail_validation("not_involution", "J^2 must equal the identity");
      }
    }
  }

  KreinSpace s;
  s.dim = n;
  s.j = j;
  const num::EigResult eig = num::sym_eig(j, tol);
  for (double v : eig.values) {
    if (v > 0.0) {
      ++s.sig_plus;
    } else {
      ++s.sig_minus;
    }
  }
  s.canonical = true;
  for (std::size_t i = 0; i < n && s.canonical; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double want =
          (i == k) ? (i < s.sig_plus ? 1.0 : -1.0) : 0.0;
      if (j(i, k) != want) {
        s.canonical = false;
        break;
      }
    }
  }
  return s;
}

double indefinite_ip(const KreinSpace& s, const KVector& x, const KVector& y) {
  require_dim(s, x);
  require_dim(s, y);
  double acc = 0.0;
  for (std::size_t i = 0; i < s.dim; ++i) {
    double row = 0.0;
    for (std::size_t k = 0; k < s.dim; ++k) row += s.j(i, k) * y[k];
    acc += x[i] * row;
  }
  return acc;
}

double j_ip(const KreinSpace& s, const KVector& x, const KVector& y) {
  require_dim(s, x);
  require_dim(s, y);
  const KVector jy = s.j * y;
  return indefinite_ip(s, x, jy);
}

double j_norm(const KreinSpace& s, const KVector& x) {
  return std::sqrt(std::max(0.0, j_ip(s, x, x)));
}

SignClass classify(const KreinSpace& s, const KVector& x,
                   const num::Tolerances& tol) {
  tol.validate();
  const double jn2 = j_ip(s, x, x);
  if (jn2 <= 0.0) {
    fail_validation("zero_vector", "classification of the zero vector is refused");
  }
  const double self = indefinite_ip(s, x, x);
  SignClass c{SignTag::Neutral, self};
  if (self > tol.verify_tol * jn2) {
    c.tag = SignTag::Positive;
  } else if (self < -tol.verify_tol * jn2) {
    c.tag = SignTag::Negative;
  }
  return c;
}

std::pair<KVector, KVector> project_canonical(const KreinSpace& s,
                                              const KVector& x) {
  require_dim(s, x);
  const KVector jx = s.j * x;
  KVector plus(s.dim), minus(s.dim);
  for (std::size_t i = 0; i < s.dim; ++i) {
    plus[i] = 0.5 * (x[i] + jx[i]);
    minus[i] = 0.5 * (x[i] - jx[i]);
  }
  return {plus, minus};
}

}  // namespace jframe
