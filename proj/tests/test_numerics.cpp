#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "doctest.h"
#include "jframe/errors.hpp"
#include "jframe/numerics.hpp"
#include "jframe/rng.hpp"

using jframe::Error;
using jframe::num::Matrix;
using jframe::num::Tolerances;

namespace {

Matrix random_symmetric(std::size_t n, jframe::rng::SplitMix64& gen) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = gen.gaussian();
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
  return jframe::num::max_abs(x - y);
}

}  // namespace

TEST_CASE("matrix construction rejects non finite entries") {
  CHECK_THROWS_AS(Matrix(1, 2, {1.0, std::nan("")}), Error);
  CHECK_THROWS_AS(Matrix(1, 1, {std::numeric_limits<double>::infinity()}),
                  Error);
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), Error);  // size mismatch
}

TEST_CASE("matrix algebra basics") {
  const Matrix a(2, 3, {1, 2, 3, 4, 5, 6});
  const Matrix at = a.transposed();
  CHECK(at.rows() == 3);
  CHECK(at(0, 1) == 4.0);
  const Matrix id = Matrix::identity(3);
  CHECK(max_abs_diff(a * id, a) == 0.0);
  const std::vector<double> v = {1.0, 0.0, -1.0};
  const std::vector<double> av = a * v;
  CHECK(av[0] == doctest::Approx(-2.0));
  CHECK(av[1] == doctest::Approx(-2.0));
  const Matrix c = Matrix::from_columns({{1, 0}, {0, 2}});
  CHECK(c(1, 1) == 2.0);
  CHECK(c(0, 1) == 0.0);
}

TEST_CASE("eigendecomposition reconstructs random symmetric matrices") {
  const Tolerances tol{};
  jframe::rng::SplitMix64 gen(7);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u}) {
    Matrix a = random_symmetric(n, gen);
    const jframe::num::EigResult e = jframe::num::sym_eig(a, tol);
    REQUIRE(e.values.size() == n);
    // Descending order.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(e.values[i] >= e.values[i + 1]);
    }
    // Orthogonality of the eigenvector matrix.
    const Matrix vtv = e.vectors.transposed() * e.vectors;
    CHECK(max_abs_diff(vtv, Matrix::identity(n)) < 1e-10);
    // Reconstruction.
    Matrix lambda(n, n);
    for (std::size_t i = 0; i < n; ++i) lambda(i, i) = e.values[i];
    const Matrix back = e.vectors * lambda * e.vectors.transposed();
    CHECK(max_abs_diff(back, a) < 1e-10);
  }
}

TEST_CASE("eigendecomposition is exact on diagonal input") {
  const Matrix a(3, 3, {3, 0, 0, 0, -5, 0, 0, 0, 1});
  const jframe::num::EigResult e = jframe::num::sym_eig(a, {});
  CHECK(e.values[0] == 3.0);
  CHECK(e.values[1] == 1.0);
  CHECK(e.values[2] == -5.0);
  // Eigenvectors are exact unit coordinate vectors, possibly reordered.
  for (std::size_t j = 0; j < 3; ++j) {
    double ones = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      ones += std::abs(e.vectors(i, j));
    }
    CHECK(ones == 1.0);
  }
}

TEST_CASE("eigendecomposition rejects asymmetric input") {
  const Matrix a(2, 2, {1, 2, 3, 4});
  CHECK_THROWS_AS(jframe::num::sym_eig(a, {}), Error);
}

TEST_CASE("known two by two spectrum") {
  // [[2,1],[1,2]] has eigenvalues 3 and 1.
  const Matrix a(2, 2, {2, 1, 1, 2});
  const jframe::num::EigResult e = jframe::num::sym_eig(a, {});
  CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("singular values of simple matrices") {
  // A rotation has all singular values one.
  const double c = std::cos(0.3), s = std::sin(0.3);
  const Matrix rot(2, 2, {c, -s, s, c});
  const std::vector<double> sv = jframe::num::singular_values(rot, {});
  CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-14));

  // Rank one outer product: single nonzero singular value = |u||v|.
  const Matrix outer(2, 3, {2, 4, 4, 1, 2, 2});
  const std::vector<double> so = jframe::num::singular_values(outer, {});
  REQUIRE(so.size() == 2);
  CHECK(so[0] == doctest::Approx(std::sqrt(45.0)).epsilon(1e-12));
  CHECK(so[1] < 1e-7);
}

TEST_CASE("singular values match eigenvalue magnitudes for symmetric input") {
  jframe::rng::SplitMix64 gen(11);
  const Matrix a = random_symmetric(4, gen);
  const jframe::num::EigResult e = jframe::num::sym_eig(a, {});
  std::vector<double> mags;
  for (double v : e.values) mags.push_back(std::abs(v));
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  const std::vector<double> sv = jframe::num::singular_values(a, {});
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(sv[i] == doctest::Approx(mags[i]).epsilon(1e-9));
  }
}

TEST_CASE("numerical rank applies a relative cutoff") {
  const Tolerances tol{};
  CHECK(jframe::num::numerical_rank({}, tol) == 0);
  CHECK(jframe::num::numerical_rank({0.0, 0.0}, tol) == 0);
  CHECK(jframe::num::numerical_rank({5.0, 1.0, 4e-9}, tol) == 2);
  CHECK(jframe::num::numerical_rank({5.0, 1.0, 6e-9}, tol) == 3);
  // The cutoff is purely relative to the head, whatever its scale.
  CHECK(jframe::num::numerical_rank({1e-30, 1e-31}, tol) == 2);
}

TEST_CASE("tolerance validation") {
  Tolerances t;
  CHECK_NOTHROW(t.validate());
  t.eig_tol = 0.0;
  CHECK_THROWS_AS(t.validate(), Error);
  t = Tolerances{};
  t.verify_tol = 1e-13;  // below eig_tol
  CHECK_THROWS_AS(t.validate(), Error);
}
