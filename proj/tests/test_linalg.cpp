#include <doctest.h>

#include "rcoh/cochain.hpp"
#include "rcoh/random.hpp"

using namespace rcoh;

TEST_CASE("rank examples") {
  CHECK(linalg::rank(Matrix::identity(7, 3)) == 3);
  CHECK(linalg::rank(Matrix(5, 2, 4)) == 0);
  CHECK(linalg::rank(Matrix::from_rows(5, 2, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rref output is reduced and pivots are first nonzero columns") {
  const auto r = linalg::rref(Matrix::from_rows(5, 3, {{0, 2, 4}, {0, 1, 2}, {3, 0, 1}}));
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced.row(0) == Vector{1, 0, 2});
  CHECK(r.reduced.row(1) == Vector{0, 1, 2});
  CHECK(r.reduced.row(2) == Vector{0, 0, 0});
}

TEST_CASE("kernel examples") {
  CHECK(linalg::kernel_basis(Matrix::identity(5, 4)).empty());
  const auto zero_kernel = linalg::kernel_basis(Matrix(5, 3, 3));
  CHECK(zero_kernel.size() == 3);
  CHECK(linalg::canonical_basis(5, 3, zero_kernel) == std::vector<Vector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("kernel of [[1,2],[2,4]] over GF(5) against all 25 vectors") {
  const auto m = Matrix::from_rows(5, 2, {{1, 2}, {2, 4}});
  const auto k = linalg::kernel_basis(m);
  REQUIRE(k.size() == 1);
  std::vector<Vector> brute;
  for (Residue a = 0; a < 5; ++a)
    for (Residue b = 0; b < 5; ++b)
      if ((a + 2 * b) % 5 == 0 && (2 * a + 4 * b) % 5 == 0) brute.push_back({a, b});
  CHECK(brute.size() == 5);
  for (const auto& v : brute) CHECK(linalg::in_span(5, k, v));
  // proportional to (3, 1)
  CHECK((k[0][0] + 2 * k[0][1]) % 5 == 0);
  CHECK(k[0][1] != 0);
  CHECK(k[0][0] == 3 * k[0][1] % 5);
}

TEST_CASE("complement basis edge cases") {
  const Vector v{1, 2, 3};
  CHECK(linalg::complement_basis(7, {}, {v}) == std::vector<Vector>{v});
  const std::vector<Vector> whole{{1, 0, 0}, {0, 1, 0}};
  CHECK(linalg::complement_basis(7, whole, whole).empty());
  CHECK_THROWS_AS(linalg::complement_basis(7, {{0, 0, 1}}, whole), std::invalid_argument);
}

TEST_CASE("complement of d1 image inside ker d2 for m_0(7) has 4 vectors") {
  const auto a = make_m0(7);
  const auto m1 = d1_matrix(a);
  std::vector<Vector> image;
  for (std::size_t c = 0; c < m1.cols(); ++c) image.push_back(m1.column(c));
  const auto ker = linalg::kernel_basis(d2_matrix(a));
  CHECK(ker.size() == 9);
  const auto comp = linalg::complement_basis(7, image, ker);
  CHECK(comp.size() == 4);
  CHECK(linalg::in_span(7, ker, phi_k(7, 9).coeffs()));
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  Rng rng(11);
  for (Residue p : {2u, 3u, 7u, 13u}) {
    for (int t = 0; t < 20; ++t) {
      const std::size_t rows = 1 + rng.residue(9), cols = 1 + rng.residue(9);
      Matrix m(p, rows, cols);
      for (auto& x : m.data()) x = rng.residue(p) * (rng.residue(3) == 0 ? 0 : 1);
      const auto k = linalg::kernel_basis(m);
      CHECK(k.size() + linalg::rank(m) == cols);
      for (const auto& v : k) CHECK(PrimeField::is_zero(m.apply(v)));
      CHECK(linalg::span_rank(p, cols, k) == k.size());
    }
  }
}

TEST_CASE("parallel rref matches the serial reference") {
  Rng rng(3);
  for (std::size_t n : {1u, 5u, 40u, 130u}) {
    Matrix m(101, n, n + 3);
    for (auto& x : m.data()) x = rng.residue(101);
    // force some dependency
    if (n > 2)
      for (std::size_t c = 0; c < m.cols(); ++c) m(n - 1, c) = (m(0, c) * 2 + m(1, c)) % 101;
    const auto s = linalg::rref_serial(m), par = linalg::rref_parallel(m);
    CHECK(s.rank == par.rank);
    CHECK(s.pivot_columns == par.pivot_columns);
    CHECK(s.reduced == par.reduced);
  }
}

TEST_CASE("matrix product and shape checks") {
  const auto a = Matrix::from_rows(7, 2, {{1, 2}, {3, 4}});
  const auto b = Matrix::from_rows(7, 2, {{0, 1}, {1, 0}});
  CHECK((a * b).row(0) == Vector{2, 1});
  CHECK_THROWS(a * Matrix(7, 3, 3));
  CHECK_THROWS(Matrix::from_rows(7, 2, {{1, 2, 3}}));
}
