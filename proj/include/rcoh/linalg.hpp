#pragma once

#include <cstddef>
#include <vector>

#include "rcoh/field.hpp"

namespace rcoh {

/// Dense row-major matrix over GF(p).
class Matrix {
public:
  Matrix(Residue modulus, std::size_t rows, std::size_t cols);
  static Matrix identity(Residue modulus, std::size_t n);
  /// Rows given as vectors; all of length `cols`.
  static Matrix from_rows(Residue modulus, std::size_t cols, const std::vector<Vector>& rows);
  /// Columns given as vectors; all of length `rows`.
  static Matrix from_columns(Residue modulus, std::size_t rows, const std::vector<Vector>& cols);

  Residue modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;  // M v
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;

  const std::vector<Residue>& data() const { return data_; }
  std::vector<Residue>& data() { return data_; }

  bool operator==(const Matrix&) const = default;

private:
  Residue p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

namespace linalg {

/// Reduced row echelon form. Pivot search takes the first row (from the
/// current pivot row down) with a nonzero entry in the current column, so the
/// result is the unique RREF and the pivot order is reproducible.
RrefResult rref(const Matrix& m);

/// Single-threaded reference elimination, kept for testing and benchmarks.
RrefResult rref_serial(const Matrix& m);

/// OpenMP row-update elimination. Identical output to rref_serial.
RrefResult rref_parallel(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column, in free-column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Rank of the span of `vectors` (each of length n).
std::size_t span_rank(Residue modulus, std::size_t n, const std::vector<Vector>& vectors);

/// True when v lies in span(vectors).
bool in_span(Residue modulus, const std::vector<Vector>& vectors, const Vector& v);

/// Greedily appends vectors of `whole`, in order, that raise the rank of
/// span(sub ∪ chosen). Throws std::invalid_argument if some vector of `sub`
/// is outside span(whole).
std::vector<Vector> complement_basis(Residue modulus, const std::vector<Vector>& sub,
                                     const std::vector<Vector>& whole);

/// RREF of the row space spanned by `vectors`, zero rows dropped. Canonical
/// form used to compare subspaces.
std::vector<Vector> canonical_basis(Residue modulus, std::size_t n, const std::vector<Vector>& vectors);

}  // namespace linalg
}  // namespace rcoh
