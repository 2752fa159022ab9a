#include "rcoh/linalg.hpp"

#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rcoh {

Matrix::Matrix(Residue modulus, std::size_t rows, std::size_t cols)
    : p_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(modulus)) throw std::invalid_argument("matrix modulus must be prime");
}

Matrix Matrix::identity(Residue modulus, std::size_t n) {
  Matrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Residue modulus, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(modulus, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % modulus;
  }
  return m;
}

Matrix Matrix::from_columns(Residue modulus, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(modulus, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r] % modulus;
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  const PrimeField f(p_);
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
      if (acc >= (1ull << 62)) acc %= p_;
    }
    out[r] = static_cast<Residue>(acc % p_);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product mismatch");
  const PrimeField f(p_);
  Matrix out(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Residue a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, o(k, j)));
    }
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

namespace linalg {
namespace {

// Eliminates column `col` from row r using pivot row `prow` (pivot entry 1).
inline void eliminate_row(Matrix& m, const PrimeField& f, std::size_t r, std::size_t prow,
                          std::size_t col) {
  const Residue factor = m(r, col);
  if (factor == 0) return;
  const Residue nf = f.neg(factor);
  for (std::size_t c = col; c < m.cols(); ++c) {
    const Residue pv = m(prow, c);
    if (pv) m(r, c) = f.add(m(r, c), f.mul(nf, pv));
  }
}

// Finds and normalizes the next pivot. Returns false if column has none.
bool place_pivot(Matrix& m, const PrimeField& f, std::size_t prow, std::size_t col) {
  std::size_t r = prow;
  while (r < m.rows() && m(r, col) == 0) ++r;
  if (r == m.rows()) return false;
  if (r != prow)
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(prow, c));
  const Residue s = f.inv(m(prow, col));
  for (std::size_t c = col; c < m.cols(); ++c) m(prow, c) = f.mul(m(prow, c), s);
  return true;
}

}  // namespace

RrefResult rref_serial(const Matrix& input) {
  RrefResult out{input, 0, {}};
  Matrix& m = out.reduced;
  const PrimeField f = m.field();
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    if (!place_pivot(m, f, prow, col)) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != prow) eliminate_row(m, f, r, prow, col);
    out.pivot_columns.push_back(col);
    ++prow;
  }
  out.rank = prow;
  return out;
}

RrefResult rref_parallel(const Matrix& input) {
  RrefResult out{input, 0, {}};
  Matrix& m = out.reduced;
  const PrimeField f = m.field();
  std::size_t prow = 0;
  const auto nrows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    if (!place_pivot(m, f, prow, col)) continue;
    const auto pr = static_cast<std::ptrdiff_t>(prow);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < nrows; ++r)
      if (r != pr) eliminate_row(m, f, static_cast<std::size_t>(r), prow, col);
    out.pivot_columns.push_back(col);
    ++prow;
  }
  out.rank = prow;
  return out;
}

RrefResult rref(const Matrix& m) {
#ifdef _OPENMP
  constexpr std::size_t kParallelThreshold = std::size_t{1} << 16;
  if (m.rows() * m.cols() >= kParallelThreshold && omp_get_max_threads() > 1) return rref_parallel(m);
#endif
  return rref_serial(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto res = rref(m);
  const PrimeField f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < res.rank; ++i) v[res.pivot_columns[i]] = f.neg(res.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_rank(Residue modulus, std::size_t n, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(modulus, n, vectors));
}

bool in_span(Residue modulus, const std::vector<Vector>& vectors, const Vector& v) {
  const std::size_t n = v.size();
  if (PrimeField::is_zero(v)) return true;
  auto extended = vectors;
  const std::size_t r = span_rank(modulus, n, vectors);
  extended.push_back(v);
  return span_rank(modulus, n, extended) == r;
}

std::vector<Vector> complement_basis(Residue modulus, const std::vector<Vector>& sub,
                                     const std::vector<Vector>& whole) {
  if (sub.empty() && whole.empty()) return {};
  const std::size_t n = whole.empty() ? sub.front().size() : whole.front().size();
  for (const auto& s : sub)
    if (!in_span(modulus, whole, s)) throw std::invalid_argument("complement_basis: sub not contained in span(whole)");

  // Incremental echelon form of the accepted vectors keeps this O(|whole| n^2).
  const PrimeField f(modulus);
  std::vector<Vector> echelon;
  std::vector<std::size_t> pivots;
  auto reduce = [&](Vector v) {
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      const Residue c = v[pivots[i]];
      if (c) f.axpy(f.neg(c), echelon[i], v);
    }
    return v;
  };
  auto accept = [&](const Vector& v) {
    Vector r = reduce(v);
    std::size_t piv = 0;
    while (piv < n && r[piv] == 0) ++piv;
    if (piv == n) return false;
    r = f.scaled(f.inv(r[piv]), r);
    for (auto& e : echelon)
      if (e[piv]) f.axpy(f.neg(e[piv]), r, e);
    echelon.push_back(std::move(r));
    pivots.push_back(piv);
    return true;
  };
  for (const auto& s : sub) accept(s);
  std::vector<Vector> chosen;
  for (const auto& w : whole)
    if (accept(w)) chosen.push_back(w);
  return chosen;
}

std::vector<Vector> canonical_basis(Residue modulus, std::size_t n, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  const auto res = rref(Matrix::from_rows(modulus, n, vectors));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < res.rank; ++i) out.push_back(res.reduced.row(i));
  return out;
}

}  // namespace linalg
}  // namespace rcoh
