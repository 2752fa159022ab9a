#include "rcoh/lie_algebra.hpp"

#include <stdexcept>

namespace rcoh {

LieAlgebra::LieAlgebra(Residue prime, std::size_t dim, std::map<Pair, Vector> brackets, std::vector<int> weights,
                       std::vector<std::string> labels)
    : p_(prime), dim_(dim), weights_(std::move(weights)), labels_(std::move(labels)) {
  if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
  if (weights_.empty()) weights_.assign(dim_, 0);
  if (weights_.size() != dim_) throw std::invalid_argument("weights length must equal dim");
  if (labels_.empty())
    for (std::size_t k = 0; k < dim_; ++k) labels_.push_back("e_" + std::to_string(k + 1));
  if (labels_.size() != dim_) throw std::invalid_argument("labels length must equal dim");
  for (auto& [key, coeffs] : brackets) {
    const auto [i, j] = key;
    if (i >= j || j >= dim_) throw std::invalid_argument("bracket indices must satisfy i < j <= dim");
    if (coeffs.size() != dim_) throw std::invalid_argument("bracket coefficient vector has wrong length");
    for (auto& c : coeffs) c %= p_;
    if (PrimeField::is_zero(coeffs)) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (coeffs[k]) terms_.push_back({i, j, k, coeffs[k]});
    brackets_.emplace(key, coeffs);
  }
}

Vector LieAlgebra::structure(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
  if (i == j) return Vector(dim_, 0);
  const bool swapped = i > j;
  const auto it = brackets_.find(swapped ? Pair{j, i} : Pair{i, j});
  if (it == brackets_.end()) return Vector(dim_, 0);
  return swapped ? field().scaled(p_ - 1, it->second) : it->second;
}

Element LieAlgebra::bracket(const Element& g, const Element& h) const {
  if (g.size() != dim_ || h.size() != dim_) throw std::invalid_argument("element dimension mismatch");
  const PrimeField f = field();
  Element out(dim_, 0);
  for (const auto& t : terms_) {
    const Residue coeff = f.sub(f.mul(g[t.i], h[t.j]), f.mul(g[t.j], h[t.i]));
    if (coeff) out[t.k] = f.add(out[t.k], f.mul(coeff, t.c));
  }
  return out;
}

bool LieAlgebra::is_graded() const {
  for (const auto& t : terms_)
    if (weights_[t.k] != weights_[t.i] + weights_[t.j]) return false;
  return true;
}

LieAlgebra make_m0(Residue p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::map<LieAlgebra::Pair, Vector> brackets;
  // [e_1, e_i] = e_{i+1} for 1 < i < p, in 0-based indices (0, i) -> i + 1.
  for (std::size_t i = 1; i + 1 < p; ++i) {
    Vector v(p, 0);
    v[i + 1] = 1;
    brackets.emplace(LieAlgebra::Pair{0, i}, v);
  }
  std::vector<int> weights(p);
  for (std::size_t k = 0; k < p; ++k) weights[k] = static_cast<int>(k + 1);
  return LieAlgebra(p, p, std::move(brackets), std::move(weights));
}

Element left_normed_bracket(const LieAlgebra& a, const std::vector<Element>& gs) {
  if (gs.size() < 2) throw std::invalid_argument("left-normed bracket needs at least two entries");
  Element v = gs[0];
  for (std::size_t i = 1; i < gs.size(); ++i) v = a.bracket(v, gs[i]);
  return v;
}

Matrix ad_matrix(const LieAlgebra& a, const Element& g) {
  Matrix m(a.prime(), a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const auto col = a.bracket(g, a.basis(j));
    for (std::size_t r = 0; r < a.dim(); ++r) m(r, j) = col[r];
  }
  return m;
}

Matrix matrix_power(const Matrix& m, std::uint64_t e) {
  Matrix result = Matrix::identity(m.modulus(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& a) {
  const PrimeField f = a.field();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = a.basis(i), ej = a.basis(j), ek = a.basis(k);
        auto s = a.bracket(a.bracket(ei, ej), ek);
        f.axpy(1, a.bracket(a.bracket(ej, ek), ei), s);
        f.axpy(1, a.bracket(a.bracket(ek, ei), ej), s);
        if (!PrimeField::is_zero(s)) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

std::vector<Element> center(const LieAlgebra& a) {
  // Row block k holds the coordinates of [h, e_k] as a linear function of h.
  const std::size_t n = a.dim();
  Matrix m(a.prime(), n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = a.structure(i, k);
      for (std::size_t r = 0; r < n; ++r) m(k * n + r, i) = v[r];
    }
  return linalg::kernel_basis(m);
}

}  // namespace rcoh
