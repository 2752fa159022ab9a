#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rcoh/lie_algebra.hpp"

namespace rcoh {

/// Strictly increasing index tuples of length `degree` over {0..n-1}, in
/// lexicographic order. Position in this order is the cochain coordinate.
class WedgeBasis {
public:
  WedgeBasis(std::size_t n, std::size_t degree);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::size_t>& tuple(std::size_t idx) const { return tuples_.at(idx); }
  /// Coordinate of a strictly increasing tuple.
  std::size_t index(const std::vector<std::size_t>& sorted) const;

private:
  std::size_t n_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> tuples_;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// Sorts `idx` in place; returns +1/-1 for the permutation sign, 0 if an index repeats.
int sort_with_sign(std::vector<std::size_t>& idx);

/// Alternating cochain of fixed degree with trivial coefficients, stored on
/// sorted index tuples.
template <std::size_t Degree>
class Cochain {
public:
  using Index = std::array<std::size_t, Degree>;

  Cochain(Residue prime, std::size_t dim) : p_(prime), dim_(dim), coeffs_(binomial(dim, Degree), 0) {}
  Cochain(Residue prime, std::size_t dim, Vector coeffs) : p_(prime), dim_(dim), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != binomial(dim, Degree)) throw std::invalid_argument("cochain coordinate count mismatch");
    for (auto& c : coeffs_) c %= p_;
  }

  Residue prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Vector& coeffs() const { return coeffs_; }
  WedgeBasis basis() const { return WedgeBasis(dim_, Degree); }

  /// Coefficient on e^{idx}, with the sign of the sorting permutation.
  Residue at(const Index& idx) const {
    std::vector<std::size_t> v(idx.begin(), idx.end());
    const int s = sort_with_sign(v);
    if (s == 0) return 0;
    const Residue c = coeffs_[basis().index(v)];
    return s > 0 ? c : PrimeField(p_).neg(c);
  }

  /// Adds c * e^{idx}; unsorted indices are normalized, repeated ones ignored.
  Cochain& add(const Index& idx, Residue c) {
    std::vector<std::size_t> v(idx.begin(), idx.end());
    const int s = sort_with_sign(v);
    if (s == 0) return *this;
    const PrimeField f(p_);
    auto& slot = coeffs_[basis().index(v)];
    slot = f.add(slot, s > 0 ? c % p_ : f.neg(c % p_));
    return *this;
  }

  bool is_zero() const { return PrimeField::is_zero(coeffs_); }
  bool operator==(const Cochain&) const = default;

private:
  Residue p_;
  std::size_t dim_;
  Vector coeffs_;
};

using Cochain1 = Cochain<1>;
using Cochain2 = Cochain<2>;
using Cochain3 = Cochain<3>;

/// phi(x ^ y) = sum_{i<j} sigma_ij (x_i y_j - x_j y_i).
Residue evaluate(const Cochain2& phi, const Element& x, const Element& y);
/// alpha(x ^ y ^ z) as the alternating trilinear form.
Residue evaluate(const Cochain3& alpha, const Element& x, const Element& y, const Element& z);
Residue evaluate(const Cochain1& psi, const Element& x);

/// Matrix of d1: C^1 -> C^2, d1(psi)(e_i ^ e_j) = psi([e_i, e_j]).
Matrix d1_matrix(const LieAlgebra& a);
/// Matrix of d2: C^2 -> C^3 from the structure constants.
Matrix d2_matrix(const LieAlgebra& a);

Cochain2 d1(const LieAlgebra& a, const Cochain1& psi);
Cochain3 d2(const LieAlgebra& a, const Cochain2& phi);

/// Sum of 1-based indices of e^{i_1,...,i_q}.
int weight(const std::vector<std::size_t>& one_based);

/// Weight of every nonzero term if they all agree; -1 for mixed weight, 0 for the zero cochain.
template <std::size_t Degree>
int homogeneous_weight(const Cochain<Degree>& c) {
  const auto b = c.basis();
  int w = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!c.coeffs()[i]) continue;
    int wi = 0;
    for (auto k : b.tuple(i)) wi += static_cast<int>(k + 1);
    if (w == 0)
      w = wi;
    else if (w != wi)
      return -1;
  }
  return w;
}

/// phi_k = e^{2,k-2} - e^{3,k-3} + ... + (-1)^{floor(k/2)} e^{floor(k/2), k-floor(k/2)}
/// in m_0(p). Requires k odd and 5 <= k <= p + 2.
Cochain2 phi_k(Residue p, int k);

/// Linear combination in wedge notation, e.g. "e^{2,5} - e^{3,4}". `labels`
/// holds one label per coordinate.
std::string format_combination(const PrimeField& f, const Vector& coeffs, const std::vector<std::string>& labels);

/// "e^k", "e^{i,j}", "e^{s,t,u}" with 1-based indices and the given base symbol.
std::string wedge_label(const std::vector<std::size_t>& zero_based, const std::string& symbol = "e");
std::vector<std::string> wedge_labels(std::size_t n, std::size_t degree, const std::string& symbol = "e");

template <std::size_t Degree>
std::string format_cochain(const Cochain<Degree>& c) {
  return format_combination(PrimeField(c.prime()), c.coeffs(), wedge_labels(c.dim(), Degree));
}

}  // namespace rcoh
