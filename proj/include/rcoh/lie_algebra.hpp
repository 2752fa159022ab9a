#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcoh/field.hpp"
#include "rcoh/linalg.hpp"

namespace rcoh {

/// Element of a Lie algebra: coefficients on the basis e_1..e_n.
using Element = Vector;

/// Finite-dimensional Lie algebra over GF(p) given by structure constants.
///
/// Indices are 0-based internally; e_1 is index 0. Only pairs i < j are
/// stored; [e_j, e_i] = -[e_i, e_j] and [e_i, e_i] = 0 are applied on access.
class LieAlgebra {
public:
  using Pair = std::pair<std::size_t, std::size_t>;

  /// Throws std::invalid_argument on malformed input (non-prime modulus,
  /// i >= j, index out of range, coefficient vector of the wrong length).
  LieAlgebra(Residue prime, std::size_t dim, std::map<Pair, Vector> brackets, std::vector<int> weights,
             std::vector<std::string> labels = {});

  Residue prime() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  std::size_t dim() const { return dim_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Nonzero structure constants on pairs i < j.
  const std::map<Pair, Vector>& brackets() const { return brackets_; }

  /// [e_i, e_j] with antisymmetry applied.
  Vector structure(std::size_t i, std::size_t j) const;

  Element bracket(const Element& g, const Element& h) const;
  Element basis(std::size_t k) const { return field().unit(dim_, k); }

  /// True when every nonzero c_{ij}^k has weights[k] == weights[i] + weights[j].
  bool is_graded() const;

  bool operator==(const LieAlgebra& o) const {
    return p_ == o.p_ && dim_ == o.dim_ && brackets_ == o.brackets_ && weights_ == o.weights_;
  }

private:
  struct Term {
    std::size_t i, j, k;
    Residue c;
  };

  Residue p_;
  std::size_t dim_;
  std::map<Pair, Vector> brackets_;
  std::vector<int> weights_;
  std::vector<std::string> labels_;
  std::vector<Term> terms_;
};

/// The filiform algebra m_0(p): [e_1, e_i] = e_{i+1} for 1 < i < p, weight of e_k is k.
LieAlgebra make_m0(Residue p);

/// [[...[g_1, g_2], g_3], ..., g_j]. Throws std::invalid_argument for fewer than two entries.
Element left_normed_bracket(const LieAlgebra& a, const std::vector<Element>& gs);

/// Matrix of h -> [g, h]; column j is [g, e_j].
Matrix ad_matrix(const LieAlgebra& a, const Element& g);

Matrix matrix_power(const Matrix& m, std::uint64_t e);

/// First basis triple (i < j < k) violating the Jacobi identity, if any.
std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& a);

/// Basis of the center, computed as the kernel of h -> ([h, e_1], ..., [h, e_n]).
std::vector<Element> center(const LieAlgebra& a);

}  // namespace rcoh
