#pragma once

#include <optional>
#include <vector>

#include "rcoh/lie_algebra.hpp"

namespace rcoh {

/// The [p]-operator on a basis: basis_p_powers[k] = e_k^[p].
struct RestrictedStructure {
  std::vector<Element> basis_p_powers;

  bool operator==(const RestrictedStructure&) const = default;
};

/// A Lie algebra with a [p]-operator. For m_0^lambda(p) the defining vector
/// lambda is kept so the closed-form p-map is available.
class RestrictedAlgebra {
public:
  RestrictedAlgebra(LieAlgebra algebra, RestrictedStructure pmap, std::optional<Vector> lambda = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  const RestrictedStructure& pmap() const { return pmap_; }
  Residue prime() const { return algebra_.prime(); }
  std::size_t dim() const { return algebra_.dim(); }
  /// Present only for m_0^lambda(p) built by make_m0_lambda.
  const std::optional<Vector>& lambda() const { return lambda_; }
  bool is_m0() const { return lambda_.has_value(); }

  bool operator==(const RestrictedAlgebra&) const = default;

private:
  LieAlgebra algebra_;
  RestrictedStructure pmap_;
  std::optional<Vector> lambda_;
};

/// m_0(p) with e_k^[p] = lambda_k e_p. Throws if lambda.size() != p.
RestrictedAlgebra make_m0_lambda(Residue p, const Vector& lambda);

bool is_zero_lambda(const Vector& lambda);

/// g^[p] = (sum_k alpha_k^p lambda_k) e_p. Only valid for m_0^lambda(p);
/// throws std::logic_error otherwise.
Element p_power_closed(const RestrictedAlgebra& r, const Element& g);

/// sum_{i=1}^{p-1} s_i(a, b), where i s_i(a, b) is the coefficient of
/// t^{i-1} in ad(t a + b)^{p-1}(a).
Element jacobson_correction(const LieAlgebra& a, const Element& x, const Element& y);

struct PPowerTrace {
  Element value;
  bool corrections_vanished = true;
};

/// g^[p] for any restricted algebra: g is split into basis terms,
/// (alpha e_k)^[p] = alpha^p e_k^[p], and terms are combined with the
/// Jacobson correction.
PPowerTrace p_power_jacobson_traced(const RestrictedAlgebra& r, const Element& g);
Element p_power_jacobson(const RestrictedAlgebra& r, const Element& g);

/// First basis index k with ad(e_k^[p]) != (ad e_k)^p, if any.
std::optional<std::size_t> restricted_map_violation(const RestrictedAlgebra& r);

}  // namespace rcoh
