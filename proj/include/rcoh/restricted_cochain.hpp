#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rcoh/cochain.hpp"
#include "rcoh/restricted.hpp"

namespace rcoh {

/// (phi, omega): omega is stored by its values on e_1..e_n and extended to
/// arbitrary elements through the *-property with respect to phi.
struct RestrictedTwoCochain {
  Cochain2 phi;
  Vector omega_basis;

  bool operator==(const RestrictedTwoCochain&) const = default;
};

/// (alpha, beta): beta_pairs(i, j) = beta(e_i, e_j).
struct RestrictedThreeCochain {
  Cochain3 alpha;
  Matrix beta_pairs;

  bool operator==(const RestrictedThreeCochain&) const = default;
};

/// (0, ē^k).
RestrictedTwoCochain ebar(Residue p, std::size_t dim, std::size_t k);
/// (phi, phi~): omega vanishes on the basis.
RestrictedTwoCochain with_tilde(const Cochain2& phi);

/// Sequences g_1..g_p over {x, y} with g_1 = x, g_2 = y, weighted by
/// 1/#(x), grouped by the last factor:
///   sum_seq (1/#x) [g_1, ..., g_{p-1}] ^ g_p  =  ending_x ^ x + ending_y ^ y.
struct SequenceSum {
  Element ending_x;
  Element ending_y;
};

/// Dynamic programme over (position, number of x factors so far).
SequenceSum sequence_sum(const LieAlgebra& a, const Element& x, const Element& y);

/// Direct enumeration of all 2^{p-2} sequences. Reference for sequence_sum.
SequenceSum sequence_sum_naive(const LieAlgebra& a, const Element& x, const Element& y);

/// sum_seq (1/#x) phi([g_1, ..., g_{p-1}] ^ g_p), the correction in the *-property.
Residue star_correction(const LieAlgebra& a, const Cochain2& phi, const Element& x, const Element& y);

/// omega(g): basis terms are split off in index order, omega(alpha e_k) =
/// alpha^p omega_k, and each addition contributes the *-correction.
Residue star_eval(const LieAlgebra& a, const RestrictedTwoCochain& c, const Element& g);

/// omega(x) + omega(y) + correction(x, y), i.e. omega(x + y) evaluated by
/// splitting at the given point instead of at basis terms.
Residue star_eval_split(const LieAlgebra& a, const RestrictedTwoCochain& c, const Element& x, const Element& y);

using OmegaFn = std::function<Residue(const Element&)>;
using BetaFn = std::function<Residue(const Element&, const Element&)>;

/// Both sides of the *-property at (g, h) for an omega given as a function.
bool star_property_holds(const LieAlgebra& a, const Cochain2& phi, const OmegaFn& omega, const Element& g,
                         const Element& h);
bool star_property_holds(const LieAlgebra& a, const RestrictedTwoCochain& c, const Element& g, const Element& h);

/// ind^1(psi) on the basis: omega_k = psi(e_k^[p]).
Vector ind1(const RestrictedAlgebra& r, const Cochain1& psi);
/// psi(g^[p]) with the general p-power.
Residue ind1_eval(const RestrictedAlgebra& r, const Cochain1& psi, const Element& g);
/// mu_p (sum_j alpha_j^p lambda_j), m_0^lambda(p) only.
Residue ind1_closed(const RestrictedAlgebra& r, const Cochain1& psi, const Element& g);

/// ind^2(phi) on basis pairs: entry (j, i) = phi(e_j ^ e_i^[p]).
Matrix ind2(const RestrictedAlgebra& r, const Cochain2& phi);
/// phi(g ^ h^[p]) with the general p-power.
Residue ind2_eval(const RestrictedAlgebra& r, const Cochain2& phi, const Element& g, const Element& h);
/// (sum_i beta_i^p lambda_i)(sum_{j<p} alpha_j sigma_{jp}), m_0^lambda(p) only.
Residue ind2_closed(const RestrictedAlgebra& r, const Cochain2& phi, const Element& g, const Element& h);

RestrictedTwoCochain d1_star(const RestrictedAlgebra& r, const Cochain1& psi);
/// Depends on c.phi only.
RestrictedThreeCochain d2_star(const RestrictedAlgebra& r, const RestrictedTwoCochain& c);

/// sum_seq (1/#{l_i = 1}) alpha(g ^ [h_{l_1}, ..., h_{l_{p-1}}] ^ h_{l_p}).
Residue doublestar_correction(const LieAlgebra& a, const Cochain3& alpha, const Element& g, const Element& h1,
                              const Element& h2);

/// beta(g, h): linear in g; in h, basis terms are split off with the
/// **-recursion and beta(e_i, t e_k) = t^p beta(e_i, e_k).
Residue beta_eval(const LieAlgebra& a, const RestrictedThreeCochain& rc3, const Element& g, const Element& h);

bool doublestar_property_holds(const LieAlgebra& a, const Cochain3& alpha, const BetaFn& beta, const Element& g,
                               const Element& h1, const Element& h2);
bool doublestar_property_holds(const LieAlgebra& a, const RestrictedThreeCochain& rc3, const Element& g,
                               const Element& h1, const Element& h2);

/// On m_0(p), omega extends consistently through the *-property only when
/// sigma_{i,p} = 0 for 3 <= i < p. Always true for p <= 3.
bool star_admissible_m0(const Cochain2& phi);
/// Basis (as cochains) of the admissible subspace of C^2(m_0(p)).
std::vector<Cochain2> star_admissible_basis_m0(Residue p);

/// C^2_* coordinates: the sigma coordinates followed by the omega basis values.
Vector to_coordinates(const RestrictedTwoCochain& c);
RestrictedTwoCochain from_coordinates(Residue p, std::size_t dim, const Vector& coords);

/// d1_* as a matrix C^1 -> C^2_* in the coordinates above.
Matrix d1_star_matrix(const RestrictedAlgebra& r);
/// d2_* as a matrix from C^2_* coordinates to (C^3 coordinates, ind^2 basis-pair values).
Matrix d2_star_matrix(const RestrictedAlgebra& r);

/// "(e^{2,5} - e^{3,4}, ẽ^{2,5} - ẽ^{3,4})", "(0, ē^1)".
std::string format_restricted(const RestrictedTwoCochain& c);

}  // namespace rcoh
