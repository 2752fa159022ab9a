#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rcoh/restricted_cochain.hpp"

namespace rcoh {

/// Thrown when an extension is requested from a cochain that is not a cocycle.
class NotACocycle : public std::invalid_argument {
public:
  explicit NotACocycle(const std::string& what) : std::invalid_argument(what) {}
};

/// g + F c with c appended as the last basis index.
struct ExtensionResult {
  LieAlgebra algebra;
  std::optional<RestrictedStructure> pmap;
  std::string source_cocycle;

  std::size_t central_index() const { return algebra.dim() - 1; }
  /// Throws std::logic_error for ordinary extensions.
  RestrictedAlgebra restricted() const;
};

/// Brackets [x, y] + phi(x ^ y) c, [x, c] = 0. The new generator gets
/// weight max(weights) + 1 as a bookkeeping convention.
ExtensionResult extend_ordinary(const LieAlgebra& a, const Cochain2& phi, std::string label = {});

/// Ordinary extension by c2.phi, with x^[p] = x^[p]_R + omega(x) c on the
/// basis and c^[p] = 0.
ExtensionResult extend_restricted(const RestrictedAlgebra& r, const RestrictedTwoCochain& c2, std::string label = {});

/// True iff phi lies in the image of d1.
bool is_trivial_ordinary_extension(const LieAlgebra& a, const Cochain2& phi);

/// x -> x - psi(x) c is a Lie isomorphism E_{phi + d1 psi} -> E_phi. Checked
/// on all basis pairs.
bool verify_coboundary_shift(const LieAlgebra& a, const Cochain2& phi, const Cochain1& psi);

/// Appends a zero coordinate for c.
Element embed(const Element& x);

}  // namespace rcoh
