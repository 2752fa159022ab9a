#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcoh/cohomology.hpp"

namespace rcoh {

/// d1 of m_0(p) written down directly: d1(e^{k+1}) = e^{1,k} for 2 <= k < p.
Matrix d1_matrix_closed_m0(Residue p);

/// d2 of m_0(p) written down directly, column e^{i,j} for i < j:
///   corrected:  e^{1,i-1,j} (i >= 3) + e^{1,i,j-1} (j - 1 > i)
///   as printed: e^{1,i-1,j} + e^{1,i,j-i}
/// Both vanish on columns with i = 1.
Matrix d2_matrix_closed_m0(Residue p, bool as_printed = false);

/// Columns e^{i,j} on which the printed and the generic d2 differ, 1-based.
std::vector<std::pair<std::size_t, std::size_t>> d2_printed_mismatches(Residue p);

struct CheckLine {
  enum class Status { Pass, Fail, Info };
  Status status = Status::Pass;
  std::string name;
  std::string detail;
};

struct VerifyReport {
  Residue prime = 0;
  std::uint64_t seed = 0;
  std::size_t lambda_count = 0;
  std::vector<CheckLine> lines;

  bool pass() const;
};

/// Runs the invariant suite on m_0^lambda(p) for every lambda given. Randomized
/// checks draw `samples` arguments per lambda from an Rng seeded with `seed`.
VerifyReport run_verification(Residue p, const std::vector<Vector>& lambdas, std::uint64_t seed,
                              std::size_t samples = 20);

/// Bracket and p-power table of the extension of m_0^lambda(p) by (0, ē^k),
/// built from the formulas rather than from extend_restricted. k is 0-based.
RestrictedAlgebra expected_ebar_extension(Residue p, const Vector& lambda, std::size_t k);

}  // namespace rcoh
