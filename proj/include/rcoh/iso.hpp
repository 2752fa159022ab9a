#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rcoh/field.hpp"

namespace rcoh {

/// Diagonal graded map e_1 -> mu1 e_1, e_2 -> mu2 e_2, e_k -> mu2 mu1^{k-2} e_k.
struct IsoWitness {
  Residue mu1 = 1;
  Residue mu2 = 1;

  bool operator==(const IsoWitness&) const = default;
};

class SearchLimitExceeded : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr Residue kIsoSearchLimit = 31;

/// mu_1, ..., mu_p (0-based vector).
Vector scale_factors(Residue p, Residue mu1, Residue mu2);

/// lambda_k mu_p == mu_k^p lambda'_k for every k. Throws std::invalid_argument
/// if mu1 or mu2 is zero.
bool diag_iso_check(Residue p, const Vector& lambda, const Vector& lambda_prime, Residue mu1, Residue mu2);

/// lambda with lambda_k = mu_k^p mu_p^{-1} lambda'_k, so that the diagonal map
/// for (mu1, mu2) is an isomorphism m_0^lambda(p) -> m_0^lambda'(p).
Vector transform_lambda(Residue p, const Vector& lambda_prime, Residue mu1, Residue mu2);

/// First witness in lexicographic (mu1, mu2) order, or nullopt after the full
/// (p-1)^2 search. Throws SearchLimitExceeded for p > 31.
std::optional<IsoWitness> iso_bruteforce(Residue p, const Vector& lambda, const Vector& lambda_prime);

/// Conditions as written in the classification statement: lambda_1 = mu1 lambda'_1,
/// lambda_2 = mu2 lambda'_2, lambda_k = mu2^{p-1} mu1^{p(k-3)+2} lambda'_k (k >= 3).
bool statement_conditions_hold(Residue p, const Vector& lambda, const Vector& lambda_prime, Residue mu1, Residue mu2);

struct PropositionReport {
  std::optional<IsoWitness> statement_witness;
  std::optional<IsoWitness> bruteforce_witness;
  bool agree() const { return statement_witness.has_value() == bruteforce_witness.has_value(); }
};

PropositionReport proposition_formula_check(Residue p, const Vector& lambda, const Vector& lambda_prime);

/// Partition of `lambdas` into isomorphism classes (first-occurrence order).
/// The pairwise table is filled in parallel.
std::vector<std::vector<Vector>> iso_classes(Residue p, const std::vector<Vector>& lambdas);

/// Pairwise verdict table; entry [i][j] is true iff lambdas[i] ~ lambdas[j].
std::vector<std::vector<bool>> iso_table(Residue p, const std::vector<Vector>& lambdas);

}  // namespace rcoh
