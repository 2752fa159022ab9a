#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcoh/restricted_cochain.hpp"

namespace rcoh {

/// H^q or H^q_* with a labeled representative basis. Vectors are coordinates
/// in C^q (ordinary) or in the flattened C^2_* coordinates (restricted, q = 2).
struct CohomologySummary {
  Residue prime = 0;
  Vector lambda;
  int degree = 0;
  bool restricted = false;
  std::size_t dimension = 0;
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  std::vector<Vector> representatives;
  std::vector<std::string> labels;
  std::vector<Vector> kernel_basis;
  std::vector<Vector> image_basis;
};

/// Dimensions predicted by the closed-form theorems for m_0^lambda(p).
struct ExpectedSummary {
  Residue prime = 0;
  Vector lambda;
  std::size_t h1 = 0, h1_star = 0, h2 = 0, h2_star = 0;
  std::size_t h2_kernel = 0, h2_image = 0, h2_star_kernel = 0, h2_star_image = 0;

  std::size_t dimension(int degree, bool restricted) const;
  /// Expected kernel/image dimension where the theorems pin them down.
  std::optional<std::size_t> kernel_dim(int degree, bool restricted) const;
  std::optional<std::size_t> image_dim(int degree, bool restricted) const;
};

CohomologySummary h1(const LieAlgebra& a);
CohomologySummary h1_star(const RestrictedAlgebra& r);
CohomologySummary h2(const LieAlgebra& a);
CohomologySummary h2_star(const RestrictedAlgebra& r);

ExpectedSummary expected_summary(Residue p, const Vector& lambda);

struct FieldCheck {
  std::string field;
  std::size_t expected = 0;
  std::size_t computed = 0;
  bool pass = false;
};

struct ComparisonReport {
  int degree = 0;
  bool restricted = false;
  std::vector<FieldCheck> checks;
  bool pass() const;
};

/// Field-by-field comparison. Mismatches are reported, never thrown.
ComparisonReport compare(const CohomologySummary& computed, const ExpectedSummary& expected);

/// One row of the dimension table: all four cohomology groups for (p, lambda).
struct DimsRow {
  Residue prime = 0;
  Vector lambda;
  CohomologySummary h1, h1_star, h2, h2_star;
  ExpectedSummary expected;
  std::vector<ComparisonReport> reports;
  bool pass() const;
};

struct DimsCase {
  Residue prime;
  Vector lambda;
};

DimsRow compute_dims_row(Residue p, const Vector& lambda);

/// Rows in input order; cases run concurrently under OpenMP.
std::vector<DimsRow> compute_dims_rows(const std::vector<DimsCase>& cases);
/// Single-threaded reference for compute_dims_rows.
std::vector<DimsRow> compute_dims_rows_serial(const std::vector<DimsCase>& cases);

/// Distinguished cocycles of m_0(p) in the order used for representative
/// selection: e^{1,p}, phi_5, phi_7, ..., phi_{p+2}.
std::vector<Cochain2> distinguished_cocycles(Residue p);

}  // namespace rcoh
