#include "rcoh/cohomology.hpp"

#include <exception>
#include <stdexcept>

namespace rcoh {
namespace {

bool is_m0_shaped(const LieAlgebra& a) { return a.dim() == a.prime() && a == make_m0(a.prime()); }

std::vector<Vector> column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return linalg::canonical_basis(m.modulus(), m.rows(), cols);
}

// Representatives: candidates lying in the kernel come first, then the
// computed kernel basis; greedy completion of the image.
std::vector<Vector> select_representatives(const Matrix& differential, const std::vector<Vector>& candidates,
                                           const std::vector<Vector>& kernel, const std::vector<Vector>& image) {
  std::vector<Vector> whole;
  for (const auto& c : candidates)
    if (PrimeField::is_zero(differential.apply(c))) whole.push_back(c);
  whole.insert(whole.end(), kernel.begin(), kernel.end());
  return linalg::complement_basis(differential.modulus(), image, whole);
}

CohomologySummary assemble(Residue p, Vector lambda, int degree, bool restricted, const Matrix& differential,
                           const std::vector<Vector>& image, const std::vector<Vector>& candidates) {
  CohomologySummary s;
  s.prime = p;
  s.lambda = std::move(lambda);
  s.degree = degree;
  s.restricted = restricted;
  s.kernel_basis = linalg::kernel_basis(differential);
  s.image_basis = image;
  s.kernel_dim = s.kernel_basis.size();
  s.image_dim = image.size();
  s.representatives = select_representatives(differential, candidates, s.kernel_basis, image);
  s.dimension = s.representatives.size();
  if (s.dimension + s.image_dim != s.kernel_dim) throw std::logic_error("representative count inconsistent with kernel/image");
  return s;
}

std::vector<Vector> unit_vectors(Residue p, std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(PrimeField(p).unit(n, k));
  return out;
}

}  // namespace

std::vector<Cochain2> distinguished_cocycles(Residue p) {
  std::vector<Cochain2> out;
  if (p < 2) return out;
  Cochain2 first(p, p);
  first.add({0, p - 1}, 1);
  out.push_back(first);
  for (int k = 5; k <= static_cast<int>(p) + 2; k += 2) out.push_back(phi_k(p, k));
  return out;
}

CohomologySummary h1(const LieAlgebra& a) {
  const auto m = d1_matrix(a);
  auto s = assemble(a.prime(), {}, 1, false, m, {}, unit_vectors(a.prime(), a.dim()));
  for (const auto& v : s.representatives) s.labels.push_back(format_cochain(Cochain1(a.prime(), a.dim(), v)));
  return s;
}

CohomologySummary h1_star(const RestrictedAlgebra& r) {
  const auto m = d1_star_matrix(r);
  auto s = assemble(r.prime(), r.lambda().value_or(Vector{}), 1, true, m, {}, unit_vectors(r.prime(), r.dim()));
  for (const auto& v : s.representatives) s.labels.push_back(format_cochain(Cochain1(r.prime(), r.dim(), v)));
  return s;
}

CohomologySummary h2(const LieAlgebra& a) {
  const auto m = d2_matrix(a);
  std::vector<Vector> candidates;
  if (is_m0_shaped(a))
    for (const auto& c : distinguished_cocycles(a.prime())) candidates.push_back(c.coeffs());
  auto s = assemble(a.prime(), {}, 2, false, m, column_space(d1_matrix(a)), candidates);
  for (const auto& v : s.representatives) s.labels.push_back(format_cochain(Cochain2(a.prime(), a.dim(), v)));
  return s;
}

CohomologySummary h2_star(const RestrictedAlgebra& r) {
  const auto m = d2_star_matrix(r);
  const Residue p = r.prime();
  const std::size_t n = r.dim();
  std::vector<Vector> candidates;
  if (is_m0_shaped(r.algebra())) {
    for (std::size_t k = 0; k < n; ++k) candidates.push_back(to_coordinates(ebar(p, n, k)));
    for (const auto& c : distinguished_cocycles(p)) candidates.push_back(to_coordinates(with_tilde(c)));
  }
  auto s = assemble(p, r.lambda().value_or(Vector{}), 2, true, m, column_space(d1_star_matrix(r)), candidates);
  for (const auto& v : s.representatives) s.labels.push_back(format_restricted(from_coordinates(p, n, v)));
  return s;
}

std::size_t ExpectedSummary::dimension(int degree, bool restricted) const {
  if (degree == 1) return restricted ? h1_star : h1;
  if (degree == 2) return restricted ? h2_star : h2;
  throw std::invalid_argument("only degrees 1 and 2 are tabulated");
}

std::optional<std::size_t> ExpectedSummary::kernel_dim(int degree, bool restricted) const {
  if (degree == 1) return dimension(1, restricted);
  if (degree == 2) return restricted ? h2_star_kernel : h2_kernel;
  return std::nullopt;
}

std::optional<std::size_t> ExpectedSummary::image_dim(int degree, bool restricted) const {
  if (degree == 1) return 0;
  if (degree == 2) return restricted ? h2_star_image : h2_image;
  return std::nullopt;
}

ExpectedSummary expected_summary(Residue p, const Vector& lambda) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (lambda.size() != p) throw std::invalid_argument("lambda must have p entries");
  ExpectedSummary e;
  e.prime = p;
  e.lambda = lambda;
  const bool zero = is_zero_lambda(lambda);
  e.h1 = 2;
  if (p == 2) {
    e.h1_star = zero ? 2 : 1;
    e.h2 = 1;
    e.h2_kernel = 1;
    e.h2_image = 0;
    e.h2_star = zero ? 3 : 1;
    e.h2_star_kernel = zero ? 3 : 2;
    e.h2_star_image = zero ? 0 : 1;
    return e;
  }
  e.h1_star = 2;
  e.h2 = (p + 1) / 2;
  e.h2_kernel = (3 * p - 3) / 2;
  e.h2_image = p - 2;
  e.h2_star = zero ? (3 * p + 1) / 2 : (3 * p - 3) / 2;
  e.h2_star_kernel = zero ? (5 * p - 3) / 2 : (5 * p - 7) / 2;
  e.h2_star_image = p - 2;
  return e;
}

bool ComparisonReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ComparisonReport compare(const CohomologySummary& computed, const ExpectedSummary& expected) {
  ComparisonReport r;
  r.degree = computed.degree;
  r.restricted = computed.restricted;
  auto add = [&](const std::string& name, std::size_t exp, std::size_t got) {
    r.checks.push_back({name, exp, got, exp == got});
  };
  add("dim", expected.dimension(computed.degree, computed.restricted), computed.dimension);
  if (auto k = expected.kernel_dim(computed.degree, computed.restricted)) add("kernel_dim", *k, computed.kernel_dim);
  if (auto i = expected.image_dim(computed.degree, computed.restricted)) add("image_dim", *i, computed.image_dim);
  return r;
}

bool DimsRow::pass() const {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

DimsRow compute_dims_row(Residue p, const Vector& lambda) {
  const auto r = make_m0_lambda(p, lambda);
  DimsRow row;
  row.prime = p;
  row.lambda = *r.lambda();
  row.h1 = h1(r.algebra());
  row.h1.lambda = row.lambda;
  row.h1_star = h1_star(r);
  row.h2 = h2(r.algebra());
  row.h2.lambda = row.lambda;
  row.h2_star = h2_star(r);
  row.expected = expected_summary(p, row.lambda);
  for (const auto* s : {&row.h1, &row.h1_star, &row.h2, &row.h2_star}) row.reports.push_back(compare(*s, row.expected));
  return row;
}

std::vector<DimsRow> compute_dims_rows_serial(const std::vector<DimsCase>& cases) {
  std::vector<DimsRow> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(compute_dims_row(c.prime, c.lambda));
  return out;
}

std::vector<DimsRow> compute_dims_rows(const std::vector<DimsCase>& cases) {
  std::vector<DimsRow> out(cases.size());
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = compute_dims_row(cases[static_cast<std::size_t>(i)].prime,
                                                          cases[static_cast<std::size_t>(i)].lambda);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace rcoh
