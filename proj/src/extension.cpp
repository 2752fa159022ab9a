#include "rcoh/extension.hpp"

#include <algorithm>

namespace rcoh {
namespace {

std::string triple_text(const std::vector<std::size_t>& t) {
  return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")";
}

void require_cocycle(const LieAlgebra& a, const Cochain2& phi) {
  const auto img = d2(a, phi);
  const auto b = img.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (img.coeffs()[i])
      throw NotACocycle("d2(phi) != 0; nonzero on basis triple " + triple_text(b.tuple(i)));
}

}  // namespace

Element embed(const Element& x) {
  Element out = x;
  out.push_back(0);
  return out;
}

RestrictedAlgebra ExtensionResult::restricted() const {
  if (!pmap) throw std::logic_error("extension carries no p-map");
  return RestrictedAlgebra(algebra, *pmap);
}

ExtensionResult extend_ordinary(const LieAlgebra& a, const Cochain2& phi, std::string label) {
  if (phi.dim() != a.dim() || phi.prime() != a.prime()) throw std::invalid_argument("cochain does not match algebra");
  require_cocycle(a, phi);
  const std::size_t n = a.dim();
  std::map<LieAlgebra::Pair, Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = embed(a.structure(i, j));
      v[n] = phi.at({i, j});
      if (!PrimeField::is_zero(v)) brackets.emplace(LieAlgebra::Pair{i, j}, std::move(v));
    }
  auto weights = a.weights();
  weights.push_back(weights.empty() ? 1 : *std::max_element(weights.begin(), weights.end()) + 1);
  auto labels = a.labels();
  labels.push_back("c");
  if (label.empty()) label = format_cochain(phi);
  return {LieAlgebra(a.prime(), n + 1, std::move(brackets), std::move(weights), std::move(labels)), std::nullopt,
          std::move(label)};
}

ExtensionResult extend_restricted(const RestrictedAlgebra& r, const RestrictedTwoCochain& c2, std::string label) {
  const auto& a = r.algebra();
  if (c2.omega_basis.size() != a.dim()) throw std::invalid_argument("omega has wrong length");
  require_cocycle(a, c2.phi);
  const auto pairs = ind2(r, c2.phi);
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (pairs(j, i))
        throw NotACocycle("ind2(phi) != 0 at basis pair (e_" + std::to_string(j + 1) + ", e_" + std::to_string(i + 1) +
                          ")");
  if (label.empty()) label = format_restricted(c2);
  auto ext = extend_ordinary(a, c2.phi, label);
  RestrictedStructure pmap;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Element v = embed(r.pmap().basis_p_powers[k]);
    v.back() = c2.omega_basis[k] % a.prime();
    pmap.basis_p_powers.push_back(std::move(v));
  }
  pmap.basis_p_powers.push_back(Element(a.dim() + 1, 0));
  ext.pmap = std::move(pmap);
  return ext;
}

bool is_trivial_ordinary_extension(const LieAlgebra& a, const Cochain2& phi) {
  const auto m = d1_matrix(a);
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return linalg::in_span(a.prime(), cols, phi.coeffs());
}

bool verify_coboundary_shift(const LieAlgebra& a, const Cochain2& phi, const Cochain1& psi) {
  const PrimeField f = a.field();
  const auto shifted_phi = Cochain2(a.prime(), a.dim(), f.sum(phi.coeffs(), d1(a, psi).coeffs()));
  const auto source = extend_ordinary(a, shifted_phi).algebra;
  const auto target = extend_ordinary(a, phi).algebra;
  const std::size_t n = a.dim();
  auto map = [&](const Element& x) {
    Element y = x;
    Element head(x.begin(), x.end() - 1);
    y[n] = f.sub(y[n], evaluate(psi, head));
    return y;
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto lhs = map(source.bracket(source.basis(i), source.basis(j)));
      const auto rhs = target.bracket(map(source.basis(i)), map(source.basis(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace rcoh
