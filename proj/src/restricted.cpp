#include "rcoh/restricted.hpp"

#include <stdexcept>

namespace rcoh {

RestrictedAlgebra::RestrictedAlgebra(LieAlgebra algebra, RestrictedStructure pmap, std::optional<Vector> lambda)
    : algebra_(std::move(algebra)), pmap_(std::move(pmap)), lambda_(std::move(lambda)) {
  if (pmap_.basis_p_powers.size() != algebra_.dim())
    throw std::invalid_argument("p-map must give one image per basis element");
  for (auto& v : pmap_.basis_p_powers) {
    if (v.size() != algebra_.dim()) throw std::invalid_argument("p-map image has wrong length");
    for (auto& c : v) c %= algebra_.prime();
  }
  if (lambda_ && lambda_->size() != algebra_.dim()) throw std::invalid_argument("lambda has wrong length");
}

RestrictedAlgebra make_m0_lambda(Residue p, const Vector& lambda) {
  auto algebra = make_m0(p);
  if (lambda.size() != p)
    throw std::invalid_argument("lambda must have exactly " + std::to_string(p) + " entries");
  const PrimeField f(p);
  Vector lam(p);
  for (std::size_t k = 0; k < p; ++k) lam[k] = lambda[k] % p;
  RestrictedStructure pmap;
  for (std::size_t k = 0; k < p; ++k) pmap.basis_p_powers.push_back(f.scaled(lam[k], f.unit(p, p - 1)));
  return RestrictedAlgebra(std::move(algebra), std::move(pmap), lam);
}

bool is_zero_lambda(const Vector& lambda) { return PrimeField::is_zero(lambda); }

Element p_power_closed(const RestrictedAlgebra& r, const Element& g) {
  if (!r.is_m0()) throw std::logic_error("closed-form p-power is defined only for m_0^lambda(p)");
  const PrimeField f = r.algebra().field();
  const auto& lam = *r.lambda();
  const Residue p = r.prime();
  if (g.size() != p) throw std::invalid_argument("element dimension mismatch");
  Residue s = 0;
  for (std::size_t k = 0; k < p; ++k) s = f.add(s, f.mul(f.pow(g[k], p), lam[k]));
  Element out(p, 0);
  out[p - 1] = s;
  return out;
}

Element jacobson_correction(const LieAlgebra& a, const Element& x, const Element& y) {
  const PrimeField f = a.field();
  const std::size_t p = a.prime();
  const std::size_t n = a.dim();
  // poly[d] is the coefficient of t^d in ad(t x + y)^m (x).
  std::vector<Element> poly{x};
  for (std::size_t m = 0; m + 1 < p; ++m) {
    std::vector<Element> next(poly.size() + 1, Element(n, 0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (PrimeField::is_zero(poly[d])) continue;
      f.axpy(1, a.bracket(x, poly[d]), next[d + 1]);
      f.axpy(1, a.bracket(y, poly[d]), next[d]);
    }
    poly = std::move(next);
  }
  Element out(n, 0);
  for (std::size_t i = 1; i < p && i - 1 < poly.size(); ++i)
    f.axpy(f.inv(static_cast<Residue>(i)), poly[i - 1], out);
  return out;
}

PPowerTrace p_power_jacobson_traced(const RestrictedAlgebra& r, const Element& g) {
  const auto& a = r.algebra();
  const PrimeField f = a.field();
  const std::size_t n = a.dim();
  if (g.size() != n) throw std::invalid_argument("element dimension mismatch");
  PPowerTrace out{Element(n, 0), true};
  Element acc(n, 0);
  bool first = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (g[k] == 0) continue;
    const Element term = f.scaled(g[k], a.basis(k));
    f.axpy(f.pow(g[k], a.prime()), r.pmap().basis_p_powers[k], out.value);
    if (!first) {
      const auto corr = jacobson_correction(a, acc, term);
      if (!PrimeField::is_zero(corr)) out.corrections_vanished = false;
      f.axpy(1, corr, out.value);
    }
    f.axpy(1, term, acc);
    first = false;
  }
  return out;
}

Element p_power_jacobson(const RestrictedAlgebra& r, const Element& g) { return p_power_jacobson_traced(r, g).value; }

std::optional<std::size_t> restricted_map_violation(const RestrictedAlgebra& r) {
  const auto& a = r.algebra();
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const auto lhs = ad_matrix(a, r.pmap().basis_p_powers[k]);
    const auto rhs = matrix_power(ad_matrix(a, a.basis(k)), a.prime());
    if (!(lhs == rhs)) return k;
  }
  return std::nullopt;
}

}  // namespace rcoh
