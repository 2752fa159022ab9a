#include "rcoh/restricted_cochain.hpp"

#include <stdexcept>

namespace rcoh {

RestrictedTwoCochain ebar(Residue p, std::size_t dim, std::size_t k) {
  return {Cochain2(p, dim), PrimeField(p).unit(dim, k)};
}

RestrictedTwoCochain with_tilde(const Cochain2& phi) { return {phi, Vector(phi.dim(), 0)}; }

SequenceSum sequence_sum(const LieAlgebra& a, const Element& x, const Element& y) {
  const PrimeField f = a.field();
  const std::size_t p = a.prime();
  const std::size_t n = a.dim();
  SequenceSum out{Element(n, 0), Element(n, 0)};
  if (p == 2) {
    // (g_1, g_2) = (x, y): the bracket part is g_1 alone.
    out.ending_y = x;
    return out;
  }
  // by_count[c]: sum of [g_1, ..., g_m] over prefixes with c factors equal to x.
  std::vector<Element> by_count(p + 1, Element(n, 0));
  by_count[1] = a.bracket(x, y);
  for (std::size_t pos = 3; pos + 1 <= p; ++pos) {
    std::vector<Element> next(p + 1, Element(n, 0));
    for (std::size_t c = 1; c < pos; ++c) {
      if (PrimeField::is_zero(by_count[c])) continue;
      f.axpy(1, a.bracket(by_count[c], x), next[c + 1]);
      f.axpy(1, a.bracket(by_count[c], y), next[c]);
    }
    by_count = std::move(next);
  }
  for (std::size_t c = 1; c + 1 < p; ++c) {
    if (PrimeField::is_zero(by_count[c])) continue;
    f.axpy(f.inv(static_cast<Residue>(c + 1)), by_count[c], out.ending_x);
    f.axpy(f.inv(static_cast<Residue>(c)), by_count[c], out.ending_y);
  }
  return out;
}

SequenceSum sequence_sum_naive(const LieAlgebra& a, const Element& x, const Element& y) {
  const PrimeField f = a.field();
  const std::size_t p = a.prime();
  const std::size_t n = a.dim();
  if (p > 23) throw std::invalid_argument("naive sequence enumeration is limited to p <= 23");
  SequenceSum out{Element(n, 0), Element(n, 0)};
  const std::size_t free_positions = p - 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_positions); ++mask) {
    std::vector<Element> seq{x, y};
    std::size_t count_x = 1;
    for (std::size_t b = 0; b < free_positions; ++b) {
      const bool is_x = ((mask >> b) & 1) == 0;
      seq.push_back(is_x ? x : y);
      count_x += is_x ? 1 : 0;
    }
    const std::vector<Element> head(seq.begin(), seq.end() - 1);
    const Element v = head.size() == 1 ? head.front() : left_normed_bracket(a, head);
    const bool last_is_x = p > 2 && ((mask >> (free_positions - 1)) & 1) == 0;
    f.axpy(f.inv(static_cast<Residue>(count_x)), v, last_is_x ? out.ending_x : out.ending_y);
  }
  return out;
}

Residue star_correction(const LieAlgebra& a, const Cochain2& phi, const Element& x, const Element& y) {
  const PrimeField f = a.field();
  const auto s = sequence_sum(a, x, y);
  return f.add(evaluate(phi, s.ending_x, x), evaluate(phi, s.ending_y, y));
}

Residue star_eval(const LieAlgebra& a, const RestrictedTwoCochain& c, const Element& g) {
  const PrimeField f = a.field();
  const std::size_t n = a.dim();
  if (g.size() != n || c.omega_basis.size() != n) throw std::invalid_argument("dimension mismatch in star_eval");
  Residue value = 0;
  Element acc(n, 0);
  bool first = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (!g[k]) continue;
    const Element term = f.scaled(g[k], a.basis(k));
    value = f.add(value, f.mul(f.pow(g[k], a.prime()), c.omega_basis[k]));
    if (!first) value = f.add(value, star_correction(a, c.phi, acc, term));
    f.axpy(1, term, acc);
    first = false;
  }
  return value;
}

Residue star_eval_split(const LieAlgebra& a, const RestrictedTwoCochain& c, const Element& x, const Element& y) {
  const PrimeField f = a.field();
  return f.add(f.add(star_eval(a, c, x), star_eval(a, c, y)), star_correction(a, c.phi, x, y));
}

bool star_property_holds(const LieAlgebra& a, const Cochain2& phi, const OmegaFn& omega, const Element& g,
                         const Element& h) {
  const PrimeField f = a.field();
  const Residue lhs = omega(f.sum(g, h));
  const Residue rhs = f.add(f.add(omega(g), omega(h)), star_correction(a, phi, g, h));
  return lhs == rhs;
}

bool star_property_holds(const LieAlgebra& a, const RestrictedTwoCochain& c, const Element& g, const Element& h) {
  return star_property_holds(
      a, c.phi, [&](const Element& x) { return star_eval(a, c, x); }, g, h);
}

Vector ind1(const RestrictedAlgebra& r, const Cochain1& psi) {
  Vector out(r.dim());
  for (std::size_t k = 0; k < r.dim(); ++k) out[k] = evaluate(psi, r.pmap().basis_p_powers[k]);
  return out;
}

Residue ind1_eval(const RestrictedAlgebra& r, const Cochain1& psi, const Element& g) {
  return evaluate(psi, p_power_jacobson(r, g));
}

Residue ind1_closed(const RestrictedAlgebra& r, const Cochain1& psi, const Element& g) {
  if (!r.is_m0()) throw std::logic_error("closed-form ind1 is defined only for m_0^lambda(p)");
  const PrimeField f = r.algebra().field();
  const auto& lam = *r.lambda();
  const Residue p = r.prime();
  Residue s = 0;
  for (std::size_t j = 0; j < p; ++j) s = f.add(s, f.mul(f.pow(g[j], p), lam[j]));
  return f.mul(psi.coeffs()[p - 1], s);
}

Matrix ind2(const RestrictedAlgebra& r, const Cochain2& phi) {
  const std::size_t n = r.dim();
  Matrix m(r.prime(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(j, i) = evaluate(phi, r.algebra().basis(j), r.pmap().basis_p_powers[i]);
  return m;
}

Residue ind2_eval(const RestrictedAlgebra& r, const Cochain2& phi, const Element& g, const Element& h) {
  return evaluate(phi, g, p_power_jacobson(r, h));
}

Residue ind2_closed(const RestrictedAlgebra& r, const Cochain2& phi, const Element& g, const Element& h) {
  if (!r.is_m0()) throw std::logic_error("closed-form ind2 is defined only for m_0^lambda(p)");
  const PrimeField f = r.algebra().field();
  const auto& lam = *r.lambda();
  const Residue p = r.prime();
  Residue left = 0;
  for (std::size_t i = 0; i < p; ++i) left = f.add(left, f.mul(f.pow(h[i], p), lam[i]));
  Residue right = 0;
  for (std::size_t j = 0; j + 1 < p; ++j) right = f.add(right, f.mul(g[j], phi.at({j, p - 1})));
  return f.mul(left, right);
}

RestrictedTwoCochain d1_star(const RestrictedAlgebra& r, const Cochain1& psi) {
  return {d1(r.algebra(), psi), ind1(r, psi)};
}

RestrictedThreeCochain d2_star(const RestrictedAlgebra& r, const RestrictedTwoCochain& c) {
  return {d2(r.algebra(), c.phi), ind2(r, c.phi)};
}

Residue doublestar_correction(const LieAlgebra& a, const Cochain3& alpha, const Element& g, const Element& h1,
                              const Element& h2) {
  const PrimeField f = a.field();
  const auto s = sequence_sum(a, h1, h2);
  return f.add(evaluate(alpha, g, s.ending_x, h1), evaluate(alpha, g, s.ending_y, h2));
}

Residue beta_eval(const LieAlgebra& a, const RestrictedThreeCochain& rc3, const Element& g, const Element& h) {
  const PrimeField f = a.field();
  const std::size_t n = a.dim();
  Residue total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i]) continue;
    const Element ei = a.basis(i);
    Residue value = 0;
    Element acc(n, 0);
    bool first = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (!h[k]) continue;
      const Element term = f.scaled(h[k], a.basis(k));
      value = f.add(value, f.mul(f.pow(h[k], a.prime()), rc3.beta_pairs(i, k)));
      if (!first) value = f.sub(value, doublestar_correction(a, rc3.alpha, ei, acc, term));
      f.axpy(1, term, acc);
      first = false;
    }
    total = f.add(total, f.mul(g[i], value));
  }
  return total;
}

bool doublestar_property_holds(const LieAlgebra& a, const Cochain3& alpha, const BetaFn& beta, const Element& g,
                               const Element& h1, const Element& h2) {
  const PrimeField f = a.field();
  const Residue lhs = beta(g, f.sum(h1, h2));
  const Residue rhs = f.sub(f.add(beta(g, h1), beta(g, h2)), doublestar_correction(a, alpha, g, h1, h2));
  return lhs == rhs;
}

bool doublestar_property_holds(const LieAlgebra& a, const RestrictedThreeCochain& rc3, const Element& g,
                               const Element& h1, const Element& h2) {
  return doublestar_property_holds(
      a, rc3.alpha, [&](const Element& x, const Element& y) { return beta_eval(a, rc3, x, y); }, g, h1, h2);
}

bool star_admissible_m0(const Cochain2& phi) {
  const std::size_t p = phi.prime();
  if (phi.dim() != p) throw std::invalid_argument("star_admissible_m0 expects a cochain on m_0(p)");
  for (std::size_t i = 2; i + 1 < p; ++i)
    if (phi.at({i, p - 1})) return false;
  return true;
}

std::vector<Cochain2> star_admissible_basis_m0(Residue p) {
  std::vector<Cochain2> out;
  const WedgeBasis pairs(p, 2);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& t = pairs.tuple(idx);
    if (t[1] == p - 1 && t[0] >= 2) continue;
    Cochain2 c(p, p);
    c.add({t[0], t[1]}, 1);
    out.push_back(c);
  }
  return out;
}

Vector to_coordinates(const RestrictedTwoCochain& c) {
  Vector out = c.phi.coeffs();
  out.insert(out.end(), c.omega_basis.begin(), c.omega_basis.end());
  return out;
}

RestrictedTwoCochain from_coordinates(Residue p, std::size_t dim, const Vector& coords) {
  const std::size_t npairs = binomial(dim, 2);
  if (coords.size() != npairs + dim) throw std::invalid_argument("restricted cochain coordinate count mismatch");
  return {Cochain2(p, dim, Vector(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(npairs))),
          Vector(coords.begin() + static_cast<std::ptrdiff_t>(npairs), coords.end())};
}

Matrix d1_star_matrix(const RestrictedAlgebra& r) {
  const std::size_t n = r.dim();
  const auto top = d1_matrix(r.algebra());
  Matrix m(r.prime(), top.rows() + n, n);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = top(i, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(top.rows() + i, k) = r.pmap().basis_p_powers[i][k];
  return m;
}

Matrix d2_star_matrix(const RestrictedAlgebra& r) {
  const std::size_t n = r.dim();
  const PrimeField f = r.algebra().field();
  const WedgeBasis pairs(n, 2);
  const auto top = d2_matrix(r.algebra());
  Matrix m(r.prime(), top.rows() + n * n, pairs.size() + n);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t k = 0; k < top.cols(); ++k) m(i, k) = top(i, k);
  // Row (j, i): phi(e_j ^ e_i^[p]) as a linear function of the sigma coordinates.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto& w = r.pmap().basis_p_powers[i];
      const std::size_t row = top.rows() + j * n + i;
      for (std::size_t k = 0; k < n; ++k) {
        if (!w[k] || k == j) continue;
        const std::size_t col = pairs.index({std::min(j, k), std::max(j, k)});
        m(row, col) = j < k ? f.add(m(row, col), w[k]) : f.sub(m(row, col), w[k]);
      }
    }
  return m;
}

std::string format_restricted(const RestrictedTwoCochain& c) {
  const PrimeField f(c.phi.prime());
  const std::size_t n = c.phi.dim();
  auto labels = wedge_labels(n, 2, "ẽ");
  const auto bars = wedge_labels(n, 1, "ē");
  labels.insert(labels.end(), bars.begin(), bars.end());
  return "(" + format_cochain(c.phi) + ", " + format_combination(f, to_coordinates(c), labels) + ")";
}

}  // namespace rcoh
