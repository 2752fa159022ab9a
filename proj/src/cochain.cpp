#include "rcoh/cochain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcoh {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

WedgeBasis::WedgeBasis(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
  if (degree == 0) {
    tuples_.push_back({});
    return;
  }
  std::vector<std::size_t> t(degree);
  for (std::size_t i = 0; i < degree; ++i) t[i] = i;
  if (degree > n) return;
  while (true) {
    tuples_.push_back(t);
    std::size_t pos = degree;
    while (pos > 0 && t[pos - 1] == n - degree + pos - 1) --pos;
    if (pos == 0) break;
    ++t[pos - 1];
    for (std::size_t i = pos; i < degree; ++i) t[i] = t[i - 1] + 1;
  }
}

std::size_t WedgeBasis::index(const std::vector<std::size_t>& sorted) const {
  if (sorted.size() != degree_) throw std::invalid_argument("tuple has wrong degree");
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t pos = 0; pos < degree_; ++pos) {
    const std::size_t start = pos == 0 ? 0 : prev + 1;
    if (sorted[pos] >= n_ || sorted[pos] < start) throw std::invalid_argument("tuple is not strictly increasing");
    for (std::size_t v = start; v < sorted[pos]; ++v) rank += binomial(n_ - 1 - v, degree_ - 1 - pos);
    prev = sorted[pos];
  }
  return rank;
}

int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

Residue evaluate(const Cochain1& psi, const Element& x) {
  return PrimeField(psi.prime()).dot(psi.coeffs(), x);
}

Residue evaluate(const Cochain2& phi, const Element& x, const Element& y) {
  const PrimeField f(phi.prime());
  const auto b = phi.basis();
  if (x.size() != phi.dim() || y.size() != phi.dim()) throw std::invalid_argument("element dimension mismatch");
  Residue acc = 0;
  for (std::size_t idx = 0; idx < b.size(); ++idx) {
    const Residue s = phi.coeffs()[idx];
    if (!s) continue;
    const auto& t = b.tuple(idx);
    const Residue minor = f.sub(f.mul(x[t[0]], y[t[1]]), f.mul(x[t[1]], y[t[0]]));
    acc = f.add(acc, f.mul(s, minor));
  }
  return acc;
}

Residue evaluate(const Cochain3& alpha, const Element& x, const Element& y, const Element& z) {
  const PrimeField f(alpha.prime());
  const auto b = alpha.basis();
  Residue acc = 0;
  for (std::size_t idx = 0; idx < b.size(); ++idx) {
    const Residue a = alpha.coeffs()[idx];
    if (!a) continue;
    const auto& t = b.tuple(idx);
    const std::size_t s = t[0], u = t[1], v = t[2];
    // 3x3 determinant with rows x, y, z and columns s, u, v.
    Residue det = f.mul(x[s], f.sub(f.mul(y[u], z[v]), f.mul(y[v], z[u])));
    det = f.sub(det, f.mul(x[u], f.sub(f.mul(y[s], z[v]), f.mul(y[v], z[s]))));
    det = f.add(det, f.mul(x[v], f.sub(f.mul(y[s], z[u]), f.mul(y[u], z[s]))));
    acc = f.add(acc, f.mul(a, det));
  }
  return acc;
}

Matrix d1_matrix(const LieAlgebra& a) {
  const WedgeBasis pairs(a.dim(), 2);
  Matrix m(a.prime(), pairs.size(), a.dim());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto& t = pairs.tuple(r);
    const auto c = a.structure(t[0], t[1]);
    for (std::size_t k = 0; k < a.dim(); ++k) m(r, k) = c[k];
  }
  return m;
}

Matrix d2_matrix(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  const WedgeBasis pairs(n, 2), triples(n, 3);
  const PrimeField f = a.field();
  Matrix m(a.prime(), triples.size(), pairs.size());
  // Adds coef * phi(x ^ e_q) to row r, as coefficients on the pair basis.
  auto add_term = [&](std::size_t r, Residue coef, const Vector& x, std::size_t q) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!x[k] || k == q) continue;
      const Residue v = f.mul(coef, x[k]);
      const std::size_t col = pairs.index({std::min(k, q), std::max(k, q)});
      m(r, col) = k < q ? f.add(m(r, col), v) : f.sub(m(r, col), v);
    }
  };
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto& t = triples.tuple(r);
    const std::size_t l = t[0], mm = t[1], q = t[2];
    add_term(r, 1, a.structure(l, mm), q);
    add_term(r, f.neg(1), a.structure(l, q), mm);
    add_term(r, 1, a.structure(mm, q), l);
  }
  return m;
}

Cochain2 d1(const LieAlgebra& a, const Cochain1& psi) {
  return Cochain2(a.prime(), a.dim(), d1_matrix(a).apply(psi.coeffs()));
}

Cochain3 d2(const LieAlgebra& a, const Cochain2& phi) {
  return Cochain3(a.prime(), a.dim(), d2_matrix(a).apply(phi.coeffs()));
}

int weight(const std::vector<std::size_t>& one_based) {
  int w = 0;
  for (auto i : one_based) w += static_cast<int>(i);
  return w;
}

Cochain2 phi_k(Residue p, int k) {
  if (k % 2 == 0 || k < 5 || k > static_cast<int>(p) + 2)
    throw std::invalid_argument("phi_k needs odd k with 5 <= k <= p + 2, got k = " + std::to_string(k));
  const PrimeField f(p);
  Cochain2 phi(p, p);
  for (int m = 2; m <= k / 2; ++m) {
    const Residue sign = m % 2 == 0 ? 1 : f.neg(1);
    phi.add({static_cast<std::size_t>(m - 1), static_cast<std::size_t>(k - m - 1)}, sign);
  }
  return phi;
}

std::string wedge_label(const std::vector<std::size_t>& zero_based, const std::string& symbol) {
  std::ostringstream os;
  os << symbol << '^';
  if (zero_based.size() == 1) {
    os << zero_based[0] + 1;
    return os.str();
  }
  os << '{';
  for (std::size_t i = 0; i < zero_based.size(); ++i) os << (i ? "," : "") << zero_based[i] + 1;
  os << '}';
  return os.str();
}

std::vector<std::string> wedge_labels(std::size_t n, std::size_t degree, const std::string& symbol) {
  const WedgeBasis b(n, degree);
  std::vector<std::string> out;
  out.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(wedge_label(b.tuple(i), symbol));
  return out;
}

std::string format_combination(const PrimeField& f, const Vector& coeffs, const std::vector<std::string>& labels) {
  if (coeffs.size() != labels.size()) throw std::invalid_argument("label count mismatch");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i]) continue;
    auto c = f.signed_value(coeffs[i]);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (c < 0) c = -c;
    if (c != 1) os << c;
    os << labels[i];
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace rcoh
