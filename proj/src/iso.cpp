#include "rcoh/iso.hpp"

#include <string>

namespace rcoh {
namespace {

void check_lengths(Residue p, const Vector& a, const Vector& b) {
  if (a.size() != p || b.size() != p) throw std::invalid_argument("lambda vectors must have p entries");
}

}  // namespace

Vector scale_factors(Residue p, Residue mu1, Residue mu2) {
  const PrimeField f(p);
  Vector mu(p);
  mu[0] = mu1 % p;
  if (p > 1) mu[1] = mu2 % p;
  for (std::size_t k = 3; k <= p; ++k) mu[k - 1] = f.mul(mu2 % p, f.pow(mu1, k - 2));
  return mu;
}

bool diag_iso_check(Residue p, const Vector& lambda, const Vector& lambda_prime, Residue mu1, Residue mu2) {
  check_lengths(p, lambda, lambda_prime);
  if (mu1 % p == 0 || mu2 % p == 0) throw std::invalid_argument("scale factors must be nonzero");
  const PrimeField f(p);
  const auto mu = scale_factors(p, mu1, mu2);
  const Residue mu_p = mu[p - 1];
  for (std::size_t k = 0; k < p; ++k)
    if (f.mul(lambda[k] % p, mu_p) != f.mul(f.pow(mu[k], p), lambda_prime[k] % p)) return false;
  return true;
}

Vector transform_lambda(Residue p, const Vector& lambda_prime, Residue mu1, Residue mu2) {
  if (lambda_prime.size() != p) throw std::invalid_argument("lambda vectors must have p entries");
  const PrimeField f(p);
  const auto mu = scale_factors(p, mu1, mu2);
  const Residue inv_mu_p = f.inv(mu[p - 1]);
  Vector out(p);
  for (std::size_t k = 0; k < p; ++k) out[k] = f.mul(f.mul(f.pow(mu[k], p), inv_mu_p), lambda_prime[k] % p);
  return out;
}

std::optional<IsoWitness> iso_bruteforce(Residue p, const Vector& lambda, const Vector& lambda_prime) {
  if (p > kIsoSearchLimit)
    throw SearchLimitExceeded("isomorphism search is limited to p <= " + std::to_string(kIsoSearchLimit));
  check_lengths(p, lambda, lambda_prime);
  for (Residue mu1 = 1; mu1 < p; ++mu1)
    for (Residue mu2 = 1; mu2 < p; ++mu2)
      if (diag_iso_check(p, lambda, lambda_prime, mu1, mu2)) return IsoWitness{mu1, mu2};
  return std::nullopt;
}

bool statement_conditions_hold(Residue p, const Vector& lambda, const Vector& lambda_prime, Residue mu1, Residue mu2) {
  check_lengths(p, lambda, lambda_prime);
  const PrimeField f(p);
  if (lambda[0] % p != f.mul(mu1, lambda_prime[0] % p)) return false;
  if (p >= 2 && lambda[1] % p != f.mul(mu2, lambda_prime[1] % p)) return false;
  for (std::size_t k = 3; k <= p; ++k) {
    const Residue factor = f.mul(f.pow(mu2, p - 1), f.pow(mu1, static_cast<std::uint64_t>(p) * (k - 3) + 2));
    if (lambda[k - 1] % p != f.mul(factor, lambda_prime[k - 1] % p)) return false;
  }
  return true;
}

PropositionReport proposition_formula_check(Residue p, const Vector& lambda, const Vector& lambda_prime) {
  PropositionReport r;
  r.bruteforce_witness = iso_bruteforce(p, lambda, lambda_prime);
  for (Residue mu1 = 1; mu1 < p && !r.statement_witness; ++mu1)
    for (Residue mu2 = 1; mu2 < p; ++mu2)
      if (statement_conditions_hold(p, lambda, lambda_prime, mu1, mu2)) {
        r.statement_witness = IsoWitness{mu1, mu2};
        break;
      }
  return r;
}

std::vector<std::vector<bool>> iso_table(Residue p, const std::vector<Vector>& lambdas) {
  const std::size_t n = lambdas.size();
  std::vector<char> flat(n * n, 0);
  const auto total = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx) / n;
    const auto j = static_cast<std::size_t>(idx) % n;
    flat[static_cast<std::size_t>(idx)] = iso_bruteforce(p, lambdas[i], lambdas[j]).has_value() ? 1 : 0;
  }
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = flat[i * n + j] != 0;
  return out;
}

std::vector<std::vector<Vector>> iso_classes(Residue p, const std::vector<Vector>& lambdas) {
  const auto table = iso_table(p, lambdas);
  std::vector<int> cls(lambdas.size(), -1);
  std::vector<std::vector<Vector>> out;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(out.size());
    out.push_back({lambdas[i]});
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (cls[j] < 0 && table[i][j]) {
        cls[j] = cls[i];
        out.back().push_back(lambdas[j]);
      }
  }
  return out;
}

}  // namespace rcoh
