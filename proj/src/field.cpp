#include "rcoh/field.hpp"

namespace rcoh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Residue p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > (1u << 30)) throw std::invalid_argument("modulus too large");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue base = a % p_;
  Residue r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw DivisionByZero();
  return pow(a, p_ - 2);
}

void PrimeField::axpy(Residue a, const Vector& x, Vector& y) const {
  if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch");
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = add(y[i], mul(a, x[i]));
}

Vector PrimeField::scaled(Residue a, const Vector& x) const {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mul(a, x[i]);
  return r;
}

Vector PrimeField::sum(const Vector& x, const Vector& y) const {
  Vector r = y;
  axpy(1, x, r);
  return r;
}

Residue PrimeField::dot(const Vector& x, const Vector& y) const {
  if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += static_cast<std::uint64_t>(x[i]) * y[i];
    if (acc >= (1ull << 62)) acc %= p_;
  }
  return static_cast<Residue>(acc % p_);
}

bool PrimeField::is_zero(const Vector& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

Scalar::Scalar(std::int64_t value, Residue modulus)
    : value_(PrimeField(modulus).reduce(value)), modulus_(modulus) {}

void Scalar::check_same_field(const Scalar& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  return {static_cast<std::int64_t>(value_) + o.value_, modulus_};
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  return {static_cast<std::int64_t>(value_) - o.value_, modulus_};
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_), modulus_};
}

Scalar Scalar::operator-() const { return {-static_cast<std::int64_t>(value_), modulus_}; }

Scalar inv(const Scalar& a) {
  return {PrimeField(a.modulus()).inv(a.value()), a.modulus()};
}

Scalar pow(const Scalar& a, std::uint64_t e) {
  return {PrimeField(a.modulus()).pow(a.value(), e), a.modulus()};
}

}  // namespace rcoh
