#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcoh {

using Residue = std::uint32_t;

/// Coefficient vector over GF(p). The modulus travels with the owning object
/// (algebra, matrix, cochain), not with each entry.
using Vector = std::vector<Residue>;

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero in GF(p)") {}
};

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field GF(p).
class PrimeField {
public:
  explicit PrimeField(Residue p);

  Residue modulus() const { return p_; }

  Residue reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue add(Residue a, Residue b) const {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;

  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t signed_value(Residue a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  // vector helpers
  Vector zeros(std::size_t n) const { return Vector(n, 0); }
  Vector unit(std::size_t n, std::size_t k) const {
    Vector v(n, 0);
    v.at(k) = 1 % p_;
    return v;
  }
  void axpy(Residue a, const Vector& x, Vector& y) const;  // y += a x
  Vector scaled(Residue a, const Vector& x) const;
  Vector sum(const Vector& x, const Vector& y) const;
  Residue dot(const Vector& x, const Vector& y) const;
  static bool is_zero(const Vector& v);

  bool operator==(const PrimeField&) const = default;

private:
  Residue p_;
};

/// A field element carrying its modulus.
class Scalar {
public:
  Scalar(std::int64_t value, Residue modulus);

  Residue value() const { return value_; }
  Residue modulus() const { return modulus_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar&) const = default;

private:
  void check_same_field(const Scalar& o) const;

  Residue value_;
  Residue modulus_;
};

Scalar inv(const Scalar& a);
Scalar pow(const Scalar& a, std::uint64_t e);

}  // namespace rcoh
