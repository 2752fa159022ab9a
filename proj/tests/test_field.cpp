#include <doctest.h>

#include "rcoh/field.hpp"

using namespace rcoh;

TEST_CASE("inverses from the spec table") {
  CHECK(inv(Scalar(1, 5)).value() == 1);
  CHECK(inv(Scalar(2, 5)).value() == 3);
  CHECK(inv(Scalar(6, 7)).value() == 6);
}

TEST_CASE("inverse agrees with exhaustive search") {
  for (Residue p : {2u, 3u, 5u, 7u, 11u, 13u, 31u}) {
    const PrimeField f(p);
    for (Residue a = 1; a < p; ++a) {
      Residue found = 0;
      for (Residue b = 1; b < p; ++b)
        if (a * b % p == 1) found = b;
      CHECK(f.inv(a) == found);
    }
  }
}

TEST_CASE("zero has no inverse") {
  CHECK_THROWS_AS(PrimeField(7).inv(0), DivisionByZero);
  CHECK_THROWS_AS(inv(Scalar(14, 7)), DivisionByZero);
}

TEST_CASE("Fermat: a^p = a") {
  for (Residue p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const PrimeField f(p);
    for (Residue a = 0; a < p; ++a) CHECK(f.pow(a, p) == a);
  }
}

TEST_CASE("scalars reduce negative input and reject mixed moduli") {
  CHECK(Scalar(-1, 5).value() == 4);
  CHECK((Scalar(3, 5) + Scalar(4, 5)).value() == 2);
  CHECK((Scalar(3, 5) - Scalar(4, 5)).value() == 4);
  CHECK((Scalar(3, 5) * Scalar(4, 5)).value() == 2);
  CHECK((-Scalar(3, 5)).value() == 2);
  CHECK_THROWS(Scalar(1, 5) + Scalar(1, 7));
  CHECK_THROWS(Scalar(1, 4));
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("vector helpers") {
  const PrimeField f(5);
  Vector y{1, 2, 3};
  f.axpy(2, {4, 4, 0}, y);
  CHECK(y == Vector{4, 0, 3});
  CHECK(f.dot({1, 2, 3}, {4, 4, 4}) == 4);
  CHECK(f.signed_value(4) == -1);
  CHECK(PrimeField::is_zero(f.zeros(3)));
}
