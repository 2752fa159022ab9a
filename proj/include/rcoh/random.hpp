#pragma once

#include <cstdint>
#include <random>

#include "rcoh/field.hpp"

namespace rcoh {

/// Seeded source of residues. Same seed, same sequence on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Residue residue(Residue p) { return static_cast<Residue>(engine_() % p); }
  Residue nonzero(Residue p) { return 1 + static_cast<Residue>(engine_() % (p - 1)); }
  Vector vector(Residue p, std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = residue(p);
    return v;
  }
  Vector nonzero_vector(Residue p, std::size_t n) {
    for (;;) {
      auto v = vector(p, n);
      if (!PrimeField::is_zero(v)) return v;
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace rcoh
