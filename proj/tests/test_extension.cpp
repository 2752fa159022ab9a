#include <doctest.h>

#include "rcoh/extension.hpp"
#include "rcoh/random.hpp"

using namespace rcoh;

namespace {

Cochain2 e2(Residue p, std::size_t i, std::size_t j) {  // 1-based
  Cochain2 c(p, p);
  c.add({i - 1, j - 1}, 1);
  return c;
}

bool jacobi_bruteforce(const LieAlgebra& a) {
  const PrimeField f = a.field();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const auto x = a.basis(i), y = a.basis(j), z = a.basis(k);
        auto s = f.sum(a.bracket(x, a.bracket(y, z)), a.bracket(y, a.bracket(z, x)));
        if (!PrimeField::is_zero(f.sum(s, a.bracket(z, a.bracket(x, y))))) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("zero cocycle gives the direct sum") {
  const auto a = make_m0(5);
  const auto ext = extend_ordinary(a, Cochain2(5, 5));
  CHECK(ext.algebra.dim() == 6);
  CHECK(ext.central_index() == 5);
  CHECK(ext.algebra.labels().back() == "c");
  CHECK(ext.algebra.weights().back() == 6);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(ext.algebra.structure(i, j) == embed(a.structure(i, j)));
  for (std::size_t i = 0; i < 6; ++i) CHECK(PrimeField::is_zero(ext.algebra.structure(i, 5)));
}

TEST_CASE("e^{1,p} twists exactly one bracket") {
  for (Residue p : {3u, 5u, 7u}) {
    const auto a = make_m0(p);
    const auto ext = extend_ordinary(a, e2(p, 1, p)).algebra;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        auto expect = embed(a.structure(i, j));
        if (i == 0 && j == p - 1) expect[p] = 1;
        CHECK(ext.structure(i, j) == expect);
      }
    CHECK(jacobi_bruteforce(ext));
    CHECK_FALSE(jacobi_violation(ext).has_value());
    CHECK(linalg::in_span(p, center(ext), ext.basis(p)));
  }
}

TEST_CASE("non-cocycles are rejected with a witness") {
  try {
    extend_ordinary(make_m0(7), e2(7, 3, 4));
    FAIL("expected NotACocycle");
  } catch (const NotACocycle& e) {
    CHECK(std::string(e.what()).find("(1,2,4)") != std::string::npos);
  }
  auto lam = Vector(5, 0);
  lam[0] = 1;
  CHECK_THROWS_AS(extend_restricted(make_m0_lambda(5, lam), with_tilde(e2(5, 1, 5))), NotACocycle);
}

TEST_CASE("coboundary extensions split") {
  for (Residue p : {5u, 7u}) {
    const auto a = make_m0(p);
    const PrimeField f(p);
    for (std::size_t k = 2; k < p; ++k) {
      const Cochain1 psi(p, p, f.unit(p, k));
      CHECK(is_trivial_ordinary_extension(a, d1(a, psi)));
      CHECK(verify_coboundary_shift(a, Cochain2(p, p), psi));
    }
    Rng rng(p);
    for (int t = 0; t < 5; ++t) CHECK(verify_coboundary_shift(a, phi_k(p, 5), Cochain1(p, p, rng.vector(p, p))));
  }
}

TEST_CASE("triviality as ordinary extensions") {
  for (Residue p : {3u, 5u, 7u, 11u}) {
    const auto a = make_m0(p);
    CHECK(is_trivial_ordinary_extension(a, Cochain2(p, p)));
    for (std::size_t k = 0; k < p; ++k) CHECK(is_trivial_ordinary_extension(a, ebar(p, p, k).phi));
    CHECK_FALSE(is_trivial_ordinary_extension(a, e2(p, 1, p)));
  }
}

TEST_CASE("(0, ē^k) extensions are the table e_i^[p] = lambda_i e_p + delta_ik c") {
  Rng rng(21);
  for (Residue p : {2u, 3u, 5u, 7u}) {
    const auto lam = rng.vector(p, p);
    const auto r = make_m0_lambda(p, lam);
    for (std::size_t k = 0; k < p; ++k) {
      const auto ext = extend_restricted(r, ebar(p, p, k));
      const auto& pm = ext.pmap->basis_p_powers;
      REQUIRE(pm.size() == p + 1);
      for (std::size_t i = 0; i < p; ++i) {
        Vector expect(p + 1, 0);
        expect[p - 1] = lam[i];
        expect[p] = i == k ? 1 : 0;
        CHECK(pm[i] == expect);
      }
      CHECK(PrimeField::is_zero(pm[p]));
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) CHECK(ext.algebra.structure(i, j) == embed(r.algebra().structure(i, j)));
      CHECK_FALSE(restricted_map_violation(ext.restricted()).has_value());
      CHECK(jacobi_bruteforce(ext.algebra));
    }
  }
}

TEST_CASE("zero restricted cocycle gives the restricted direct sum") {
  const auto r = make_m0_lambda(5, {1, 2, 3, 4, 0});
  const auto ext = extend_restricted(r, RestrictedTwoCochain{Cochain2(5, 5), Vector(5, 0)});
  for (std::size_t i = 0; i < 5; ++i) CHECK(ext.pmap->basis_p_powers[i] == embed(r.pmap().basis_p_powers[i]));
  CHECK_FALSE(restricted_map_violation(ext.restricted()).has_value());
}

TEST_CASE("p-powers in a restricted extension follow the *-extension of omega") {
  Rng rng(70);
  const auto r = make_m0_lambda(7, Vector(7, 0));
  const RestrictedTwoCochain c2{phi_k(7, 5), {1, 0, 3, 0, 0, 2, 0}};
  const auto ext = extend_restricted(r, c2);
  const auto er = ext.restricted();
  CHECK_FALSE(restricted_map_violation(er).has_value());
  for (int t = 0; t < 50; ++t) {
    const auto g = rng.vector(7, 7);
    const auto traced = p_power_jacobson_traced(er, embed(g));
    Element head(traced.value.begin(), traced.value.end() - 1);
    CHECK(head == p_power_closed(r, g));
    CHECK(traced.value.back() == star_eval(r.algebra(), c2, g));
    CHECK(traced.corrections_vanished);
  }
  // With phi = e^{1,p} the Jacobson corrections no longer vanish in E, but the
  // c-component still matches star_eval.
  const auto lam = Vector(5, 0);
  const RestrictedTwoCochain c15{e2(5, 1, 5), {0, 1, 0, 0, 0}};
  const auto r5 = make_m0_lambda(5, lam);
  const auto e15 = extend_restricted(r5, c15).restricted();
  bool some_nonvanishing = false;
  for (int t = 0; t < 50; ++t) {
    const auto g = rng.vector(5, 5);
    const auto traced = p_power_jacobson_traced(e15, embed(g));
    CHECK(traced.value.back() == star_eval(r5.algebra(), c15, g));
    some_nonvanishing = some_nonvanishing || !traced.corrections_vanished;
  }
  CHECK(some_nonvanishing);
}

TEST_CASE("H2* representatives yield valid restricted extensions") {
  for (Residue p : {3u, 5u, 7u}) {
    for (auto lam : {Vector(p, 0), PrimeField(p).unit(p, p - 1), PrimeField(p).unit(p, 0)}) {
      const auto r = make_m0_lambda(p, lam);
      for (const auto& c : {with_tilde(e2(p, 1, p)), with_tilde(phi_k(p, 5))}) {
        if (!PrimeField::is_zero(lam) && !ind2(r, c.phi).is_zero()) continue;
        const auto ext = extend_restricted(r, c);
        CHECK(jacobi_bruteforce(ext.algebra));
        CHECK_FALSE(restricted_map_violation(ext.restricted()).has_value());
      }
    }
  }
}
