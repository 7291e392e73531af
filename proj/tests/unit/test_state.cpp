#include "../oracles.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/maps.hpp"
#include "cuntz/random.hpp"
#include "cuntz/state.hpp"
#include "cuntz/theorems.hpp"
#include "doctest.h"

using namespace cuntz;

namespace {

Element S(int n, std::vector<int> letters) { return Element::isometry(Word(n, std::move(letters))); }
Element mono(int n, std::vector<int> mu, std::vector<int> nu) {
  return Element::monomial(Word(n, std::move(mu)), Word(n, std::move(nu)));
}

}  // namespace

TEST_SUITE("state_inner") {

TEST_CASE("phi examples") {
  CHECK(phi(Element::unit(2)) == Gaussian(1));
  CHECK(phi(mono(2, {1}, {1})) == Gaussian(Rational(1, 2)));
  CHECK(phi(S(2, {1})) == Gaussian(0));
  CHECK(phi(mono(2, {1}, {2})) == Gaussian(0));
  CHECK(phi(mono(3, {1, 2}, {1, 2})) == Gaussian(Rational(1, 9)));
}

TEST_CASE("oracle examples") {
  CHECK(oracle::psi_iteration_limit({1}, {1}, 2) == Rational(1, 2));
  CHECK(oracle::psi_iteration_limit({1}, {}, 2) == Rational(0));
  CHECK(oracle::psi_iteration_limit({1}, {2}, 2) == Rational(0));
  CHECK(oracle::psi_iteration_limit({1, 2}, {2, 1}, 2) == Rational(0));
  CHECK(oracle::psi_iteration_limit({}, {}, 3) == Rational(1));
}

TEST_CASE("closed form agrees with the Psi iteration") {
  for (auto [n, level] : {std::pair{2, 3}, std::pair{3, 2}}) {
    MapExpr psi = standard_left_inverse(n);
    for (const TermKey& key : basis_keys(n, level)) {
      CAPTURE(key.to_string());
      Element w = Element::monomial(key);
      Gaussian closed = phi(w);
      CHECK(closed == Gaussian(oracle::psi_iteration_limit(key.left, key.right)));
      CHECK(psi_limit(psi, w, 4 * level + 4) == closed);
    }
  }
}

TEST_CASE("phi is linear and gauge invariant") {
  Sampler rng(21);
  for (int t = 0; t < 50; ++t) {
    Element x = rng.element(2, 3, 4), y = rng.element(2, 3, 4);
    Gaussian c = rng.small_gaussian();
    CHECK(phi(x * c + y) == c * phi(x) + phi(y));
    auto parts = weight_split(x);
    Gaussian balanced = parts.count(0) ? phi(parts.at(0)) : Gaussian(0);
    CHECK(phi(x) == balanced);
  }
}

TEST_CASE("inner examples") {
  CHECK(inner(S(2, {1}), S(2, {1})) == Gaussian(1));
  CHECK(inner(mono(2, {1}, {1}), mono(2, {2}, {2})) == Gaussian(0));
  CHECK(inner(Element::unit(2), Element::unit(2)) == Gaussian(1));
  CHECK_THROWS_AS(inner(Element::unit(2), Element::unit(3)), RankMismatch);
}

TEST_CASE("inner is sesquilinear and positive") {
  Sampler rng(22);
  for (int t = 0; t < 60; ++t) {
    Element x = rng.element(2, 2, 3), y = rng.element(2, 2, 3), z = rng.element(2, 2, 3);
    Gaussian c = rng.small_gaussian();
    CHECK(inner(x * c + z, y) == c * inner(x, y) + inner(z, y));
    CHECK(inner(x, y * c) == conj(c) * inner(x, y));
    CHECK(inner(y, x) == conj(inner(x, y)));
    Gaussian xx = inner(x, x);
    CHECK(xx.is_real());
    CHECK(xx.re().sign() >= 0);
    CHECK((xx.is_zero()) == is_zero(x));
    Gaussian xy = inner(x, y);
    CHECK((xy * conj(xy)).re() <= (xx * inner(y, y)).re());
  }
}

TEST_CASE("trace-like property") {
  for (auto [n, level] : {std::pair{2, 2}, std::pair{3, 1}}) {
    for (const TermKey& a : basis_keys(n, level)) {
      for (const TermKey& b : basis_keys(n, level)) {
        if (b.weight() != 0) continue;
        Element x = Element::monomial(a), y = Element::monomial(b);
        CHECK(phi(x * y) == phi(y * x));
      }
    }
  }
}

TEST_CASE("verify_adjoint examples") {
  MapExpr Phi = canonical_endomorphism(2), Psi = standard_left_inverse(2);
  CHECK(verify_adjoint(Phi, Psi, 2).empty());
  CHECK(verify_adjoint(MapExpr::identity(2), MapExpr::identity(2), 2).empty());
  // Phi_2 and Psi_2 pair identically against every word of length <= 1.
  CHECK(verify_adjoint(Phi, Phi, 1).empty());
  auto report = verify_adjoint(Phi, Phi, 2);
  REQUIRE_FALSE(report.empty());
  bool found = false;
  for (const Mismatch& m : report) {
    if (m.x == TermKey{Word(2, {1, 1}), Word(2, {1, 1})} && m.y &&
        *m.y == TermKey{Word(2, {1}), Word(2, {1})}) {
      found = true;
      CHECK(m.lhs == Gaussian(Rational(1, 8)));
      CHECK(m.rhs == Gaussian(Rational(1, 4)));
    }
  }
  CHECK(found);
  CHECK(to_text(report).find("lhs=") != std::string::npos);
}

TEST_CASE("preserves_phi examples") {
  CHECK(preserves_phi(canonical_endomorphism(2), 3).empty());
  CHECK(preserves_phi(standard_left_inverse(2), 3).empty());
  auto report = preserves_phi(MapExpr::ad(S(2, {1})), 1);
  REQUIRE_FALSE(report.empty());
  CHECK(report.front().x == TermKey{Word(2, {}), Word(2, {})});
  CHECK(report.front().lhs == Gaussian(Rational(1, 2)));
  CHECK(report.front().rhs == Gaussian(1));
}

}
