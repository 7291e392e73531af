#include "cuntz/errors.hpp"
#include "cuntz/maps.hpp"
#include "cuntz/random.hpp"
#include "cuntz/state.hpp"
#include "doctest.h"

using namespace cuntz;

namespace {

Element S(int n, std::vector<int> letters) { return Element::isometry(Word(n, std::move(letters))); }
Element Sa(int n, std::vector<int> letters) { return S(n, std::move(letters)).adjoint(); }
Element P(int n, std::vector<int> letters) { return Element::projection(Word(n, std::move(letters))); }
Element mono(int n, std::vector<int> mu, std::vector<int> nu) {
  return Element::monomial(Word(n, std::move(mu)), Word(n, std::move(nu)));
}
Gaussian q(long a, long b) { return Gaussian(Rational(a, b)); }

Matrix rotation() {
  return Matrix::from_rows({{q(3, 5), q(4, 5)}, {q(-4, 5), q(3, 5)}});
}

}  // namespace

TEST_SUITE("cp_calculus") {

TEST_CASE("apply examples") {
  MapExpr Phi = canonical_endomorphism(2), Psi = standard_left_inverse(2);
  CHECK(apply(Phi, P(2, {1})) == mono(2, {1, 1}, {1, 1}) + mono(2, {2, 1}, {2, 1}));
  CHECK(apply(Psi, P(2, {1})) == Element::unit(2) * q(1, 2));
  MapExpr left = MapExpr::compose(Psi, Phi);
  for (const TermKey& key : basis_keys(2, 3)) {
    Element w = Element::monomial(key);
    CHECK(equals(apply(left, w), w));
  }
}

TEST_CASE("kraus weights must be positive") {
  CHECK_THROWS_AS(MapExpr::kraus({{Rational(0), S(2, {1})}}), DomainError);
  CHECK_THROWS_AS(MapExpr::kraus({{Rational(-1), S(2, {1})}}), DomainError);
}

TEST_CASE("rank mismatch in apply") {
  CHECK_THROWS_AS(apply(canonical_endomorphism(2), Element::unit(3)), RankMismatch);
}

TEST_CASE("homomorphisms are validated before use") {
  CHECK_THROWS_AS(MapExpr::homomorphism({S(2, {1}), S(2, {1})}), DomainError);
  MapExpr bad = MapExpr::unchecked_homomorphism({S(2, {1}), S(2, {1})});
  CHECK_THROWS_AS(apply(bad, S(2, {1})), Error);
  MapExpr swap = MapExpr::homomorphism({S(2, {2}), S(2, {1})});
  CHECK(apply(swap, mono(2, {1, 2}, {1})) == mono(2, {2, 1}, {2}));
}

TEST_CASE("is_operational_partition examples") {
  CHECK(is_operational_partition({S(2, {1}), S(2, {2})}));
  CHECK(is_operational_partition({Element::unit(2)}));
  CHECK_FALSE(is_operational_partition({S(2, {1})}));
  CHECK(is_operational_partition({Sa(2, {1})}));
  CHECK_THROWS_AS(is_operational_partition({S(2, {1}), Element::zero(2)}), DomainError);
  CHECK_THROWS_AS(OperationalPartition({S(2, {1})}), DomainError);
}

TEST_CASE("operational_convex examples") {
  OperationalPartition gens({S(2, {1}), S(2, {2})});
  MapExpr id = MapExpr::identity(2);
  CHECK(maps_agree(operational_convex(gens, {id, id}), canonical_endomorphism(2), 2));
  MapExpr f = MapExpr::ad(Sa(2, {2}));
  CHECK(maps_agree(operational_convex(OperationalPartition({Element::unit(2)}), {f}), f, 2));
  MapExpr adj = MapExpr::ad(Sa(2, {1}));
  MapExpr prop10 = MapExpr::compose(canonical_endomorphism(2), adj);
  CHECK(maps_agree(operational_convex(gens, {adj, adj}), prop10, 2));
  CHECK_THROWS_AS(operational_convex(gens, {id}), DomainError);
}

TEST_CASE("is_unital examples") {
  CHECK(is_unital(canonical_endomorphism(2)));
  CHECK(is_unital(standard_left_inverse(2)));
  CHECK_FALSE(is_unital(MapExpr::kraus({{Rational(1), S(2, {1})}})));
}

TEST_CASE("cuntz_relations_check examples") {
  CHECK(cuntz_relations_check({S(2, {1}), S(2, {2})}));
  CHECK(cuntz_relations_check({S(2, {2}), S(2, {1})}));
  CHECK(cuntz_relations_check({S(2, {1}) * q(3, 5) - S(2, {2}) * q(4, 5),
                               S(2, {1}) * q(4, 5) + S(2, {2}) * q(3, 5)}));
  CHECK_FALSE(cuntz_relations_check({S(2, {1}), S(2, {1})}));
  CHECK_FALSE(cuntz_relations_check({S(3, {1}), S(3, {2}), S(3, {2, 3})}));
}

TEST_CASE("quasi_free examples") {
  MapExpr id = quasi_free(Matrix::identity(2));
  CHECK(maps_agree(id, MapExpr::identity(2), 2));
  MapExpr swap = quasi_free(Matrix::from_rows({{q(0, 1), q(1, 1)}, {q(1, 1), q(0, 1)}}));
  CHECK(apply(swap, S(2, {1})) == S(2, {2}));
  CHECK(apply(swap, S(2, {2})) == S(2, {1}));
  MapExpr rot = quasi_free(rotation());
  CHECK(apply(rot, S(2, {1})) == S(2, {1}) * q(3, 5) - S(2, {2}) * q(4, 5));
  CHECK(preserves_phi(rot, 3).empty());
  CHECK_THROWS_AS(quasi_free(Matrix::from_rows({{q(1, 1), q(1, 1)}, {q(0, 1), q(1, 1)}})),
                  DomainError);
}

TEST_CASE("find_scalar_ratio examples") {
  MapExpr Phi = canonical_endomorphism(2);
  CHECK_FALSE(find_scalar_ratio(MapExpr::ad(S(2, {1})), Phi, 2).has_value());
  CHECK(find_scalar_ratio(Phi, Phi, 2) == Gaussian(1));
  MapExpr half = MapExpr::kraus({{Rational(1, 2), Element::unit(2)}});
  CHECK(find_scalar_ratio(half, MapExpr::identity(2), 2) == q(1, 2));
  MapExpr zero_part = MapExpr::kraus({{Rational(1), P(2, {1})}});
  CHECK_FALSE(find_scalar_ratio(MapExpr::identity(2), zero_part, 1).has_value());
}

TEST_CASE("commutes_with_range examples") {
  MapExpr Phi = canonical_endomorphism(2);
  CHECK(commutes_with_range(P(2, {1}), Phi, 2));
  CHECK(commutes_with_range(Element::unit(2), standard_left_inverse(2), 2));
  CHECK_FALSE(commutes_with_range(S(2, {1}), Phi, 1));
  Element img = apply(Phi, P(2, {2}));
  CHECK_FALSE(equals(S(2, {1}) * img, img * S(2, {1})));
}

TEST_CASE("check_component_factorization examples") {
  MapExpr Phi = canonical_endomorphism(2);
  CHECK(check_component_factorization(MapExpr::ad(S(2, {1})), Phi, P(2, {1}), 2));
  MapExpr prop10 = MapExpr::compose(Phi, MapExpr::ad(Sa(2, {1})));
  MapExpr part = MapExpr::compose(MapExpr::ad(S(2, {1})), MapExpr::ad(Sa(2, {1})));
  CHECK(check_component_factorization(part, prop10, P(2, {1}), 2));
  CHECK_FALSE(
      check_component_factorization(MapExpr::ad(S(2, {1})), Phi, Element::unit(2) * q(1, 2), 1));
}

TEST_CASE("check_commutant_partition examples") {
  MapExpr Phi = canonical_endomorphism(2);
  CHECK(check_commutant_partition({P(2, {1}), P(2, {2})}, Phi, 2));
  CHECK(check_commutant_partition({Element::unit(2)}, standard_left_inverse(2), 2));
  CHECK(check_commutant_partition({Element::unit(2) * q(1, 2), Element::unit(2) * q(1, 2)}, Phi, 2));
  CHECK_FALSE(check_commutant_partition({P(2, {1})}, Phi, 2));
  CHECK_FALSE(check_commutant_partition({P(2, {1}) * q(2, 1), P(2, {2}) - P(2, {1})}, Phi, 1));
  CHECK_THROWS_AS(check_commutant_partition({S(2, {1}), Element::unit(2) - S(2, {1})}, Phi, 1),
                  OutOfBalancedScope);
}

TEST_CASE("Phi_n is a unital star endomorphism on samples") {
  for (int n : {2, 3}) {
    MapExpr Phi = canonical_endomorphism(n);
    Sampler rng(40 + n);
    for (int t = 0; t < 40; ++t) {
      Element x = rng.element(n, 2, 3), y = rng.element(n, 2, 3);
      CHECK(equals(apply(Phi, x * y), apply(Phi, x) * apply(Phi, y)));
      CHECK(equals(apply(Phi, adjoint(x)), adjoint(apply(Phi, x))));
    }
    CHECK(is_unital(Phi));
  }
}

TEST_CASE("validated homomorphisms are multiplicative") {
  MapExpr rot = quasi_free(rotation());
  MapExpr Phi = canonical_endomorphism(2);
  MapExpr hom = MapExpr::homomorphism({apply(Phi, S(2, {1})), apply(Phi, S(2, {2}))});
  Sampler rng(50);
  for (int t = 0; t < 40; ++t) {
    Element x = rng.element(2, 2, 3), y = rng.element(2, 2, 3);
    CHECK(equals(apply(rot, x * y), apply(rot, x) * apply(rot, y)));
    CHECK(equals(apply(hom, x * y), apply(hom, x) * apply(hom, y)));
    CHECK(equals(apply(hom, x), apply(Phi, x)));
  }
  CHECK(is_unital(rot));
  CHECK(is_unital(hom));
}

TEST_CASE("quasi-free inverse is the adjoint") {
  Matrix u = rotation();
  MapExpr theta = quasi_free(u), inverse = quasi_free(u.adjoint());
  CHECK(verify_adjoint(theta, inverse, 2).empty());
  CHECK(maps_agree(MapExpr::compose(inverse, theta), MapExpr::identity(2), 2));
}

TEST_CASE("Jordan failure for Ad S_1^*") {
  MapExpr f = MapExpr::ad(Sa(2, {1}));
  Element a = S(2, {1}) + Sa(2, {1});
  CHECK_FALSE(equals(apply(f, a * a), apply(f, a) * apply(f, a)));
}

TEST_CASE("printing maps") {
  CHECK(canonical_endomorphism(2).to_string() == "Phi");
  CHECK(standard_left_inverse(3).to_string() == "Psi");
  CHECK(MapExpr::identity(2).to_string() == "id");
  CHECK(MapExpr::ad(Sa(2, {1})).to_string() == "ad(S[1]')");
  CHECK(MapExpr::compose(canonical_endomorphism(2), MapExpr::identity(2)).to_string() ==
        "compose(Phi, id)");
}

}
