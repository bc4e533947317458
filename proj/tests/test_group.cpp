#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "addcomb/group.hpp"

using namespace addcomb;

namespace {
GroupElement el(const FiniteAbelianGroup& g, std::vector<std::int64_t> coords) {
  return GroupElement::from_coords(g, coords);
}
}  // namespace

TEST_CASE("group construction") {
  CHECK(make_group({5}).order() == 5);
  CHECK(make_group({3, 5}).order() == 15);
  CHECK(make_group({1}).order() == 1);
  CHECK_THROWS_AS(make_group({}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({0}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({3, -1}), std::invalid_argument);
}

TEST_CASE("mixed radix indexing is a bijection") {
  FiniteAbelianGroup g({3, 5, 2});
  for (std::int64_t i = 0; i < g.order(); ++i) {
    CHECK(g.index_of(g.coords_of(i)) == i);
  }
}

TEST_CASE("element arithmetic") {
  FiniteAbelianGroup z5({5});
  CHECK((el(z5, {3}) + el(z5, {4})).index() == z5.index_of(std::vector<std::int64_t>{2}));

  FiniteAbelianGroup g({3, 5});
  GroupElement sum = el(g, {2, 4}) + el(g, {2, 2});
  CHECK(sum.coords() == std::vector<std::int64_t>{1, 1});
  CHECK((-el(g, {0, 0})).index() == 0);

  FiniteAbelianGroup z7({7});
  CHECK_THROWS_AS(el(z5, {1}) + el(z7, {1}), std::invalid_argument);
}

TEST_CASE("character evaluation") {
  FiniteAbelianGroup z4({4});
  Character gamma(z4, {1});
  std::complex<double> v = gamma.eval(el(z4, {1}));
  CHECK(std::abs(v - std::complex<double>(0.0, 1.0)) < 1e-12);

  Character triv = Character::trivial(z4);
  for (std::int64_t x = 0; x < 4; ++x) {
    CHECK(std::abs(triv.eval_index(x) - 1.0) < 1e-15);
  }

  FiniteAbelianGroup z7({7});
  Character g7(z7, {1});
  std::complex<double> expected = std::polar(1.0, 4.0 * std::numbers::pi / 7.0);
  CHECK(std::abs(g7.eval_index(2) - expected) < 1e-12);
}

TEST_CASE("character multiplicativity") {
  for (auto moduli : {std::vector<std::int64_t>{12}, {3, 5}, {2, 2, 3}}) {
    FiniteAbelianGroup g(moduli);
    for (std::int64_t c = 0; c < g.order(); ++c) {
      Character gamma = Character::from_dual_index(g, c);
      for (std::int64_t x = 0; x < g.order(); ++x) {
        for (std::int64_t y = 0; y < g.order(); ++y) {
          auto lhs = gamma.eval_index(g.add(x, y));
          auto rhs = gamma.eval_index(x) * gamma.eval_index(y);
          CHECK(std::abs(lhs - rhs) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("psi and halve") {
  FiniteAbelianGroup z7({7});
  CHECK(z7.halve(3) == 5);
  CHECK(z7.halve(0) == 0);
  FiniteAbelianGroup z5({5});
  CHECK(z5.scale(2, 3) == 1);

  FiniteAbelianGroup even({4});
  CHECK_THROWS_AS(even.halve(2), PreconditionError);
}

TEST_CASE("halve is the inverse of doubling, exhaustively") {
  for (auto moduli : {std::vector<std::int64_t>{9999}, {3, 5, 7}, {1}, {101}}) {
    FiniteAbelianGroup g(moduli);
    for (std::int64_t x = 0; x < g.order(); ++x) {
      CHECK(g.halve(g.scale(2, x)) == x);
      CHECK(g.scale(2, g.halve(x)) == x);
    }
  }
}

TEST_CASE("character composition with multiplication maps") {
  FiniteAbelianGroup z5({5});
  Character gamma(z5, {1});
  CHECK(compose_character_with_psi(gamma, 2).coeffs() == std::vector<std::int64_t>{2});
  CHECK(compose_character_with_psi(gamma, 1) == gamma);

  FiniteAbelianGroup z7({7});
  Character g3(z7, {3});
  CHECK(compose_character_with_psi(g3, 4).coeffs() == std::vector<std::int64_t>{5});

  // gamma(psi_k x) == (gamma o psi_k)(x) exhaustively on a product group.
  FiniteAbelianGroup g({3, 4});
  for (std::int64_t c = 0; c < g.order(); ++c) {
    Character base = Character::from_dual_index(g, c);
    for (std::int64_t k = 0; k < 6; ++k) {
      Character composed = compose_character_with_psi(base, k);
      for (std::int64_t x = 0; x < g.order(); ++x) {
        CHECK(std::abs(composed.eval_index(x) - base.eval_index(g.scale(k, x))) < 1e-12);
      }
    }
  }
}

TEST_CASE("multiplication map inverse") {
  FiniteAbelianGroup z7({7});
  MultiplicationMap psi2(2);
  CHECK(psi2.invertible_on(z7));
  MultiplicationMap inv = psi2.inverse_on(z7);
  for (std::int64_t x = 0; x < 7; ++x) {
    CHECK(inv.apply(z7, psi2.apply(z7, x)) == x);
  }
  FiniteAbelianGroup z6({6});
  CHECK(!MultiplicationMap(2).invertible_on(z6));
  CHECK_THROWS_AS(MultiplicationMap(2).inverse_on(z6), PreconditionError);
}
