#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qexp/families.hpp"
#include "qexp/oracle.hpp"

using namespace qexp;

namespace {

DeckSpec random_spec(std::mt19937_64& rng, unsigned long qv, unsigned max_dim = 6,
                     unsigned long max_count = 5) {
  std::uniform_int_distribution<unsigned long> count(0, max_count);
  std::map<unsigned, Natural> decks;
  for (unsigned r = 1; r <= max_dim; ++r) {
    const unsigned long c = count(rng);
    if (c > 0) decks[r] = Natural(c);
  }
  return DeckSpec(FieldOrder(qv), decks);
}

}  // namespace

TEST_CASE("DeckSpec canonical form") {
  DeckSpec f(FieldOrder(2), {{1, Natural(2)}, {3, Natural(0)}});
  CHECK(f.decks().size() == 1);
  CHECK(f.decks().at(1) == Natural(2));
  CHECK_THROWS_AS(DeckSpec(FieldOrder(2), {{0, Natural(1)}}), std::invalid_argument);
}

TEST_CASE("deck_enumerator") {
  const FieldOrder q2(2);
  CHECK(deck_enumerator(DeckSpec(q2, {}), 5) == XSeries(5));

  // One deck of q cards in dimension 1: D(x) = q/(q-1) x = 2x at q=2.
  const XSeries d = deck_enumerator(DeckSpec(q2, {{1, Natural(2)}}), 5);
  CHECK(d.coeff(0).is_zero());
  CHECK(d.coeff(1) == YPoly::constant(Rational(2)));
  for (unsigned n = 2; n <= 5; ++n) CHECK(d.coeff(n).is_zero());

  // q-1 cards in dimension 1: D(x) = x.
  const XSeries d1 = deck_enumerator(DeckSpec(q2, {{1, Natural(1)}}), 5);
  CHECK(d1.coeff(1) == YPoly::constant(Rational(1)));

  const FieldOrder q3(3);
  CHECK(deck_enumerator(DeckSpec(q3, {{1, Natural(2)}}), 4).coeff(1) ==
        YPoly::constant(Rational(1)));
}

TEST_CASE("hand_enumerator") {
  const FieldOrder q2(2);
  CHECK(hand_enumerator(DeckSpec(q2, {}), 6) == XSeries::one(6));

  // d_1 = q-1: H(x,1) = e^x, so h(n) = gamma_n/n! (integrality is implied by
  // the table conversion succeeding).
  const XSeries h = hand_enumerator(DeckSpec(q2, {{1, Natural(1)}}), 8);
  Natural fact(1);
  for (unsigned n = 1; n <= 8; ++n) {
    fact *= Natural(n);
    CHECK(h.coeff(n).eval(Rational(1)) == Rational(1) / Rational(fact));
  }
  const HandTable t = series_to_hand_table(h, q2);
  for (unsigned n = 0; n <= 8; ++n) {
    Natural row;
    for (unsigned k = 0; k <= n; ++k) row += t.at(n, k);
    CHECK(Rational(row) == Rational(gl_order(n, q2)) / Rational(factorial(n)));
  }

  // Single card of dimension r: h(kr,k) = gamma_kr / (k! gamma_r^k).
  const unsigned r = 2;
  const HandTable single =
      series_to_hand_table(hand_enumerator(DeckSpec(q2, {{r, Natural(1)}}), 8), q2);
  for (unsigned k = 1; k * r <= 8; ++k) {
    const Rational expected =
        Rational(gl_order(k * r, q2)) /
        (Rational(factorial(k)) * Rational(Natural::pow(gl_order(r, q2), k)));
    CHECK(Rational(single.at(k * r, k)) == expected);
  }
}

TEST_CASE("merge") {
  const FieldOrder q2(2);
  const DeckSpec f(q2, {{1, Natural(1)}, {2, Natural(3)}});
  CHECK(merge(f, DeckSpec(q2, {})).decks() == f.decks());

  const DeckSpec doubled =
      merge(DeckSpec(q2, {{1, Natural(1)}}), DeckSpec(q2, {{1, Natural(1)}}));
  CHECK(doubled.decks().at(1) == Natural(2));

  CHECK_THROWS_AS(merge(f, DeckSpec(FieldOrder(3), {})), std::invalid_argument);
}

TEST_CASE("merger multiplies hand enumerators and adds deck enumerators") {
  std::mt19937_64 rng(424242);
  for (unsigned long qv : {2, 3}) {
    for (int i = 0; i < 6; ++i) {
      const DeckSpec f1 = random_spec(rng, qv);
      const DeckSpec f2 = random_spec(rng, qv);
      CHECK(hand_enumerator(merge(f1, f2), 8) ==
            hand_enumerator(f1, 8) * hand_enumerator(f2, 8));
      CHECK(deck_enumerator(merge(f1, f2), 8) ==
            deck_enumerator(f1, 8) + deck_enumerator(f2, 8));
    }
  }
}

TEST_CASE("hand_counts_recursive") {
  const FieldOrder q2(2);

  SUBCASE("empty family") {
    const HandTable t = hand_counts_recursive(DeckSpec(q2, {}), 4);
    CHECK(t.at(0, 0) == Natural(1));
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned k = 0; k <= n; ++k) CHECK(t.at(n, k).is_zero());
  }

  SUBCASE("two cards of dimension 1 count diagonalizations") {
    // Oracle: 3 line splittings of F_2^2, 2^2 picture choices.
    const unsigned long diagonalizations =
        oracle::count_decompositions(2, 2, oracle::PrimeField(2)).value().get_ui() * 4;
    CHECK(diagonalizations == 12);
    const HandTable t = hand_counts_recursive(DeckSpec(q2, {{1, Natural(2)}}), 4);
    CHECK(t.at(2, 2) == Natural(diagonalizations));
  }

  SUBCASE("explicit convolution matches the exponential formula") {
    const DeckSpec f(q2, {{1, Natural(1)}, {2, Natural(1)}});
    const HandTable recursive = hand_counts_recursive(f, 6);
    const HandTable via_exp = series_to_hand_table(hand_enumerator(f, 6), q2);
    CHECK(recursive == via_exp);
    // Spot value: a 3-dimensional hand with one 1-card and one 2-card comes
    // from choosing a line/plane splitting.
    CHECK(recursive.at(3, 2) == gaussian_multinomial({1, 2}, q2));
  }
}

TEST_CASE("exponential formula equals direct convolution on random specs") {
  std::mt19937_64 rng(987);
  for (unsigned long qv : {2, 3}) {
    for (int i = 0; i < 8; ++i) {
      const DeckSpec f = random_spec(rng, qv);
      const unsigned order = 4 + (i % 7);  // up to 10
      CHECK(series_to_hand_table(hand_enumerator(f, order), f.q()) ==
            hand_counts_recursive(f, order));
    }
  }
}

TEST_CASE("hand counts vanish for k > n and for k = 0 < n") {
  std::mt19937_64 rng(555);
  const DeckSpec f = random_spec(rng, 2);
  const HandTable t = series_to_hand_table(hand_enumerator(f, 7), f.q());
  for (unsigned n = 1; n <= 7; ++n) {
    CHECK(t.at(n, 0).is_zero());
    for (unsigned k = n + 1; k <= 9; ++k) CHECK(t.at(n, k).is_zero());
  }
}

TEST_CASE("phi_polynomial") {
  const FieldOrder q2(2);
  const DeckSpec single(q2, {{1, Natural(1)}});
  CHECK(phi_polynomial(single, 0, 4) == YPoly::constant(Rational(1)));
  CHECK(phi_polynomial(single, 2, 4) == YPoly::monomial(2, Rational(3)));

  // All-ones decks: row 2 is {2 1}_q y + {2 2}_q y^2 with the counts coming
  // from the subspace census.
  const oracle::PrimeField p2(2);
  const Natural s21 = oracle::count_decompositions(2, 1, p2);
  const Natural s22 = oracle::count_decompositions(2, 2, p2);
  CHECK(s21 == Natural(1));
  CHECK(s22 == Natural(3));
  const DeckSpec ones(q2, {{1, Natural(1)}, {2, Natural(1)}});
  const YPoly row = phi_polynomial(ones, 2, 4);
  CHECK(row == YPoly::monomial(1, Rational(s21)) + YPoly::monomial(2, Rational(s22)));

  CHECK_THROWS_AS(phi_polynomial(single, 5, 4), std::invalid_argument);
}

TEST_CASE("binomial type identity") {
  std::mt19937_64 rng(31415);
  const DeckSpec trivial(FieldOrder(2), {{1, Natural(1)}});
  CHECK(binomial_type_check(trivial, 0));
  CHECK(binomial_type_check(trivial, 1));
  for (unsigned long qv : {2, 3}) {
    for (int i = 0; i < 4; ++i) {
      const DeckSpec f = random_spec(rng, qv, 4, 3);
      for (unsigned n = 0; n <= 8; n += 2) CHECK(binomial_type_check(f, n));
      CHECK(binomial_type_check(f, 5));
    }
  }
}

TEST_CASE("deck spec JSON schema") {
  const DeckSpec f = deck_spec_from_json(R"({"q": 2, "decks": {"1": 1, "3": 2}})");
  CHECK(f.q().value() == 2);
  CHECK(f.decks().at(1) == Natural(1));
  CHECK(f.decks().at(3) == Natural(2));

  const DeckSpec empty = deck_spec_from_json(R"({"q": 5, "decks": {}})");
  CHECK(empty.decks().empty());

  // Round trip.
  const DeckSpec again = deck_spec_from_json(deck_spec_to_json(f));
  CHECK(again.decks() == f.decks());
  CHECK(again.q() == f.q());

  CHECK_THROWS_AS(deck_spec_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"decks": {}})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": 1, "decks": {}})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": -2, "decks": {}})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": 2, "decks": {"0": 1}})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": 2, "decks": {"x": 1}})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": 2, "decks": {"1": -1}})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": 2, "decks": {"1": 1.5}})"), std::invalid_argument);
  CHECK_THROWS_AS(deck_spec_from_json(R"({"q": 2, "decks": []})"), std::invalid_argument);
}
