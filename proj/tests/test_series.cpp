#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qexp/oracle.hpp"
#include "qexp/series.hpp"

using namespace qexp;

namespace {

Rational frac(long num, long den) { return Rational(mpz_class(num), mpz_class(den)); }

XSeries monomial_series(unsigned order, unsigned n, Rational c) {
  XSeries s(order);
  s.set_coeff(n, YPoly::constant(std::move(c)));
  return s;
}

XSeries random_series(std::mt19937_64& rng, unsigned order, bool zero_constant_term) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<unsigned> ydeg(0, 3);
  XSeries s(order);
  for (unsigned n = zero_constant_term ? 1 : 0; n <= order; ++n) {
    YPoly p;
    const unsigned top = std::min(ydeg(rng), order);
    for (unsigned k = 0; k <= top; ++k) p.set_coeff(k, frac(num(rng), den(rng)));
    s.set_coeff(n, std::move(p));
  }
  return s;
}

}  // namespace

TEST_CASE("YPoly canonical form and arithmetic") {
  YPoly p;
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  p.set_coeff(2, frac(1, 2));
  CHECK(p.degree() == 2);
  p.set_coeff(2, Rational(0));
  CHECK(p.is_zero());  // trailing zeros trimmed

  const YPoly a = YPoly::monomial(1, Rational(2)) + YPoly::constant(Rational(1));
  const YPoly b = YPoly::monomial(1, Rational(-2));
  CHECK((a + b) == YPoly::constant(Rational(1)));
  CHECK(YPoly::mul(a, a, 8).coeff(2) == Rational(4));
  CHECK(YPoly::mul(a, a, 1).degree() <= 1);  // cap drops the square term
  CHECK(a.eval(Rational(3)) == Rational(7));
}

TEST_CASE("series addition") {
  const XSeries x = monomial_series(4, 1, Rational(1));
  const XSeries x2 = monomial_series(4, 2, Rational(1));
  CHECK(x + XSeries(4) == x);
  XSeries expected(4);
  expected.set_coeff(1, YPoly::constant(Rational(1)));
  expected.set_coeff(2, YPoly::constant(Rational(1)));
  CHECK(x + x2 == expected);
  CHECK_THROWS_AS(x + XSeries(5), std::invalid_argument);
}

TEST_CASE("series multiplication") {
  const XSeries one = XSeries::one(6);
  std::mt19937_64 rng(101);
  const XSeries a = random_series(rng, 6, false);
  CHECK(a * one == a);

  // (1+x)(1-x) = 1-x^2
  XSeries plus = XSeries::one(4), minus = XSeries::one(4);
  plus.set_coeff(1, YPoly::constant(Rational(1)));
  minus.set_coeff(1, YPoly::constant(Rational(-1)));
  XSeries expected = XSeries::one(4);
  expected.set_coeff(2, YPoly::constant(Rational(-1)));
  CHECK(plus * minus == expected);
  CHECK_THROWS_AS(plus * XSeries::one(9), std::invalid_argument);
}

TEST_CASE("series multiplication is associative and commutative") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 12; ++i) {
    const XSeries a = random_series(rng, 8, false);
    const XSeries b = random_series(rng, 8, false);
    const XSeries c = random_series(rng, 8, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("series exponential") {
  CHECK(XSeries::exp(XSeries(5)) == XSeries::one(5));

  // exp(x): coefficients 1/n!.
  const XSeries ex = XSeries::exp(monomial_series(6, 1, Rational(1)));
  Natural fact(1);
  for (unsigned n = 1; n <= 6; ++n) {
    fact *= Natural(n);
    CHECK(ex.coeff(n) == YPoly::constant(Rational(1) / Rational(fact)));
  }

  CHECK_THROWS_AS(XSeries::exp(XSeries::one(3)), std::invalid_argument);
}

TEST_CASE("exp of y x / gamma_1 counts unordered line splittings at q=2") {
  // Independent oracle first: unordered splittings of F_2^2 into two lines.
  const Natural splittings = oracle::count_decompositions(2, 2, oracle::PrimeField(2));
  CHECK(splittings == Natural(3));

  const FieldOrder q2(2);
  XSeries g(4);
  g.set_coeff(1, YPoly::monomial(1, Rational(1) / Rational(gl_order(1, q2))));
  const XSeries h = XSeries::exp(g);
  CHECK(h.coeff(2).coeff(2) * Rational(gl_order(2, q2)) == Rational(splittings));
}

TEST_CASE("exp turns sums into products") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 10; ++i) {
    const XSeries a = random_series(rng, 8, true);
    const XSeries b = random_series(rng, 8, true);
    CHECK(XSeries::exp(a + b) == XSeries::exp(a) * XSeries::exp(b));
  }
}

TEST_CASE("series powers") {
  std::mt19937_64 rng(5150);
  const XSeries a = random_series(rng, 6, false);
  CHECK(XSeries::pow(a, 0ul) == XSeries::one(6));
  CHECK(XSeries::pow(a, 1ul) == a);
  CHECK(XSeries::pow(a, 5ul) == a * (a * (a * (a * a))));

  // (exp(y x^r/gamma_r))^d = exp(y d x^r/gamma_r)
  const FieldOrder q2(2);
  const unsigned r = 2, d = 3;
  XSeries g(8);
  g.set_coeff(r, YPoly::monomial(1, Rational(1) / Rational(gl_order(r, q2))));
  XSeries gd(8);
  gd.set_coeff(r, YPoly::monomial(1, Rational(Natural(d)) / Rational(gl_order(r, q2))));
  CHECK(XSeries::pow(XSeries::exp(g), d) == XSeries::exp(gd));
}

TEST_CASE("series_to_hand_table") {
  const FieldOrder q2(2);

  SUBCASE("constant one gives only h(0,0)=1") {
    const HandTable t = series_to_hand_table(XSeries::one(3), q2);
    CHECK(t.at(0, 0) == Natural(1));
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned k = 0; k <= n; ++k) CHECK(t.at(n, k).is_zero());
  }

  SUBCASE("single-card deck gives the splitting counts") {
    XSeries g(4);
    g.set_coeff(1, YPoly::monomial(1, Rational(1)));  // gamma_1 = 1 at q=2
    CHECK(series_to_hand_table(XSeries::exp(g), q2).at(2, 2) == Natural(3));
  }

  SUBCASE("two-card deck counts diagonalizations") {
    // Oracle first: splittings into two lines, each line then carrying one of
    // the two pictures: 3 * 2^2 = 12.
    const unsigned long expected =
        oracle::count_decompositions(2, 2, oracle::PrimeField(2)).value().get_ui() * 4;
    CHECK(expected == 12);
    XSeries g(4);
    g.set_coeff(1, YPoly::monomial(1, Rational(2)));
    CHECK(series_to_hand_table(XSeries::exp(g), q2).at(2, 2) == Natural(expected));
  }

  SUBCASE("non-integer scaled coefficient is rejected") {
    XSeries bad = XSeries::one(2);
    bad.set_coeff(1, YPoly::monomial(1, frac(1, 3)));  // gamma_1 = 1: 1/3 not integral
    CHECK_THROWS_AS(series_to_hand_table(bad, q2), integrality_error);
  }

  SUBCASE("negative scaled coefficient is rejected") {
    XSeries bad = XSeries::one(2);
    bad.set_coeff(1, YPoly::monomial(1, Rational(-1)));
    CHECK_THROWS_AS(series_to_hand_table(bad, q2), integrality_error);
  }

  SUBCASE("y-degree above x-degree is rejected") {
    XSeries bad = XSeries::one(2);
    bad.set_coeff(1, YPoly::monomial(2, Rational(1)));
    CHECK_THROWS_AS(series_to_hand_table(bad, q2), integrality_error);
  }
}

TEST_CASE("hand table round trip") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<unsigned long> count(0, 40);
  for (unsigned long qv : {2, 3, 5}) {
    const FieldOrder q(qv);
    HandTable t(6);
    for (unsigned n = 1; n <= 6; ++n)
      for (unsigned k = 1; k <= n; ++k) t.set(n, k, Natural(count(rng)));
    CHECK(series_to_hand_table(hand_table_to_series(t, q), q) == t);
  }
}

TEST_CASE("truncation soundness") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 8; ++i) {
    const XSeries a = random_series(rng, 9, false);
    const XSeries b = random_series(rng, 9, false);
    const unsigned m = 4 + (i % 3);
    CHECK(truncate(a * b, m) == truncate(a, m) * truncate(b, m));
    const XSeries g = random_series(rng, 9, true);
    CHECK(truncate(XSeries::exp(g), m) == XSeries::exp(truncate(g, m)));
  }
  CHECK_THROWS_AS(truncate(XSeries(3), 5), std::invalid_argument);
}

TEST_CASE("hand table invariants are enforced") {
  HandTable t(3);
  CHECK(t.at(0, 0) == Natural(1));
  CHECK_THROWS_AS(t.set(0, 0, Natural(2)), std::invalid_argument);
  CHECK_THROWS_AS(t.set(2, 0, Natural(1)), std::invalid_argument);
  CHECK_THROWS_AS(t.set(2, 3, Natural(1)), std::out_of_range);
  CHECK(t.at(3, 7).is_zero());  // above the diagonal reads as zero
}
