#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qexp/arith.hpp"
#include "qexp/oracle.hpp"

using namespace qexp;

TEST_CASE("Natural basics") {
  CHECK(Natural(0).is_zero());
  CHECK(Natural(3) + Natural(4) == Natural(7));
  CHECK(Natural(3) * Natural(4) == Natural(12));
  CHECK(Natural(9) - Natural(4) == Natural(5));
  CHECK_THROWS_AS(Natural(3) - Natural(4), std::invalid_argument);
  CHECK_THROWS_AS(Natural(mpz_class(-1)), std::invalid_argument);
  CHECK(Natural::pow(Natural(2), 70).str() == "1180591620717411303424");
  CHECK(Natural::from_string("1180591620717411303424") == Natural::pow(Natural(2), 70));
  CHECK_THROWS_AS(Natural::from_string("12x"), std::invalid_argument);
  CHECK(Natural(2) < Natural(10));
}

TEST_CASE("Rational stays reduced with positive denominator") {
  Rational r(mpz_class(6), mpz_class(4));
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  Rational neg(mpz_class(1), mpz_class(-2));
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

  CHECK(Rational(Natural(7)).to_natural() == Natural(7));
  CHECK_THROWS_AS(Rational(mpz_class(3), mpz_class(2)).to_natural(), integrality_error);
  CHECK_THROWS_AS(Rational(-2).to_natural(), integrality_error);
  CHECK(Rational(-2).to_integer() == -2);
  CHECK((Rational(mpz_class(1), mpz_class(3)) + Rational(mpz_class(1), mpz_class(6))).str() ==
        "1/2");
}

TEST_CASE("Rational field laws on randomized inputs") {
  std::mt19937_64 rng(20240212);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  auto draw = [&] { return Rational(mpz_class(num(rng)), mpz_class(den(rng))); };
  for (int i = 0; i < 200; ++i) {
    const Rational x = draw(), y = draw(), z = draw();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("FieldOrder prime-power detection") {
  CHECK_THROWS_AS(FieldOrder(0), std::invalid_argument);
  CHECK_THROWS_AS(FieldOrder(1), std::invalid_argument);
  for (unsigned long q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) CHECK(FieldOrder(q).is_prime_power());
  for (unsigned long q : {6, 10, 12, 14, 15, 18, 20}) CHECK(!FieldOrder(q).is_prime_power());
  CHECK(FieldOrder(16).characteristic() == 2);
  CHECK(FieldOrder(9).characteristic() == 3);
  CHECK(FieldOrder(7).characteristic() == 7);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == Natural(1));
  CHECK(factorial(4) == Natural(24));
  CHECK(factorial(10) == Natural(3628800));
}

TEST_CASE("gl_order values") {
  const FieldOrder q2(2);
  CHECK(gl_order(0, q2) == Natural(1));
  CHECK(gl_order(1, q2) == Natural(1));
  // Direct product evaluation: (8-1)(8-2)(8-4).
  CHECK(gl_order(3, q2) == Natural((8 - 1) * (8 - 2) * (8 - 4)));
  CHECK(gl_order(3, q2) == Natural(168));
}

TEST_CASE("gl_order strictly increasing for n >= 1") {
  for (unsigned long qv : {2, 3, 16}) {
    const FieldOrder q(qv);
    for (unsigned n = 1; n < 12; ++n) CHECK(gl_order(n, q) < gl_order(n + 1, q));
  }
}

TEST_CASE("gl_order stays exact at the extreme of the supported range") {
  // gamma_24 at q=16 runs to hundreds of digits.
  const std::string g = gl_order(24, FieldOrder(16)).str();
  CHECK(g.size() > 300);
  CHECK(g.front() != '0');
}

namespace {

// Independent count of ordered pairs of complementary lines in F_2^2: stack
// the two basis rows and ask for full rank.
unsigned ordered_complementary_line_pairs_f2() {
  const oracle::PrimeField f2(2);
  std::vector<oracle::Subspace> lines;
  for (const auto& s : oracle::enumerate_subspaces(2, f2))
    if (s.dim() == 1) lines.push_back(s);
  unsigned count = 0;
  for (const auto& a : lines)
    for (const auto& b : lines) {
      oracle::FqMatrix m(2, f2);
      for (unsigned j = 0; j < 2; ++j) {
        m.set(0, j, a.basis()[0][j]);
        m.set(1, j, b.basis()[0][j]);
      }
      if (m.rank() == 2) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("gaussian_multinomial values") {
  const FieldOrder q2(2);
  CHECK(ordered_complementary_line_pairs_f2() == 6);
  CHECK(gaussian_multinomial({1, 1}, q2) == Natural(6));
  CHECK(gaussian_multinomial({3}, q2) == Natural(1));
  CHECK(gaussian_multinomial({2, 1}, q2) == Natural(168 / 6));
  CHECK(gaussian_multinomial({}, q2) == Natural(1));
}

TEST_CASE("gaussian_multinomial is invariant under permutation of parts") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned> part(0, 4);
  for (unsigned long qv : {2, 3}) {
    const FieldOrder q(qv);
    for (int i = 0; i < 50; ++i) {
      std::vector<unsigned> parts(3);
      for (auto& p : parts) p = part(rng);
      std::vector<unsigned> shuffled = parts;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(gaussian_multinomial(parts, q) == gaussian_multinomial(shuffled, q));
    }
  }
}

TEST_CASE("gaussian_multinomial composes over refinements") {
  for (unsigned long qv : {2, 3}) {
    const FieldOrder q(qv);
    for (unsigned a = 0; a <= 8; ++a)
      for (unsigned b = 0; a + b <= 8; ++b)
        for (unsigned c = 0; a + b + c <= 8; ++c) {
          const Natural whole = gaussian_multinomial({a, b, c}, q);
          const Natural staged =
              gaussian_multinomial({a + b, c}, q) * gaussian_multinomial({a, b}, q);
          CHECK(whole == staged);
        }
  }
}
