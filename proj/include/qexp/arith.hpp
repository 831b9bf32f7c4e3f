#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace qexp {

/// Thrown when a quantity that must be a (nonnegative) integer turns out not
/// to be one. This never means bad user input: every such division in the
/// library is a count, so a failure here is a formula transcription bug.
struct integrality_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision nonnegative integer.
class Natural {
 public:
  Natural() : v_(0) {}
  Natural(unsigned long v) : v_(v) {}
  explicit Natural(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) throw std::invalid_argument("Natural: negative value " + v_.get_str());
  }

  static Natural from_string(const std::string& s) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw std::invalid_argument("Natural: bad decimal string '" + s + "'");
    return Natural(std::move(z));
  }

  const mpz_class& value() const { return v_; }
  std::string str() const { return v_.get_str(); }
  bool is_zero() const { return sgn(v_) == 0; }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

  /// Checked subtraction; the difference must stay nonnegative.
  friend Natural operator-(const Natural& a, const Natural& b) {
    if (a.v_ < b.v_) throw std::invalid_argument("Natural: subtraction underflow");
    return Natural(mpz_class(a.v_ - b.v_));
  }

  static Natural pow(const Natural& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), e);
    return Natural(std::move(r));
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpz_class v_;
};

/// Exact rational number, kept reduced with a positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const Natural& n) : v_(n.value()) {}
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  mpz_class to_integer() const {
    if (!is_integer()) throw integrality_error("Rational: " + str() + " is not an integer");
    return v_.get_num();
  }
  Natural to_natural() const {
    if (!is_integer() || sgn(v_) < 0)
      throw integrality_error("Rational: " + str() + " is not a nonnegative integer");
    return Natural(v_.get_num());
  }

  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

/// Order of the coefficient field. The formula engine accepts any q >= 2 (the
/// identities are formal in q); is_prime_power() tells callers whether the
/// counts carry vector-space meaning.
class FieldOrder {
 public:
  explicit FieldOrder(unsigned long q);

  unsigned long value() const { return q_; }
  bool is_prime_power() const { return prime_power_; }
  /// Smallest prime factor; equals the characteristic when q is a prime power.
  unsigned long characteristic() const { return char_; }

  friend bool operator==(const FieldOrder& a, const FieldOrder& b) { return a.q_ == b.q_; }

 private:
  unsigned long q_;
  unsigned long char_;
  bool prime_power_;
};

Natural factorial(unsigned long k);
Natural binomial(unsigned long n, unsigned long k);

/// Order of GL_n(F_q): product of (q^n - q^i) for 0 <= i < n. gl_order(0) = 1.
Natural gl_order(unsigned n, const FieldOrder& q);

/// gl_order(sum parts) / prod gl_order(part): the number of ordered splittings
/// of an n-dimensional space into subspaces of the given dimensions. The
/// division runs through exact rationals and asserts integrality.
Natural gaussian_multinomial(std::span<const unsigned> parts, const FieldOrder& q);
Natural gaussian_multinomial(std::initializer_list<unsigned> parts, const FieldOrder& q);

}  // namespace qexp
