#pragma once

#include <vector>

#include "qexp/arith.hpp"

namespace qexp {

/// Polynomial in y with exact rational coefficients, trailing zeros trimmed.
class YPoly {
 public:
  YPoly() = default;

  static YPoly constant(Rational c);
  static YPoly monomial(unsigned k, Rational c);

  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(unsigned k) const;
  void set_coeff(unsigned k, Rational v);

  YPoly& operator+=(const YPoly& o);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(const YPoly& a, const YPoly& b);

  /// Product with the y-degree capped (terms above the cap are dropped).
  static YPoly mul(const YPoly& a, const YPoly& b, unsigned degree_cap);

  YPoly scaled(const Rational& s) const;
  Rational eval(const Rational& y) const;

  friend bool operator==(const YPoly& a, const YPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Power series in x truncated at a fixed order N (inclusive), with YPoly
/// coefficients. Binary operations require matching orders; nothing
/// re-truncates silently. y-degrees are capped at N as well, which loses
/// nothing for the series arising here (every card has dimension >= 1, so
/// y-degree never exceeds x-degree).
class XSeries {
 public:
  explicit XSeries(unsigned order) : order_(order), c_(order + 1) {}
  static XSeries one(unsigned order);

  unsigned order() const { return order_; }
  const YPoly& coeff(unsigned n) const;
  void set_coeff(unsigned n, YPoly p);

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);

  /// exp(g) for g with zero constant term, via the derivative recurrence
  /// n*F_n = sum_{m=1..n} m*g_m*F_{n-m}.
  static XSeries exp(const XSeries& g);

  /// a^e by repeated squaring with truncation.
  static XSeries pow(const XSeries& a, const Natural& e);
  static XSeries pow(const XSeries& a, unsigned long e) { return pow(a, Natural(e)); }

  friend bool operator==(const XSeries& a, const XSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  unsigned order_;
  std::vector<YPoly> c_;
};

/// Explicit re-truncation to a lower (or equal) order.
XSeries truncate(const XSeries& s, unsigned new_order);

/// Triangular table of hand counts h(n,k), 0 <= k <= n <= N.
/// h(0,0) = 1 and h(n,0) = h(0,k) = 0 for n,k > 0, by construction.
class HandTable {
 public:
  explicit HandTable(unsigned order);

  unsigned order() const { return order_; }
  const Natural& at(unsigned n, unsigned k) const;
  void set(unsigned n, unsigned k, Natural v);

  friend bool operator==(const HandTable& a, const HandTable& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  unsigned order_;
  std::vector<std::vector<Natural>> rows_;
};

/// h(n,k) = gl_order(n) * [x^n y^k] H. Every scaled coefficient must be a
/// nonnegative integer and the table invariants must hold; anything else
/// signals an inconsistent family/series and throws integrality_error.
HandTable series_to_hand_table(const XSeries& series, const FieldOrder& q);

/// Inverse of series_to_hand_table.
XSeries hand_table_to_series(const HandTable& table, const FieldOrder& q);

}  // namespace qexp
