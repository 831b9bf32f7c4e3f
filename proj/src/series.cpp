#include "qexp/series.hpp"

#include <algorithm>

namespace qexp {

namespace {
const Rational kZeroRational{};
const YPoly kZeroPoly{};
}  // namespace

YPoly YPoly::constant(Rational c) { return monomial(0, std::move(c)); }

YPoly YPoly::monomial(unsigned k, Rational c) {
  YPoly p;
  p.set_coeff(k, std::move(c));
  return p;
}

const Rational& YPoly::coeff(unsigned k) const {
  return k < c_.size() ? c_[k] : kZeroRational;
}

void YPoly::set_coeff(unsigned k, Rational v) {
  if (k >= c_.size()) {
    if (v.is_zero()) return;
    c_.resize(k + 1);
  }
  c_[k] = std::move(v);
  trim();
}

void YPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

YPoly operator-(const YPoly& a, const YPoly& b) {
  YPoly r = a;
  if (b.c_.size() > r.c_.size()) r.c_.resize(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

YPoly YPoly::mul(const YPoly& a, const YPoly& b, unsigned degree_cap) {
  YPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  const size_t top = std::min<size_t>(a.c_.size() + b.c_.size() - 1, degree_cap + 1);
  r.c_.assign(top, Rational());
  for (size_t i = 0; i < a.c_.size() && i < top; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size() && i + j < top; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

YPoly YPoly::scaled(const Rational& s) const {
  YPoly r;
  if (s.is_zero()) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c *= s;
  return r;
}

Rational YPoly::eval(const Rational& y) const {
  Rational acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * y + c_[i];
  return acc;
}

XSeries XSeries::one(unsigned order) {
  XSeries s(order);
  s.c_[0] = YPoly::constant(Rational(1));
  return s;
}

const YPoly& XSeries::coeff(unsigned n) const {
  return n <= order_ ? c_[n] : kZeroPoly;
}

void XSeries::set_coeff(unsigned n, YPoly p) {
  if (n > order_) throw std::invalid_argument("XSeries: degree exceeds truncation order");
  if (p.degree() > static_cast<int>(order_)) {
    YPoly capped;
    for (unsigned k = 0; k <= order_; ++k) capped.set_coeff(k, p.coeff(k));
    p = std::move(capped);
  }
  c_[n] = std::move(p);
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("XSeries: order mismatch in +");
  XSeries r = a;
  for (unsigned n = 0; n <= r.order_; ++n) r.c_[n] += b.c_[n];
  return r;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("XSeries: order mismatch in *");
  const unsigned N = a.order_;
  XSeries r(N);
  for (unsigned i = 0; i <= N; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= N; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += YPoly::mul(a.c_[i], b.c_[j], N);
    }
  }
  return r;
}

XSeries XSeries::exp(const XSeries& g) {
  if (!g.c_[0].is_zero())
    throw std::invalid_argument("XSeries::exp: nonzero constant term");
  const unsigned N = g.order_;
  XSeries f(N);
  f.c_[0] = YPoly::constant(Rational(1));
  for (unsigned n = 1; n <= N; ++n) {
    YPoly acc;
    for (unsigned m = 1; m <= n; ++m) {
      if (g.c_[m].is_zero()) continue;
      acc += YPoly::mul(g.c_[m], f.c_[n - m], N).scaled(Rational(static_cast<long>(m)));
    }
    f.c_[n] = acc.scaled(Rational(mpz_class(1), mpz_class(n)));
  }
  return f;
}

XSeries XSeries::pow(const XSeries& a, const Natural& e) {
  XSeries result = XSeries::one(a.order_);
  const mpz_class& bits = e.value();
  const size_t nbits = e.is_zero() ? 0 : mpz_sizeinbase(bits.get_mpz_t(), 2);
  for (size_t i = nbits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(bits.get_mpz_t(), i)) result = result * a;
  }
  return result;
}

XSeries truncate(const XSeries& s, unsigned new_order) {
  if (new_order > s.order()) throw std::invalid_argument("truncate: cannot extend order");
  XSeries r(new_order);
  for (unsigned n = 0; n <= new_order; ++n) {
    YPoly capped;
    for (unsigned k = 0; k <= new_order; ++k) capped.set_coeff(k, s.coeff(n).coeff(k));
    r.set_coeff(n, std::move(capped));
  }
  return r;
}

HandTable::HandTable(unsigned order) : order_(order), rows_(order + 1) {
  for (unsigned n = 0; n <= order; ++n) rows_[n].assign(n + 1, Natural());
  rows_[0][0] = Natural(1);
}

const Natural& HandTable::at(unsigned n, unsigned k) const {
  static const Natural kZero{};
  if (n > order_) throw std::out_of_range("HandTable: n exceeds order");
  return k <= n ? rows_[n][k] : kZero;
}

void HandTable::set(unsigned n, unsigned k, Natural v) {
  if (n > order_ || k > n) throw std::out_of_range("HandTable: index outside triangle");
  if (n == 0 && k == 0 && !(v == Natural(1)))
    throw std::invalid_argument("HandTable: h(0,0) must be 1");
  if (n > 0 && k == 0 && !v.is_zero())
    throw std::invalid_argument("HandTable: h(n,0) must be 0 for n > 0");
  rows_[n][k] = std::move(v);
}

HandTable series_to_hand_table(const XSeries& series, const FieldOrder& q) {
  const unsigned N = series.order();
  HandTable t(N);
  for (unsigned n = 0; n <= N; ++n) {
    const YPoly& p = series.coeff(n);
    if (p.degree() > static_cast<int>(n))
      throw integrality_error("series_to_hand_table: y-degree exceeds x-degree at n=" +
                              std::to_string(n));
    const Rational gamma(gl_order(n, q));
    for (unsigned k = 0; k <= n; ++k) {
      Natural h = (p.coeff(k) * gamma).to_natural();
      if (n == 0 && k == 0) {
        if (!(h == Natural(1)))
          throw integrality_error("series_to_hand_table: h(0,0) = " + h.str() + ", expected 1");
        continue;
      }
      if (k == 0 && !h.is_zero())
        throw integrality_error("series_to_hand_table: h(" + std::to_string(n) + ",0) nonzero");
      if (!h.is_zero()) t.set(n, k, std::move(h));
    }
  }
  return t;
}

XSeries hand_table_to_series(const HandTable& table, const FieldOrder& q) {
  const unsigned N = table.order();
  XSeries s(N);
  for (unsigned n = 0; n <= N; ++n) {
    const Rational inv_gamma = Rational(1) / Rational(gl_order(n, q));
    YPoly p;
    for (unsigned k = 0; k <= n; ++k) {
      if (table.at(n, k).is_zero()) continue;
      p.set_coeff(k, Rational(table.at(n, k)) * inv_gamma);
    }
    s.set_coeff(n, std::move(p));
  }
  return s;
}

}  // namespace qexp
