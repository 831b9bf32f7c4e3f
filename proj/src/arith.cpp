#include "qexp/arith.hpp"

#include <numeric>
#include <vector>

namespace qexp {

FieldOrder::FieldOrder(unsigned long q) : q_(q) {
  if (q < 2) throw std::invalid_argument("FieldOrder: q must be >= 2");
  unsigned long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  char_ = (q % p == 0) ? p : q;
  // q is a prime power iff it is a power of its smallest prime factor.
  unsigned long rest = q;
  while (rest % char_ == 0) rest /= char_;
  prime_power_ = (rest == 1);
}

Natural factorial(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return Natural(std::move(r));
}

Natural binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Natural(std::move(r));
}

Natural gl_order(unsigned n, const FieldOrder& q) {
  mpz_class qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), q.value(), n);
  mpz_class acc = 1;
  mpz_class qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    acc *= qn - qi;
    qi *= q.value();
  }
  return Natural(std::move(acc));
}

Natural gaussian_multinomial(std::span<const unsigned> parts, const FieldOrder& q) {
  unsigned n = 0;
  for (unsigned p : parts) n += p;
  Rational r(gl_order(n, q));
  for (unsigned p : parts) r /= Rational(gl_order(p, q));
  return r.to_natural();
}

Natural gaussian_multinomial(std::initializer_list<unsigned> parts, const FieldOrder& q) {
  return gaussian_multinomial(std::span<const unsigned>(parts.begin(), parts.size()), q);
}

}  // namespace qexp
