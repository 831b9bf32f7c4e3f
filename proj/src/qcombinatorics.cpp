#include "qexp/qcombinatorics.hpp"

#include <map>

#include "qexp/families.hpp"

namespace qexp {

MultiplicityVector::MultiplicityVector(std::vector<unsigned> b) : b_(std::move(b)) {
  if (!b_.empty() && b_.back() == 0)
    throw std::invalid_argument("MultiplicityVector: trailing zero entries");
}

unsigned MultiplicityVector::weight() const {
  unsigned w = 0;
  for (size_t i = 0; i < b_.size(); ++i) w += static_cast<unsigned>(i + 1) * b_[i];
  return w;
}

unsigned MultiplicityVector::parts() const {
  unsigned p = 0;
  for (unsigned c : b_) p += c;
  return p;
}

namespace {

void emit_vectors_of_weight(unsigned part, unsigned remaining, std::vector<unsigned>& prefix,
                            std::vector<MultiplicityVector>& out) {
  if (remaining == 0) {
    std::vector<unsigned> b = prefix;
    while (!b.empty() && b.back() == 0) b.pop_back();
    out.emplace_back(std::move(b));
    return;
  }
  if (part > remaining) return;
  for (unsigned c = remaining / part + 1; c-- > 0;) {
    prefix.push_back(c);
    emit_vectors_of_weight(part + 1, remaining - part * c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiplicityVector> enumerate_multiplicity_vectors(unsigned max_weight) {
  std::vector<MultiplicityVector> out;
  std::vector<unsigned> prefix;
  for (unsigned w = 0; w <= max_weight; ++w) emit_vectors_of_weight(1, w, prefix, out);
  return out;
}

namespace {

std::vector<Rational> inverse_gamma_table(unsigned n, const FieldOrder& q) {
  std::vector<Rational> inv(n + 1);
  for (unsigned i = 0; i <= n; ++i) inv[i] = Rational(1) / Rational(gl_order(i, q));
  return inv;
}

// Sum over compositions (n_1, ..., n_k) of n with n_i >= min_part of
// prod_i inv_gamma[n_i]. Lexicographic, streamed: the recursion carries the
// running product, nothing is materialized.
Rational composition_sum(unsigned n, unsigned k, unsigned min_part,
                         const std::vector<Rational>& inv_gamma) {
  Rational total;
  auto walk = [&](auto&& self, unsigned remaining, unsigned parts_left,
                  const Rational& prod) -> void {
    if (parts_left == 0) {
      if (remaining == 0) total += prod;
      return;
    }
    const unsigned reserve = min_part * (parts_left - 1);
    for (unsigned j = min_part; j + reserve <= remaining; ++j)
      self(self, remaining - j, parts_left - 1, prod * inv_gamma[j]);
  };
  walk(walk, n, k, Rational(1));
  return total;
}

// Hand table of the family with one card in every dimension 1..n, i.e. the
// coefficients of exp(y sum_r x^r/gamma_r).
HandTable all_ones_hand_table(unsigned n, const FieldOrder& q) {
  std::map<unsigned, Natural> decks;
  for (unsigned r = 1; r <= n; ++r) decks[r] = Natural(1);
  return series_to_hand_table(hand_enumerator(DeckSpec(q, decks), n), q);
}

// 1 + y sum_{m >= 1} x^m/gamma_m: hands are single cards labelled by one
// eigenvalue.
XSeries single_eigenvalue_enumerator(unsigned order, const FieldOrder& q) {
  XSeries s(order);
  s.set_coeff(0, YPoly::constant(Rational(1)));
  for (unsigned m = 1; m <= order; ++m)
    s.set_coeff(m, YPoly::monomial(1, Rational(1) / Rational(gl_order(m, q))));
  return s;
}

}  // namespace

Natural q_stirling_subset(unsigned n, unsigned k, const FieldOrder& q) {
  const auto inv_gamma = inverse_gamma_table(n, q);
  const Rational sum = composition_sum(n, k, 1, inv_gamma);
  const Natural direct =
      (Rational(gl_order(n, q)) * sum / Rational(factorial(k))).to_natural();
  const Natural via_series = all_ones_hand_table(n, q).at(n, k);
  if (!(direct == via_series))
    throw integrality_error("q_stirling_subset(" + std::to_string(n) + "," + std::to_string(k) +
                            "): composition sum " + direct.str() + " != series coefficient " +
                            via_series.str());
  return direct;
}

Natural q_bell(unsigned n, const FieldOrder& q) {
  Natural total;
  for (unsigned k = 0; k <= n; ++k) total += q_stirling_subset(n, k, q);
  return total;
}

Natural diagonalization_count(unsigned n, const FieldOrder& q) {
  const mpz_class qz(static_cast<unsigned long>(q.value()));
  Rational ratio_pow(1);
  for (unsigned i = 0; i < n; ++i) ratio_pow *= Rational(qz, qz - 1);
  const Natural direct =
      (Rational(gl_order(n, q)) / Rational(factorial(n)) * ratio_pow).to_natural();

  const DeckSpec f(q, {{1, Natural(q.value())}});
  const HandTable t = series_to_hand_table(hand_enumerator(f, n), q);
  Natural via_family;
  for (unsigned k = 0; k <= n; ++k) via_family += t.at(n, k);
  if (!(direct == via_family))
    throw integrality_error("diagonalization_count(" + std::to_string(n) +
                            "): closed form != family enumeration");
  return direct;
}

Natural invertible_diagonalization_count(unsigned n, const FieldOrder& q) {
  const Natural direct = (Rational(gl_order(n, q)) / Rational(factorial(n))).to_natural();
  const DeckSpec f(q, {{1, Natural(q.value() - 1)}});
  const HandTable t = series_to_hand_table(hand_enumerator(f, n), q);
  Natural via_family;
  for (unsigned k = 0; k <= n; ++k) via_family += t.at(n, k);
  if (!(direct == via_family))
    throw integrality_error("invertible_diagonalization_count(" + std::to_string(n) +
                            "): closed form != family enumeration");
  return direct;
}

Natural diagonalizable_count(unsigned n, const FieldOrder& q) {
  const auto inv_gamma = inverse_gamma_table(n, q);
  const Natural direct =
      (Rational(gl_order(n, q)) *
       composition_sum(n, static_cast<unsigned>(q.value()), 0, inv_gamma))
          .to_natural();

  const XSeries merged = XSeries::pow(single_eigenvalue_enumerator(n, q), q.value());
  const HandTable t = series_to_hand_table(merged, q);
  Natural via_series;
  for (unsigned k = 0; k <= n; ++k) via_series += t.at(n, k);
  if (!(direct == via_series))
    throw integrality_error("diagonalizable_count(" + std::to_string(n) +
                            "): composition sum != merged-family series");
  return direct;
}

Natural diagonalizable_count_by_eigenvalues(unsigned n, unsigned k, const FieldOrder& q) {
  const auto inv_gamma = inverse_gamma_table(n, q);
  // Choose which k of the q eigenvalue pictures occur, then an ordered
  // splitting into k nonzero eigenspaces.
  const Natural direct = (Rational(binomial(q.value(), k)) * Rational(gl_order(n, q)) *
                          composition_sum(n, k, 1, inv_gamma))
                             .to_natural();

  const XSeries merged = XSeries::pow(single_eigenvalue_enumerator(n, q), q.value());
  const Natural via_series = series_to_hand_table(merged, q).at(n, k);
  if (!(direct == via_series))
    throw integrality_error("diagonalizable_count_by_eigenvalues(" + std::to_string(n) + "," +
                            std::to_string(k) + "): two routes disagree");
  return direct;
}

Natural projection_count(unsigned n, const FieldOrder& q) {
  const auto inv_gamma = inverse_gamma_table(n, q);
  const Natural direct =
      (Rational(gl_order(n, q)) * composition_sum(n, 2, 0, inv_gamma)).to_natural();
  if (n >= 1) {
    // The ordered-pair form: 2 {n 2}_q + 2, the trivial decompositions being
    // the identity and zero matrices. Valid only for n >= 1 (the two
    // coincide on the empty matrix).
    const Natural via_stirling = Natural(2) * q_stirling_subset(n, 2, q) + Natural(2);
    if (!(direct == via_stirling))
      throw integrality_error("projection_count(" + std::to_string(n) +
                              "): the two formulas disagree");
  }
  return direct;
}

Natural irreducible_poly_count(unsigned d, const FieldOrder& q) {
  if (d < 1) throw std::invalid_argument("irreducible_poly_count: d must be >= 1");
  auto moebius = [](unsigned m) -> int {
    int mu = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  mpz_class acc = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = moebius(e);
    if (mu == 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), q.value(), d / e);
    acc += mu > 0 ? term : -term;
  }
  return Rational(acc, mpz_class(d)).to_natural();
}

Natural centralizer_order(unsigned d, const MultiplicityVector& b, const FieldOrder& q) {
  if (d < 1) throw std::invalid_argument("centralizer_order: d must be >= 1");
  const auto& entries = b.entries();
  const Natural base(q.value());
  Natural c(1);
  for (size_t i = 1; i <= entries.size(); ++i) {
    // Boxes in the first i columns of the Ferrers diagram of b.
    unsigned long di = 0;
    for (size_t j = 1; j < i; ++j) di += j * entries[j - 1];
    for (size_t j = i; j <= entries.size(); ++j) di += i * entries[j - 1];
    for (unsigned long j = 1; j <= entries[i - 1]; ++j)
      c *= Natural::pow(base, di * d) - Natural::pow(base, (di - j) * d);
  }
  return c;
}

XSeries cycle_factor(unsigned d, const FieldOrder& q, unsigned order) {
  if (d < 1) throw std::invalid_argument("cycle_factor: d must be >= 1");
  XSeries s(order);
  std::vector<YPoly> per_degree(order + 1);
  for (const MultiplicityVector& b : enumerate_multiplicity_vectors(order / d)) {
    const unsigned xdeg = d * b.weight();
    const Rational coeff = Rational(1) / Rational(centralizer_order(d, b, q));
    per_degree[xdeg] += YPoly::monomial(b.parts(), coeff);
  }
  for (unsigned n = 0; n <= order; ++n) s.set_coeff(n, std::move(per_degree[n]));
  return s;
}

HandTable stirling_cycle_table(unsigned n_max, const FieldOrder& q, bool include_t) {
  XSeries prod = XSeries::one(n_max);
  for (unsigned d = 1; d <= n_max; ++d) {
    Natural m_d = irreducible_poly_count(d, q);
    if (d == 1 && !include_t) m_d = m_d - Natural(1);  // omit phi(t) = t
    prod = prod * XSeries::pow(cycle_factor(d, q, n_max), m_d);
  }
  return series_to_hand_table(prod, q);
}

Natural q_stirling_cycle(unsigned n, unsigned k, const FieldOrder& q, bool include_t) {
  return stirling_cycle_table(n, q, include_t).at(n, k);
}

}  // namespace qexp
