#pragma once

#include <map>
#include <string>

#include "qexp/arith.hpp"
#include "qexp/series.hpp"

namespace qexp {

/// A q-exponential family, represented purely by its deck-size function:
/// dimension n >= 1 maps to the number of cards d_n in the dimension-n deck.
/// Pictures are never materialized; every count depends only on cardinalities.
class DeckSpec {
 public:
  DeckSpec(FieldOrder q, std::map<unsigned, Natural> decks);

  const FieldOrder& q() const { return q_; }
  /// Canonical map: keys >= 1, zero counts removed.
  const std::map<unsigned, Natural>& decks() const { return decks_; }

 private:
  FieldOrder q_;
  std::map<unsigned, Natural> decks_;
};

/// D(x) = sum_n d_n x^n / gl_order(n), truncated at `order`.
XSeries deck_enumerator(const DeckSpec& f, unsigned order);

/// H(x,y) = exp(y D(x)), truncated at `order`.
XSeries hand_enumerator(const DeckSpec& f, unsigned order);

/// Disjoint union of decks: d_n adds pointwise. Families must share q.
DeckSpec merge(const DeckSpec& f1, const DeckSpec& f2);

/// Hand counts built without any series exponential: single-deck tables
/// h_r(kr,k) = d_r^k * gl_order(kr) / (k! gl_order(r)^k), combined pairwise by
/// the splitting-count convolution
///   h(n,k) = sum gl_order(n)/(gl_order(n')*gl_order(n-n')) h'(n',k') h''(n-n',k-k').
/// Serves as the in-repo oracle for the exponential formula.
HandTable hand_counts_recursive(const DeckSpec& f, unsigned order);

/// phi_n(y) = sum_k h(n,k) y^k: row n of the hand table as a polynomial.
YPoly phi_polynomial(const DeckSpec& f, unsigned n, unsigned order);

/// Expands phi_n(u+v) and sum_m gl_order(n)/(gl_order(m) gl_order(n-m))
/// phi_m(u) phi_(n-m)(v) as exact bivariate polynomials and compares them.
bool binomial_type_check(const DeckSpec& f, unsigned n);

/// Parses {"q": <int>, "decks": {"<n>": <d_n>, ...}}. Keys are decimal
/// strings, values nonnegative integers. Throws std::invalid_argument on any
/// schema violation.
DeckSpec deck_spec_from_json(const std::string& json_text);
std::string deck_spec_to_json(const DeckSpec& f);

}  // namespace qexp
