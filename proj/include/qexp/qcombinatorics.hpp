#pragma once

#include <vector>

#include "qexp/arith.hpp"
#include "qexp/series.hpp"

namespace qexp {

/// Multiplicity data b = (b_1, ..., b_m) of a primary rational canonical
/// form: b_i copies of the companion block of phi^i. Canonical form has no
/// trailing zeros (b_m > 0, or the vector is empty).
class MultiplicityVector {
 public:
  MultiplicityVector() = default;
  explicit MultiplicityVector(std::vector<unsigned> b);

  const std::vector<unsigned>& entries() const { return b_; }
  /// w(b) = sum i * b_i.
  unsigned weight() const;
  /// Number of cyclic summands: sum b_i.
  unsigned parts() const;

  friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
    return a.b_ == b.b_;
  }

 private:
  std::vector<unsigned> b_;
};

/// All multiplicity vectors with weight <= max_weight, graded by weight and
/// lexicographically descending on (b_1, b_2, ...) within each weight class.
/// The empty vector appears first (weight 0).
std::vector<MultiplicityVector> enumerate_multiplicity_vectors(unsigned max_weight);

/// Number of splittings of an n-dimensional space into k nonzero subspaces:
/// (1/k!) sum over compositions n_1+...+n_k = n, n_i >= 1, of
/// gl_order(n)/prod gl_order(n_i). Computed by the streamed composition sum
/// and cross-checked against the coefficient extraction from
/// exp(y sum_r x^r/gl_order(r)); the two must agree.
Natural q_stirling_subset(unsigned n, unsigned k, const FieldOrder& q);

/// Total number of direct sum decompositions: sum_k q_stirling_subset(n,k,q).
Natural q_bell(unsigned n, const FieldOrder& q);

/// Number of diagonalizations of n x n matrices:
/// (gl_order(n)/n!) * (q/(q-1))^n, cross-checked against the family with one
/// dimension-1 deck of q cards.
Natural diagonalization_count(unsigned n, const FieldOrder& q);

/// Number of diagonalizations of invertible n x n matrices: gl_order(n)/n!.
Natural invertible_diagonalization_count(unsigned n, const FieldOrder& q);

/// Number of diagonalizable n x n matrices: composition sum over q
/// nonnegative parts, cross-checked against the q-th power of the
/// single-eigenvalue hand enumerator.
Natural diagonalizable_count(unsigned n, const FieldOrder& q);

/// Diagonalizable n x n matrices with exactly k distinct eigenvalues.
Natural diagonalizable_count_by_eigenvalues(unsigned n, unsigned k, const FieldOrder& q);

/// Number of n x n projections (P^2 = P): sum_{j=0..n}
/// gl_order(n)/(gl_order(j) gl_order(n-j)); for n >= 1 the equivalent form
/// 2*q_stirling_subset(n,2,q) + 2 is asserted equal.
Natural projection_count(unsigned n, const FieldOrder& q);

/// Number of monic irreducible degree-d polynomials over F_q:
/// (1/d) sum_{e | d} mu(e) q^(d/e).
Natural irreducible_poly_count(unsigned d, const FieldOrder& q);

/// Order of the conjugation stabilizer of the primary canonical form indexed
/// by a degree-d irreducible and multiplicity data b:
///   c(d, b) = prod_i prod_{j=1..b_i} (q^(d_i d) - q^((d_i - j) d)),
/// where d_i = b_1 + 2 b_2 + ... + (i-1) b_(i-1) + i (b_i + b_(i+1) + ...)
/// counts the boxes in the first i columns of the Ferrers diagram of b.
/// Depends on the irreducible only through its degree.
Natural centralizer_order(unsigned d, const MultiplicityVector& b, const FieldOrder& q);

/// Hand enumerator of the family attached to one degree-d irreducible:
/// sum over b of x^(d w(b)) y^(parts(b)) / c(d, b), truncated at `order`.
/// The empty b contributes the constant 1.
XSeries cycle_factor(unsigned d, const FieldOrder& q, unsigned order);

/// Number of n x n matrices with k primary cyclic summands, from
/// gl_order(n) * [x^n y^k] prod_d cycle_factor(d)^(m_d) with m_d the count of
/// degree-d irreducibles; include_t=false omits phi(t) = t, restricting to
/// invertible matrices.
Natural q_stirling_cycle(unsigned n, unsigned k, const FieldOrder& q, bool include_t);

/// Full triangle of q_stirling_cycle values up to n_max (one factorization
/// pass instead of one per entry).
HandTable stirling_cycle_table(unsigned n_max, const FieldOrder& q, bool include_t);

}  // namespace qexp
