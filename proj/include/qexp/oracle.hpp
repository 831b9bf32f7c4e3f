#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qexp/arith.hpp"

// Exhaustive enumeration over small prime fields. Everything here counts by
// brute force and shares no code path with the generating-function engine;
// the two sides only ever meet in tests and in the verification suite.
namespace qexp::oracle {

/// Thrown when an enumeration would exceed its hard scale guard. Guards are
/// errors, not warnings, so CI cannot silently start a 10^9-iteration loop.
struct scale_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Prime modulus, validated at construction.
class PrimeField {
 public:
  explicit PrimeField(unsigned p);
  unsigned p() const { return p_; }
  friend bool operator==(PrimeField a, PrimeField b) { return a.p_ == b.p_; }

 private:
  unsigned p_;
};

/// Single residue in [0, p).
class FqElement {
 public:
  FqElement(unsigned long value, PrimeField field) : f_(field), v_(value % field.p()) {}
  unsigned value() const { return v_; }
  PrimeField field() const { return f_; }

  friend FqElement operator+(FqElement a, FqElement b) {
    return FqElement(a.v_ + b.v_, a.f_);
  }
  friend FqElement operator-(FqElement a, FqElement b) {
    return FqElement(a.v_ + a.f_.p() - b.v_, a.f_);
  }
  friend FqElement operator*(FqElement a, FqElement b) {
    return FqElement(static_cast<unsigned long>(a.v_) * b.v_, a.f_);
  }
  FqElement inverse() const;
  friend bool operator==(FqElement a, FqElement b) { return a.v_ == b.v_; }

 private:
  PrimeField f_;
  unsigned v_;
};

/// Dense square matrix over a prime field.
class FqMatrix {
 public:
  FqMatrix(unsigned n, PrimeField field) : n_(n), f_(field), a_(n * n, 0) {}
  static FqMatrix identity(unsigned n, PrimeField field);

  unsigned dim() const { return n_; }
  PrimeField field() const { return f_; }
  unsigned at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
  void set(unsigned i, unsigned j, unsigned long v) {
    a_[i * n_ + j] = static_cast<uint8_t>(v % f_.p());
  }

  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  FqMatrix pow(unsigned long e) const;

  unsigned rank() const;
  bool is_invertible() const { return rank() == n_; }
  FqMatrix inverse() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.n_ == b.n_ && a.f_ == b.f_ && a.a_ == b.a_;
  }

 private:
  unsigned n_;
  PrimeField f_;
  std::vector<uint8_t> a_;
};

/// p^(n^2), guarded at 10^7.
uint64_t matrix_space_size(unsigned n, PrimeField field);

/// Matrix number `index` in row-major odometer order: the all-zero matrix is
/// index 0 and entry (n-1, n-1) is the fastest-moving digit.
FqMatrix matrix_from_index(unsigned n, PrimeField field, uint64_t index);

/// Visits each of the p^(n^2) matrices exactly once, in odometer order.
void for_each_matrix(unsigned n, PrimeField field,
                     const std::function<void(const FqMatrix&)>& fn);

/// Deterministic partition of the odometer range: visits indices [lo, hi).
void for_each_matrix_in(unsigned n, PrimeField field, uint64_t lo, uint64_t hi,
                        const std::function<void(const FqMatrix&)>& fn);

/// P^2 = P.
bool is_projection(const FqMatrix& m);

/// M^p = M: the minimal polynomial then divides t^p - t, which is squarefree
/// and splits over F_p. Validated against the definition-level check
/// (some invertible S makes S^-1 M S diagonal) in the test suite.
bool is_diagonalizable(const FqMatrix& m);

/// Dense polynomial over a prime field, coefficient index = power of t.
class FqPolynomial {
 public:
  explicit FqPolynomial(PrimeField field) : f_(field) {}
  FqPolynomial(PrimeField field, std::vector<unsigned> coeffs);
  static FqPolynomial one(PrimeField field) { return FqPolynomial(field, {1}); }

  PrimeField field() const { return f_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  unsigned coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b);
  /// Quotient and remainder; the divisor must be monic.
  static std::pair<FqPolynomial, FqPolynomial> divmod(const FqPolynomial& num,
                                                      const FqPolynomial& den);

  /// Horner evaluation with a matrix argument.
  FqMatrix eval(const FqMatrix& m) const;

  std::string str() const;

  friend bool operator==(const FqPolynomial& a, const FqPolynomial& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }
  /// Degree first, then coefficients from the top: a deterministic total
  /// order used to fix factor ordering.
  friend bool operator<(const FqPolynomial& a, const FqPolynomial& b);

 private:
  void trim();
  PrimeField f_;
  std::vector<uint8_t> c_;
};

/// det(tI - M) by exact cofactor expansion over F_p[t]; n <= 6.
FqPolynomial char_poly(const FqMatrix& m);

/// All monic irreducibles of degree 1..max_degree, ascending (degree, order).
std::vector<FqPolynomial> monic_irreducibles(unsigned max_degree, PrimeField field);
bool is_irreducible(const FqPolynomial& f);

/// Factorization of a monic nonzero polynomial (deg <= 6) into monic
/// irreducibles with exponents, by trial division in increasing degree.
std::vector<std::pair<FqPolynomial, unsigned>> factor_poly(const FqPolynomial& f);

/// Number of summands in the primary rational canonical form:
/// sum over irreducible factors phi of nullity(phi(M)) / deg(phi).
unsigned primary_summand_count(const FqMatrix& m);

/// Subspace of F_p^n in canonical form: reduced row-echelon basis, rows
/// nonzero, pivots strictly increasing. The canonical form is unique per
/// subspace, so the flattened basis serves as an identity key.
class Subspace {
 public:
  Subspace(unsigned ambient, PrimeField field, std::vector<std::vector<uint8_t>> rref_rows);

  unsigned ambient() const { return ambient_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  const std::vector<std::vector<uint8_t>>& basis() const { return rows_; }
  std::vector<uint8_t> key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.key() < b.key(); }

 private:
  unsigned ambient_;
  PrimeField f_;
  std::vector<std::vector<uint8_t>> rows_;
};

/// Every subspace of F_p^n exactly once via RREF census, sorted by canonical
/// key. Guarded at n <= 4, p in {2,3}.
std::vector<Subspace> enumerate_subspaces(unsigned n, PrimeField field);

/// Number of unordered direct-sum decompositions of F_p^n into k nonzero
/// subspaces, by backtracking over canonically ordered subspaces.
Natural count_decompositions(unsigned n, unsigned k, PrimeField field);

/// Aggregate of all per-matrix predicates in one exhaustive pass.
struct CensusReport {
  unsigned n = 0;
  unsigned p = 0;
  uint64_t total = 0;
  uint64_t projections = 0;
  uint64_t diagonalizable = 0;
  uint64_t invertible = 0;
  /// distinct-eigenvalue count -> number of diagonalizable matrices.
  std::map<unsigned, uint64_t> diagonalizable_by_eigenvalues;
  /// primary summand count -> number of invertible matrices.
  std::map<unsigned, uint64_t> primary_summand_histogram;

  /// All counts serialized as decimal strings.
  std::string to_json() const;

  friend bool operator==(const CensusReport& a, const CensusReport& b) = default;
};

/// Exhaustive census over all n x n matrices. Partial censuses over index
/// ranges merge associatively, so the result is identical for every worker
/// count. workers = 0 resolves via the QEXP_WORKERS environment variable,
/// falling back to the hardware default.
CensusReport census(unsigned n, PrimeField field, unsigned workers = 0);

unsigned resolve_worker_count(unsigned requested);

}  // namespace qexp::oracle
