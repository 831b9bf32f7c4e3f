#include "qexp/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include <json.hpp>

namespace qexp::oracle {

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (p < 2) throw std::invalid_argument("PrimeField: p must be prime, got " + std::to_string(p));
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("PrimeField: p must be prime, got " + std::to_string(p));
}

FqElement FqElement::inverse() const {
  if (v_ == 0) throw std::invalid_argument("FqElement: zero has no inverse");
  for (unsigned c = 1; c < f_.p(); ++c)
    if ((static_cast<unsigned long>(c) * v_) % f_.p() == 1) return FqElement(c, f_);
  throw std::logic_error("FqElement: no inverse found");  // unreachable for prime p
}

FqMatrix FqMatrix::identity(unsigned n, PrimeField field) {
  FqMatrix m(n, field);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix r(a.n_, a.f_);
  for (unsigned i = 0; i < a.n_ * a.n_; ++i)
    r.a_[i] = static_cast<uint8_t>((a.a_[i] + b.a_[i]) % a.f_.p());
  return r;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix r(a.n_, a.f_);
  for (unsigned i = 0; i < a.n_ * a.n_; ++i)
    r.a_[i] = static_cast<uint8_t>((a.a_[i] + a.f_.p() - b.a_[i]) % a.f_.p());
  return r;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  const unsigned n = a.n_;
  const unsigned p = a.f_.p();
  FqMatrix r(n, a.f_);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      unsigned long acc = 0;
      for (unsigned k = 0; k < n; ++k)
        acc += static_cast<unsigned long>(a.a_[i * n + k]) * b.a_[k * n + j];
      r.a_[i * n + j] = static_cast<uint8_t>(acc % p);
    }
  return r;
}

FqMatrix FqMatrix::pow(unsigned long e) const {
  FqMatrix result = identity(n_, f_);
  FqMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

namespace {

unsigned mod_inverse(unsigned v, unsigned p) {
  for (unsigned c = 1; c < p; ++c)
    if ((static_cast<unsigned long>(c) * v) % p == 1) return c;
  throw std::logic_error("mod_inverse: not invertible");
}

}  // namespace

unsigned FqMatrix::rank() const {
  const unsigned p = f_.p();
  std::vector<uint8_t> w = a_;
  unsigned r = 0;
  for (unsigned col = 0; col < n_ && r < n_; ++col) {
    unsigned pivot = r;
    while (pivot < n_ && w[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) continue;
    std::swap_ranges(w.begin() + r * n_, w.begin() + (r + 1) * n_, w.begin() + pivot * n_);
    const unsigned inv = mod_inverse(w[r * n_ + col], p);
    for (unsigned j = col; j < n_; ++j)
      w[r * n_ + j] = static_cast<uint8_t>((w[r * n_ + j] * inv) % p);
    for (unsigned i = 0; i < n_; ++i) {
      if (i == r || w[i * n_ + col] == 0) continue;
      const unsigned factor = w[i * n_ + col];
      for (unsigned j = col; j < n_; ++j)
        w[i * n_ + j] = static_cast<uint8_t>(
            (w[i * n_ + j] + (p - factor) * w[r * n_ + j]) % p);
    }
    ++r;
  }
  return r;
}

FqMatrix FqMatrix::inverse() const {
  const unsigned p = f_.p();
  const unsigned n = n_;
  std::vector<uint8_t> w(n * 2 * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) w[i * 2 * n + j] = a_[i * n + j];
    w[i * 2 * n + n + i] = 1;
  }
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && w[pivot * 2 * n + col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("FqMatrix::inverse: singular matrix");
    std::swap_ranges(w.begin() + col * 2 * n, w.begin() + (col + 1) * 2 * n,
                     w.begin() + pivot * 2 * n);
    const unsigned inv = mod_inverse(w[col * 2 * n + col], p);
    for (unsigned j = 0; j < 2 * n; ++j)
      w[col * 2 * n + j] = static_cast<uint8_t>((w[col * 2 * n + j] * inv) % p);
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || w[i * 2 * n + col] == 0) continue;
      const unsigned factor = w[i * 2 * n + col];
      for (unsigned j = 0; j < 2 * n; ++j)
        w[i * 2 * n + j] = static_cast<uint8_t>(
            (w[i * 2 * n + j] + (p - factor) * w[col * 2 * n + j]) % p);
    }
  }
  FqMatrix r(n, f_);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) r.set(i, j, w[i * 2 * n + n + j]);
  return r;
}

uint64_t matrix_space_size(unsigned n, PrimeField field) {
  constexpr uint64_t kGuard = 10'000'000;
  uint64_t size = 1;
  for (unsigned i = 0; i < n * n; ++i) {
    size *= field.p();
    if (size > kGuard)
      throw scale_guard_error("matrix enumeration: p^(n^2) exceeds guard of 10^7 (n=" +
                              std::to_string(n) + ", p=" + std::to_string(field.p()) + ")");
  }
  return size;
}

FqMatrix matrix_from_index(unsigned n, PrimeField field, uint64_t index) {
  FqMatrix m(n, field);
  for (unsigned pos = n * n; pos-- > 0;) {
    m.set(pos / n, pos % n, static_cast<unsigned long>(index % field.p()));
    index /= field.p();
  }
  return m;
}

void for_each_matrix_in(unsigned n, PrimeField field, uint64_t lo, uint64_t hi,
                        const std::function<void(const FqMatrix&)>& fn) {
  const uint64_t size = matrix_space_size(n, field);
  if (lo > hi || hi > size) throw std::invalid_argument("for_each_matrix_in: bad range");
  if (lo == hi) return;
  FqMatrix m = matrix_from_index(n, field, lo);
  for (uint64_t idx = lo;;) {
    fn(m);
    if (++idx == hi) break;
    // Odometer step: entry (n-1, n-1) is the fastest digit.
    for (unsigned pos = n * n; pos-- > 0;) {
      const unsigned i = pos / n, j = pos % n;
      const unsigned v = m.at(i, j) + 1;
      m.set(i, j, v);
      if (v < field.p()) break;
    }
  }
}

void for_each_matrix(unsigned n, PrimeField field,
                     const std::function<void(const FqMatrix&)>& fn) {
  for_each_matrix_in(n, field, 0, matrix_space_size(n, field), fn);
}

bool is_projection(const FqMatrix& m) { return m * m == m; }

bool is_diagonalizable(const FqMatrix& m) { return m.pow(m.field().p()) == m; }

FqPolynomial::FqPolynomial(PrimeField field, std::vector<unsigned> coeffs) : f_(field) {
  c_.reserve(coeffs.size());
  for (unsigned c : coeffs) c_.push_back(static_cast<uint8_t>(c % field.p()));
  trim();
}

void FqPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b) {
  FqPolynomial r(a.f_);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = static_cast<uint8_t>((a.coeff(i) + b.coeff(i)) % a.f_.p());
  r.trim();
  return r;
}

FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b) {
  FqPolynomial r(a.f_);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = static_cast<uint8_t>((a.coeff(i) + a.f_.p() - b.coeff(i)) % a.f_.p());
  r.trim();
  return r;
}

FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b) {
  FqPolynomial r(a.f_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = static_cast<uint8_t>((r.c_[i + j] + a.c_[i] * b.c_[j]) % a.f_.p());
  }
  r.trim();
  return r;
}

std::pair<FqPolynomial, FqPolynomial> FqPolynomial::divmod(const FqPolynomial& num,
                                                           const FqPolynomial& den) {
  if (!den.is_monic()) throw std::invalid_argument("FqPolynomial::divmod: divisor must be monic");
  const unsigned p = num.f_.p();
  FqPolynomial q(num.f_), rem = num;
  while (rem.degree() >= den.degree()) {
    const unsigned shift = rem.degree() - den.degree();
    const unsigned lead = rem.c_.back();
    if (q.c_.size() <= shift) q.c_.resize(shift + 1, 0);
    q.c_[shift] = static_cast<uint8_t>((q.c_[shift] + lead) % p);
    for (size_t i = 0; i < den.c_.size(); ++i)
      rem.c_[shift + i] =
          static_cast<uint8_t>((rem.c_[shift + i] + (p - lead) * den.c_[i] % p) % p);
    rem.trim();
  }
  q.trim();
  return {q, rem};
}

FqMatrix FqPolynomial::eval(const FqMatrix& m) const {
  const unsigned n = m.dim();
  FqMatrix acc(n, f_);
  const FqMatrix id = FqMatrix::identity(n, f_);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * m;
    if (c_[i] != 0) {
      FqMatrix scaled(n, f_);
      for (unsigned r = 0; r < n; ++r) scaled.set(r, r, c_[i]);
      acc = acc + scaled;
    }
  }
  return acc;
}

std::string FqPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]);
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

bool operator<(const FqPolynomial& a, const FqPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

namespace {

FqPolynomial poly_det(const std::vector<FqPolynomial>& a, unsigned m, PrimeField field) {
  if (m == 0) return FqPolynomial::one(field);
  if (m == 1) return a[0];
  FqPolynomial det(field);
  std::vector<FqPolynomial> minor;
  minor.reserve((m - 1) * (m - 1));
  for (unsigned j = 0; j < m; ++j) {
    if (a[j].is_zero()) continue;
    minor.clear();
    for (unsigned r = 1; r < m; ++r)
      for (unsigned c = 0; c < m; ++c)
        if (c != j) minor.push_back(a[r * m + c]);
    FqPolynomial term = a[j] * poly_det(minor, m - 1, field);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

FqPolynomial char_poly(const FqMatrix& m) {
  const unsigned n = m.dim();
  if (n > 6) throw scale_guard_error("char_poly: cofactor expansion guarded at n <= 6");
  const PrimeField field = m.field();
  std::vector<FqPolynomial> entries;
  entries.reserve(n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const unsigned neg = (field.p() - m.at(i, j)) % field.p();
      if (i == j)
        entries.push_back(FqPolynomial(field, {neg, 1}));  // t - m_ii
      else
        entries.push_back(FqPolynomial(field, {neg}));
    }
  return poly_det(entries, n, field);
}

bool is_irreducible(const FqPolynomial& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  for (const FqPolynomial& g :
       monic_irreducibles(static_cast<unsigned>(f.degree()) / 2, f.field()))
    if (FqPolynomial::divmod(f, g).second.is_zero()) return false;
  return true;
}

std::vector<FqPolynomial> monic_irreducibles(unsigned max_degree, PrimeField field) {
  std::vector<FqPolynomial> irreducibles;
  const unsigned p = field.p();
  for (unsigned d = 1; d <= max_degree; ++d) {
    uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<unsigned> coeffs(d + 1);
      uint64_t rest = idx;
      for (unsigned i = 0; i < d; ++i) {
        coeffs[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      coeffs[d] = 1;
      FqPolynomial cand(field, coeffs);
      bool divisible = false;
      for (const FqPolynomial& g : irreducibles) {
        if (2 * static_cast<unsigned>(g.degree()) > d) break;
        if (FqPolynomial::divmod(cand, g).second.is_zero()) {
          divisible = true;
          break;
        }
      }
      if (!divisible) irreducibles.push_back(std::move(cand));
    }
  }
  return irreducibles;
}

std::vector<std::pair<FqPolynomial, unsigned>> factor_poly(const FqPolynomial& f) {
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument("factor_poly: input must be monic and nonzero");
  if (f.degree() > 6) throw scale_guard_error("factor_poly: guarded at deg <= 6");
  std::vector<std::pair<FqPolynomial, unsigned>> factors;
  FqPolynomial rest = f;
  for (const FqPolynomial& g :
       monic_irreducibles(static_cast<unsigned>(f.degree()), f.field())) {
    if (rest.degree() < 1) break;
    unsigned e = 0;
    for (;;) {
      auto [quot, rem] = FqPolynomial::divmod(rest, g);
      if (!rem.is_zero()) break;
      rest = quot;
      ++e;
    }
    if (e > 0) factors.emplace_back(g, e);
  }
  if (rest.degree() >= 1)
    throw std::logic_error("factor_poly: leftover factor " + rest.str());
  return factors;
}

unsigned primary_summand_count(const FqMatrix& m) {
  const unsigned n = m.dim();
  unsigned count = 0;
  for (const auto& [phi, exponent] : factor_poly(char_poly(m))) {
    const unsigned nullity = n - phi.eval(m).rank();
    const unsigned d = static_cast<unsigned>(phi.degree());
    if (nullity % d != 0)
      throw std::logic_error("primary_summand_count: nullity not divisible by degree");
    count += nullity / d;
  }
  return count;
}

Subspace::Subspace(unsigned ambient, PrimeField field,
                   std::vector<std::vector<uint8_t>> rref_rows)
    : ambient_(ambient), f_(field), rows_(std::move(rref_rows)) {
  int last_pivot = -1;
  std::vector<unsigned> pivots;
  for (const auto& row : rows_) {
    if (row.size() != ambient_) throw std::invalid_argument("Subspace: row length mismatch");
    unsigned pivot = 0;
    while (pivot < ambient_ && row[pivot] == 0) ++pivot;
    if (pivot == ambient_) throw std::invalid_argument("Subspace: zero basis row");
    if (static_cast<int>(pivot) <= last_pivot)
      throw std::invalid_argument("Subspace: pivots not strictly increasing");
    if (row[pivot] != 1) throw std::invalid_argument("Subspace: pivot not normalized");
    last_pivot = static_cast<int>(pivot);
    pivots.push_back(pivot);
  }
  // Pivot columns must be clear everywhere else (reduced form is what makes
  // the flattened basis a unique key).
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_.size(); ++j)
      if (i != j && rows_[i][pivots[j]] != 0)
        throw std::invalid_argument("Subspace: basis not fully reduced");
}

std::vector<uint8_t> Subspace::key() const {
  std::vector<uint8_t> flat;
  flat.reserve(rows_.size() * ambient_);
  for (const auto& row : rows_) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

std::vector<Subspace> enumerate_subspaces(unsigned n, PrimeField field) {
  if (n > 4 || field.p() > 3)
    throw scale_guard_error("enumerate_subspaces: guarded at n <= 4, p in {2,3}");
  const unsigned p = field.p();
  std::vector<Subspace> out;
  out.emplace_back(n, field, std::vector<std::vector<uint8_t>>{});  // zero subspace

  for (unsigned k = 1; k <= n; ++k) {
    // All pivot column combinations c_0 < ... < c_(k-1).
    std::vector<unsigned> pivots(k);
    for (unsigned i = 0; i < k; ++i) pivots[i] = i;
    for (;;) {
      std::vector<bool> is_pivot(n, false);
      for (unsigned c : pivots) is_pivot[c] = true;
      // Free slots: to the right of the row's pivot, outside pivot columns.
      std::vector<std::pair<unsigned, unsigned>> free_slots;
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = pivots[i] + 1; j < n; ++j)
          if (!is_pivot[j]) free_slots.emplace_back(i, j);

      std::vector<uint8_t> values(free_slots.size(), 0);
      for (;;) {
        std::vector<std::vector<uint8_t>> rows(k, std::vector<uint8_t>(n, 0));
        for (unsigned i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
        for (size_t s = 0; s < free_slots.size(); ++s)
          rows[free_slots[s].first][free_slots[s].second] = values[s];
        out.emplace_back(n, field, std::move(rows));

        size_t s = values.size();
        while (s > 0 && values[s - 1] == p - 1) values[--s] = 0;
        if (s == 0) break;
        ++values[s - 1];
      }

      // Next combination in lexicographic order.
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && pivots[i] == n - k + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (unsigned j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Incremental row reduction: returns false (leaving `echelon` untouched) if
// any new row is dependent on what is already there.
bool extend_echelon(std::vector<std::vector<uint8_t>>& echelon,
                    const std::vector<std::vector<uint8_t>>& rows, unsigned n, unsigned p) {
  std::vector<std::vector<uint8_t>> work = echelon;
  for (const auto& r : rows) {
    std::vector<uint8_t> v = r;
    for (const auto& e : work) {
      unsigned pivot = 0;
      while (pivot < n && e[pivot] == 0) ++pivot;
      if (pivot == n || v[pivot] == 0) continue;
      const unsigned factor = (v[pivot] * mod_inverse(e[pivot], p)) % p;
      for (unsigned j = 0; j < n; ++j)
        v[j] = static_cast<uint8_t>((v[j] + (p - factor) * e[j]) % p);
    }
    if (std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; })) return false;
    work.push_back(std::move(v));
  }
  echelon = std::move(work);
  return true;
}

}  // namespace

Natural count_decompositions(unsigned n, unsigned k, PrimeField field) {
  if (k == 0) return Natural(n == 0 ? 1 : 0);
  std::vector<Subspace> nonzero;
  for (Subspace& s : enumerate_subspaces(n, field))
    if (s.dim() >= 1) nonzero.push_back(std::move(s));

  uint64_t count = 0;
  std::vector<std::vector<uint8_t>> echelon;
  // Strictly increasing canonical keys = strictly increasing indices into the
  // sorted subspace list, so each unordered set is visited exactly once.
  auto dfs = [&](auto&& self, size_t start, std::vector<std::vector<uint8_t>>& ech,
                 unsigned cur_dim, unsigned parts_left) -> void {
    if (parts_left == 0) {
      if (cur_dim == n) ++count;
      return;
    }
    for (size_t idx = start; idx < nonzero.size(); ++idx) {
      const Subspace& v = nonzero[idx];
      if (cur_dim + v.dim() > n) continue;
      if (n - cur_dim - v.dim() < parts_left - 1) continue;
      std::vector<std::vector<uint8_t>> next = ech;
      if (!extend_echelon(next, v.basis(), n, field.p())) continue;
      self(self, idx + 1, next, cur_dim + v.dim(), parts_left - 1);
    }
  };
  dfs(dfs, 0, echelon, 0, k);
  return Natural(count);
}

std::string CensusReport::to_json() const {
  nlohmann::json by_eig = nlohmann::json::object();
  for (const auto& [k, v] : diagonalizable_by_eigenvalues)
    by_eig[std::to_string(k)] = std::to_string(v);
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [k, v] : primary_summand_histogram)
    hist[std::to_string(k)] = std::to_string(v);
  nlohmann::json j{{"n", std::to_string(n)},
                   {"p", std::to_string(p)},
                   {"total", std::to_string(total)},
                   {"projections", std::to_string(projections)},
                   {"diagonalizable", std::to_string(diagonalizable)},
                   {"invertible", std::to_string(invertible)},
                   {"diagonalizable_by_eigenvalues", by_eig},
                   {"primary_summand_histogram", hist}};
  return j.dump();
}

namespace {

CensusReport census_range(unsigned n, PrimeField field, uint64_t lo, uint64_t hi) {
  CensusReport r;
  r.n = n;
  r.p = field.p();
  const unsigned p = field.p();
  for_each_matrix_in(n, field, lo, hi, [&](const FqMatrix& m) {
    ++r.total;
    if (is_projection(m)) ++r.projections;
    if (is_diagonalizable(m)) {
      ++r.diagonalizable;
      unsigned eigenvalues = 0;
      for (unsigned alpha = 0; alpha < p; ++alpha) {
        FqMatrix shifted = m;
        for (unsigned i = 0; i < n; ++i) shifted.set(i, i, m.at(i, i) + p - alpha);
        if (shifted.rank() < n) ++eigenvalues;
      }
      ++r.diagonalizable_by_eigenvalues[eigenvalues];
    }
    if (m.rank() == n) {
      ++r.invertible;
      ++r.primary_summand_histogram[primary_summand_count(m)];
    }
  });
  return r;
}

void merge_into(CensusReport& acc, const CensusReport& part) {
  acc.total += part.total;
  acc.projections += part.projections;
  acc.diagonalizable += part.diagonalizable;
  acc.invertible += part.invertible;
  for (const auto& [k, v] : part.diagonalizable_by_eigenvalues)
    acc.diagonalizable_by_eigenvalues[k] += v;
  for (const auto& [k, v] : part.primary_summand_histogram)
    acc.primary_summand_histogram[k] += v;
}

}  // namespace

unsigned resolve_worker_count(unsigned requested) {
  if (requested > 0) return std::min(requested, 64u);
  if (const char* env = std::getenv("QEXP_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min(static_cast<unsigned>(v), 64u);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 4u);
}

CensusReport census(unsigned n, PrimeField field, unsigned workers) {
  const uint64_t size = matrix_space_size(n, field);
  const unsigned w = std::min<uint64_t>(resolve_worker_count(workers), std::max<uint64_t>(size, 1));
  if (w <= 1) return census_range(n, field, 0, size);

  std::vector<CensusReport> parts(w);
  std::vector<std::thread> threads;
  const uint64_t chunk = (size + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    const uint64_t lo = t * chunk;
    const uint64_t hi = std::min(size, lo + chunk);
    threads.emplace_back([&parts, t, n, field, lo, hi] {
      parts[t] = census_range(n, field, lo, hi);
    });
  }
  for (auto& th : threads) th.join();

  CensusReport acc;
  acc.n = n;
  acc.p = field.p();
  for (const CensusReport& part : parts) merge_into(acc, part);
  return acc;
}

}  // namespace qexp::oracle
