#include "qexp/verify.hpp"

#include <utility>
#include <vector>

#include "qexp/families.hpp"
#include "qexp/oracle.hpp"
#include "qexp/qcombinatorics.hpp"

namespace qexp {

namespace {

struct Checker {
  unsigned checks = 0;
  unsigned failures = 0;
  std::string first_failure;
  std::string report;

  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    ++checks;
    const bool ok = expected == actual;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = name;
    }
    report += ok ? "ok   " : "FAIL ";
    report += name + " expected=" + expected + " actual=" + actual + "\n";
  }

  void check(const std::string& name, const Natural& expected, const Natural& actual) {
    check(name, expected.str(), actual.str());
  }
};

std::string tag(const std::string& what, unsigned p, unsigned n) {
  return what + " p=" + std::to_string(p) + " n=" + std::to_string(n);
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& options) {
  const bool full = options.level == VerifyLevel::full;
  Checker c;
  c.report = std::string("qexp verification report (level=") + (full ? "full" : "quick") + ")\n";

  // Expected gamma values; the fault-injection hook lives here so a perturbed
  // transcription is guaranteed to trip the comparisons.
  auto expected_gamma = [&](unsigned n, const FieldOrder& q) {
    Natural g = gl_order(n, q);
    if (options.perturb_gamma && n == 3) g += Natural(1);
    return g;
  };

  std::vector<std::pair<unsigned, unsigned>> cells = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  if (full) {
    cells.emplace_back(2, 4);
    cells.emplace_back(3, 3);
  }

  for (const auto& [p, n] : cells) {
    const oracle::PrimeField field(p);
    const FieldOrder q(p);
    const oracle::CensusReport rep = oracle::census(n, field, options.workers);

    c.check(tag("census/total", p, n), Natural::pow(Natural(p), n * n),
            Natural(static_cast<unsigned long>(rep.total)));
    c.check(tag("census/invertible", p, n), expected_gamma(n, q),
            Natural(static_cast<unsigned long>(rep.invertible)));
    c.check(tag("census/projections", p, n), projection_count(n, q),
            Natural(static_cast<unsigned long>(rep.projections)));
    c.check(tag("census/diagonalizable", p, n), diagonalizable_count(n, q),
            Natural(static_cast<unsigned long>(rep.diagonalizable)));

    for (unsigned k = 1; k <= p && k <= n; ++k) {
      const auto it = rep.diagonalizable_by_eigenvalues.find(k);
      const uint64_t actual = it == rep.diagonalizable_by_eigenvalues.end() ? 0 : it->second;
      c.check(tag("census/diagonalizable-by-k", p, n) + " k=" + std::to_string(k),
              diagonalizable_count_by_eigenvalues(n, k, q),
              Natural(static_cast<unsigned long>(actual)));
    }

    const HandTable cycle = stirling_cycle_table(n, q, false);
    for (unsigned k = 1; k <= n; ++k) {
      const auto it = rep.primary_summand_histogram.find(k);
      const uint64_t actual = it == rep.primary_summand_histogram.end() ? 0 : it->second;
      c.check(tag("census/cycle-summands", p, n) + " k=" + std::to_string(k), cycle.at(n, k),
              Natural(static_cast<unsigned long>(actual)));
    }

    Natural decomposition_total;
    for (unsigned k = 1; k <= n; ++k) {
      const Natural counted = oracle::count_decompositions(n, k, field);
      decomposition_total += counted;
      c.check(tag("oracle/decompositions", p, n) + " k=" + std::to_string(k),
              q_stirling_subset(n, k, q), counted);
    }
    c.check(tag("oracle/bell", p, n), q_bell(n, q), decomposition_total);
  }

  // Identity suite: internal cross-checks that need no census.
  const unsigned cycle_nmax = full ? 8 : 6;
  for (unsigned long qv : {2ul, 3ul, 4ul, 5ul}) {
    const FieldOrder q(qv);
    const HandTable cycle = stirling_cycle_table(cycle_nmax, q, false);
    for (unsigned n = 0; n <= cycle_nmax; ++n) {
      Natural row_sum;
      for (unsigned k = 0; k <= n; ++k) row_sum += cycle.at(n, k);
      c.check("identity/cycle-rowsum-invertible q=" + std::to_string(qv) +
                  " n=" + std::to_string(n),
              expected_gamma(n, q), row_sum);
    }
  }

  const unsigned all_nmax = full ? 6 : 4;
  for (unsigned long qv : {2ul, 3ul}) {
    const FieldOrder q(qv);
    const HandTable cycle = stirling_cycle_table(all_nmax, q, true);
    for (unsigned n = 0; n <= all_nmax; ++n) {
      Natural row_sum;
      for (unsigned k = 0; k <= n; ++k) row_sum += cycle.at(n, k);
      c.check("identity/cycle-rowsum-all q=" + std::to_string(qv) + " n=" + std::to_string(n),
              Natural::pow(Natural(qv), n * n), row_sum);
    }
  }

  const unsigned egf_order = full ? 10 : 8;
  for (unsigned long qv : {2ul, 3ul}) {
    const FieldOrder q(qv);
    std::map<unsigned, Natural> ones;
    for (unsigned r = 1; r <= egf_order; ++r) ones[r] = Natural(1);
    const XSeries h = hand_enumerator(DeckSpec(q, ones), egf_order);
    for (unsigned n = 0; n <= egf_order; ++n) {
      const Rational lhs = Rational(q_bell(n, q)) / Rational(gl_order(n, q));
      const Rational rhs = h.coeff(n).eval(Rational(1));
      c.check("identity/bell-egf q=" + std::to_string(qv) + " n=" + std::to_string(n), lhs.str(),
              rhs.str());
    }
  }

  const unsigned table_order = full ? 8 : 6;
  const std::vector<std::map<unsigned, Natural>> specs = {
      {{1, Natural(1)}},
      {{1, Natural(2)}, {2, Natural(1)}},
      {{1, Natural(1)}, {2, Natural(1)}, {3, Natural(1)}}};
  for (unsigned long qv : {2ul, 3ul}) {
    for (size_t i = 0; i < specs.size(); ++i) {
      const DeckSpec f(FieldOrder(qv), specs[i]);
      const bool same = series_to_hand_table(hand_enumerator(f, table_order), f.q()) ==
                        hand_counts_recursive(f, table_order);
      c.check("identity/exp-vs-recursive q=" + std::to_string(qv) +
                  " spec=" + std::to_string(i),
              "equal", same ? "equal" : "mismatch");
    }
  }

  VerifyResult result;
  result.checks = c.checks;
  result.failures = c.failures;
  result.ok = c.failures == 0;
  result.first_failure = c.first_failure;
  c.report += "summary: checks=" + std::to_string(c.checks) +
              " failures=" + std::to_string(c.failures) + "\n";
  if (!c.first_failure.empty()) c.report += "first failure: " + c.first_failure + "\n";
  result.report = std::move(c.report);
  return result;
}

}  // namespace qexp
