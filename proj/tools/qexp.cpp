#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qexp/families.hpp"
#include "qexp/qcombinatorics.hpp"
#include "qexp/verify.hpp"

namespace {

constexpr unsigned kDefaultNMaxCap = 24;

unsigned n_max_cap() {
  if (const char* env = std::getenv("QEXP_N_MAX_CAP")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 0) return static_cast<unsigned>(v);
  }
  return kDefaultNMaxCap;
}

struct TableRow {
  unsigned n = 0;
  unsigned k = 0;
  std::string value;
};

void emit_scalar_table(const std::string& sequence, unsigned long q,
                       const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "csv") {
    std::cout << "n,value\n";
    for (const TableRow& r : rows) std::cout << r.n << "," << r.value << "\n";
    return;
  }
  nlohmann::json values = nlohmann::json::array();
  for (const TableRow& r : rows)
    values.push_back({{"n", std::to_string(r.n)}, {"value", r.value}});
  nlohmann::json j{{"sequence", sequence}, {"q", std::to_string(q)}, {"values", values}};
  std::cout << j.dump(2) << "\n";
}

void emit_triangular_table(const std::string& sequence, unsigned long q,
                           const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "csv") {
    std::cout << "n,k,value\n";
    for (const TableRow& r : rows) std::cout << r.n << "," << r.k << "," << r.value << "\n";
    return;
  }
  nlohmann::json values = nlohmann::json::array();
  for (const TableRow& r : rows)
    values.push_back(
        {{"n", std::to_string(r.n)}, {"k", std::to_string(r.k)}, {"value", r.value}});
  nlohmann::json j{{"sequence", sequence}, {"q", std::to_string(q)}, {"values", values}};
  std::cout << j.dump(2) << "\n";
}

void warn_if_not_prime_power(const qexp::FieldOrder& q) {
  if (!q.is_prime_power())
    std::cerr << "warning: q=" << q.value()
              << " is not a prime power; counts have no vector-space interpretation\n";
}

int run_table(const std::string& sequence, unsigned long q_value, unsigned n_max, long k_max_opt,
              bool include_t, const std::string& format) {
  const qexp::FieldOrder q(q_value);
  warn_if_not_prime_power(q);

  const bool triangular = sequence == "stirling-subset" || sequence == "stirling-cycle" ||
                          sequence == "diagonalizable-by-k";
  std::vector<TableRow> rows;

  if (triangular) {
    const unsigned k_cap = k_max_opt >= 0 ? static_cast<unsigned>(k_max_opt) : n_max;
    if (sequence == "stirling-cycle") {
      const qexp::HandTable t = qexp::stirling_cycle_table(n_max, q, include_t);
      for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned k = 0; k <= n && k <= k_cap; ++k)
          rows.push_back({n, k, t.at(n, k).str()});
    } else {
      for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned k = 0; k <= n && k <= k_cap; ++k) {
          const qexp::Natural v = sequence == "stirling-subset"
                                      ? qexp::q_stirling_subset(n, k, q)
                                      : qexp::diagonalizable_count_by_eigenvalues(n, k, q);
          rows.push_back({n, k, v.str()});
        }
    }
    emit_triangular_table(sequence, q_value, rows, format);
    return 0;
  }

  for (unsigned n = 0; n <= n_max; ++n) {
    qexp::Natural v;
    if (sequence == "bell")
      v = qexp::q_bell(n, q);
    else if (sequence == "diagonalizable")
      v = qexp::diagonalizable_count(n, q);
    else if (sequence == "projections")
      v = qexp::projection_count(n, q);
    else if (sequence == "diagonalizations")
      v = qexp::diagonalization_count(n, q);
    else if (sequence == "invertible-diagonalizations")
      v = qexp::invertible_diagonalization_count(n, q);
    rows.push_back({n, 0, v.str()});
  }
  emit_scalar_table(sequence, q_value, rows, format);
  return 0;
}

int run_family(const std::string& path, unsigned order, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  qexp::DeckSpec spec = qexp::deck_spec_from_json(buffer.str());  // throws on schema violation
  warn_if_not_prime_power(spec.q());

  const qexp::HandTable via_exp =
      qexp::series_to_hand_table(qexp::hand_enumerator(spec, order), spec.q());
  const qexp::HandTable via_convolution = qexp::hand_counts_recursive(spec, order);
  if (!(via_exp == via_convolution)) {
    std::cerr << "error: exponential-formula table disagrees with the convolution table; "
                 "this is a correctness alarm\n";
    return 1;
  }

  std::vector<TableRow> rows;
  for (unsigned n = 0; n <= order; ++n)
    for (unsigned k = 0; k <= n; ++k) rows.push_back({n, k, via_exp.at(n, k).str()});
  emit_triangular_table("hand-counts", spec.q().value(), rows, format);
  return 0;
}

int run_verify(const std::string& level, bool inject_gamma_fault) {
  qexp::VerifyOptions options;
  options.level = level == "full" ? qexp::VerifyLevel::full : qexp::VerifyLevel::quick;
  options.perturb_gamma = inject_gamma_fault;
  const qexp::VerifyResult result = qexp::run_verification(options);
  std::cout << result.report;
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-exponential families: exact enumeration of direct-sum structures over F_q"};
  app.require_subcommand(1);

  std::string sequence;
  unsigned long q_value = 2;
  unsigned n_max = 8;
  long k_max = -1;
  bool include_t = false;
  std::string format = "csv";

  CLI::App* table = app.add_subcommand("table", "Print a named counting sequence");
  table
      ->add_option("sequence", sequence,
                   "One of: stirling-subset, stirling-cycle, bell, diagonalizable, "
                   "diagonalizable-by-k, projections, diagonalizations, "
                   "invertible-diagonalizations")
      ->required();
  table->add_option("--q", q_value, "Field order (>= 2)");
  table->add_option("--n-max", n_max, "Largest dimension to print");
  table->add_option("--k-max", k_max, "Largest part count to print (triangular sequences)");
  table->add_flag("--include-t", include_t,
                  "stirling-cycle only: keep phi(t)=t, counting all matrices");
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::string spec_path;
  unsigned order = 12;
  CLI::App* family = app.add_subcommand("family", "Hand counts of a deck specification");
  family->add_option("spec", spec_path, "Path to a deck spec JSON file")->required();
  family->add_option("--order", order, "Truncation order");
  family->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::string level = "quick";
  bool inject_gamma_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the formula-vs-oracle suite");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--inject-gamma-fault", inject_gamma_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Argument-level validation failures exit 2; anything thrown past this
  // point is an internal assertion and exits 1.
  try {
    if (table->parsed() || family->parsed()) {
      const unsigned cap = n_max_cap();
      const unsigned requested = table->parsed() ? n_max : order;
      if (requested > cap) {
        std::cerr << "error: requested order " << requested << " exceeds the hard cap " << cap
                  << "\n";
        return 2;
      }
    }
    if (table->parsed()) {
      static const std::vector<std::string> kSequences = {
          "stirling-subset", "stirling-cycle",  "bell",
          "diagonalizable",  "diagonalizable-by-k", "projections",
          "diagonalizations", "invertible-diagonalizations"};
      if (std::find(kSequences.begin(), kSequences.end(), sequence) == kSequences.end()) {
        std::cerr << "error: unknown sequence '" << sequence << "'\n";
        return 2;
      }
      if (include_t && sequence != "stirling-cycle") {
        std::cerr << "error: --include-t applies only to stirling-cycle\n";
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (table->parsed()) return run_table(sequence, q_value, n_max, k_max, include_t, format);
    if (family->parsed()) {
      try {
        return run_family(spec_path, order, format);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;  // schema violation
      }
    }
    if (verify->parsed()) return run_verify(level, inject_gamma_fault);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
