#pragma once

#include <string>

namespace qexp {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  /// 0 = resolve from QEXP_WORKERS / hardware.
  unsigned workers = 0;
  /// Fault injection for self-tests: perturbs the expected gl_order(3)
  /// inside the comparisons, which must make the run fail.
  bool perturb_gamma = false;
};

struct VerifyResult {
  bool ok = true;
  unsigned checks = 0;
  unsigned failures = 0;
  std::string first_failure;
  /// Full per-check report; byte-identical across runs and worker counts.
  std::string report;
};

/// Runs the formula-vs-oracle comparison suite plus the internal identity
/// suite. quick covers (p,n) in {(2,<=3), (3,<=2)}; full adds (2,4) and (3,3)
/// and extends the identity ranges.
VerifyResult run_verification(const VerifyOptions& options);

}  // namespace qexp
