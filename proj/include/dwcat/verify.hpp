#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dwcat {

struct VerifyOptions {
  /// Smaller N ranges and only the fast checks.
  bool quick = false;
  /// Mutation hook: flips the sign of S_y before the commutator check, which
  /// must then fail. Used to show the suite can actually detect errors.
  bool inject_sy_sign_error = false;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Runs the invariant suite at desk scale (N <= 15 for physics checks) plus
/// the acceptance criteria. `on_check` is called after each check finishes.
VerifyReport run_verify(const VerifyOptions& options,
                        const std::function<void(const CheckResult&)>& on_check = {});

}  // namespace dwcat
