#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccr {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
  /// One "[PASS]/[FAIL] name: detail" line per check, then "note:" lines.
  /// Contains no timings, so identical runs give identical text.
  std::string to_string() const;
};

inline constexpr std::uint64_t kVerifySeed = 0x5eed'cc12'2024ull;

/// Runs the symbolic and numerical invariant suite.
VerifyReport run_verification(std::uint64_t seed = kVerifySeed);

}  // namespace ccr
