#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ccr::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kDomainError = 3 };

/// Shared options of the numerical subcommands.
struct RunConfig {
  std::string model = "free";  // free | harmonic | linear | custom (with force)
  std::optional<std::string> force;
  std::optional<std::string> velocity;
  double mass = 1.0;
  double omega = 1.0;
  double force0 = 1.0;
  double x_min = -10.0;
  double x_max = 10.0;
  std::size_t n = 512;
  double t_total = 1.0;
  std::vector<unsigned> steps{8, 16, 32};
  unsigned order = 16;
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma = 1.0;
  std::string output;
  std::string report;

  /// Throws std::invalid_argument on m <= 0, n < 2, t_total <= 0, x_max <= x_min,
  /// sigma <= 0, or an unknown model.
  void validate() const;
};

/// Reads `key = value` lines; '#' starts a comment. Throws std::invalid_argument
/// on malformed lines or an unreadable file.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Runs the command line `args` (without the program name). Output that the
/// subcommand does not send to a file goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccr::cli
