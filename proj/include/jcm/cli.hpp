#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jcm/types.hpp"

namespace jcm::cli {

enum class Command { state, dressed, bound, evolve, revival, reproduce };
enum class Family { zz, eo, trap, cat, file };
enum class Mode { exact, approx, both };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::evolve;
  std::optional<Family> family;  // unset: zz, or eo for `bound`
  Complex alpha{7.0, 0.0};
  double gamma = 0.25 * kPi;
  double xi = 0.0;
  std::optional<double> phase_diff;  // overrides xi with nu_alpha - phase_diff
  Complex z{0.6, 0.0};
  std::string signs_file;
  std::string parity = "even";
  std::string state_file;
  double tau_max = 100.0;
  int samples = 4000;
  int k_max = 6;
  Mode mode = Mode::both;
  std::string out;  // file, or directory for `reproduce`; empty writes to stdout
  Format format = Format::csv;
  std::string figure;

  /// Throws DomainError on inconsistent settings.
  void validate() const;
};

/// One "+1" / "-1" token per line; blank trailing lines are ignored.
std::vector<int> parse_signs_file(const std::string& path);

/// Executes the command and returns the process exit code:
/// 0 ok, 2 bad arguments or domain error, 3 truncation, 4 quadrature, 1 other.
int run(const RunConfig& config);

/// Parses argv and calls run().
int main(int argc, char** argv);

}  // namespace jcm::cli
