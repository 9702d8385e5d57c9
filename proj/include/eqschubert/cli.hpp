#pragma once

// Batch front end shared by the eqschubert executable and the tests.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace eqschubert {

enum class Command { restrict, paths, giambelli, structconst, gkm_check, table };
enum class Method { det, paths, chain, solve, both };
enum class Format { text, json };

struct JobSpec {
  Command command = Command::restrict;
  std::size_t d = 0;
  std::size_t n = 0;
  std::optional<std::string> u, v, w;
  std::optional<Method> method;
  Format format = Format::text;
  bool specialize_zero = false;
  /// Caps C(n,d) for commands that visit every fixed point, and the number
  /// of chains for the chain method.
  std::size_t limit = 5'000'000;
  unsigned jobs = 1;
  bool show_tuples = false;
  bool show_grid = false;
  std::string file;  // gkm-check input
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_argument = 2;
inline constexpr int internal_failure = 3;
}  // namespace exit_code

/// Runs one job. Results go to `out`, diagnostics to `err`.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parses command-line arguments into a JobSpec and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqschubert
