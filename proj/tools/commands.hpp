#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kneser::cli {

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kBudget = 3 };

struct CommandResult {
  int exit = kOk;
  std::string out;  // JSON document, or empty
  std::string err;
};

struct DecomposeFlags {
  std::optional<std::size_t> budget;
  std::uint64_t seed = 0;
  bool oracle_check = false;
};

struct EnumerateFlags {
  bool pl_area = false;
  bool verify_diam = false;
  std::optional<std::size_t> budget;
  std::string dump;  // surface dump file, if set
};

struct Sweep {
  double from = 0, to = 0;
  int steps = 0;
};

/// "a:b:steps".
Sweep parse_sweep(const std::string& text);

struct MonteCarloFlags {
  double nu = 50;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::optional<Sweep> sweep;
  std::string csv;  // sweep CSV file, if set
};

CommandResult decompose(const std::string& path, const DecomposeFlags& flags);
CommandResult enumerate(const std::string& path, const EnumerateFlags& flags);
CommandResult montecarlo(const std::string& path, const MonteCarloFlags& flags);
CommandResult validate(const std::string& path);

/// Writes a corpus file: bd4simplex, rp3, l31, l52, chain:<n>, sum:<a>+<b>,
/// or patch:<name>. Without an output path the file text is returned in the
/// JSON payload.
CommandResult generate(const std::string& kind, const std::string& output);

/// Names accepted by generate.
std::vector<std::string> generate_kinds();

}  // namespace kneser::cli
