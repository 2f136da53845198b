#pragma once

// Command implementations behind the `uks` executable. Each returns the JSON
// document it would print plus the process exit code:
//   0 success / affirmative verdict, 1 negative verdict, 2 input error.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "uks/family.hpp"
#include "uks/maps.hpp"

namespace uks::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Thrown for malformed input; carries a human-readable diagnostic.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One of {"lambda": [3], "T": [[3]x3]}, {"family": {"a", "k"}} or
/// {"builtin": "identity" | "transposition"}.
struct MapDocument {
  UnitalQubitMapd map;
  std::optional<family::FamilyParams> family;
  std::string description;
};

MapDocument parse_map_document(const std::string& text);
MapDocument load_map_document(const std::string& path);

struct CommandResult {
  json output;
  int exit_code = kExitOk;
};

CommandResult check_positivity(const MapDocument& doc, double tol, int starts, std::uint64_t seed);
CommandResult check_ks(const MapDocument& doc, int budget, std::uint64_t seed, double tol);
CommandResult choi(const MapDocument& doc, bool normalized);
CommandResult witness(const MapDocument& doc, std::size_t samples, std::uint64_t seed, double tol);
CommandResult family_report(double a, double k, std::uint64_t seed);

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t positive = 0;
  std::size_t thm46 = 0;
  std::size_t violations = 0;
  std::size_t thm46_positive_violations = 0;
};

/// Writes the region CSV to `out_path` (throws InputError when unwritable).
ScanSummary scan_region(const family::ScanRange& range, int budget, std::uint64_t seed, const std::string& out_path);

json to_json(const PauliFormd& p);
json complex_pair(std::complex<double> z);

}  // namespace uks::cli
