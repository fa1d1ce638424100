#pragma once

#include "jloci/alexander.hpp"
#include "jloci/torus.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jloci {

inline constexpr const char* library_version = "0.1.0";
inline constexpr int report_schema_version = 1;

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_guard = 3,
  exit_mismatch = 4, // computed verdict contradicts the known result: a bug
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input. line/column are 1-based and 0 when the problem is
/// semantic (then where() holds a JSON pointer).
class InputError : public std::runtime_error {
public:
  InputError(const std::string& what, std::size_t line, std::size_t column, std::string pointer = {})
      : std::runtime_error(what), line(line), column(column), pointer(std::move(pointer))
  {
  }
  std::size_t line, column;
  std::string pointer;
};

/// {"n": int, "h2": int, "del": [[row, col, "p/q"], ...], "label": string}
GroupAlgebraData parse_algebra_input(std::string_view text);
GroupAlgebraData load_algebra_input(const std::filesystem::path& path);
Json algebra_to_json(const GroupAlgebraData& data);

Json rational_json(const Rational& q);
Json point_json(std::span<const Rational> z);

struct CommandResult {
  Json report;
  int exit_code = exit_ok;
};

/// Common envelope. wall_time is filled in by finish_report.
Json make_report(std::string command, Json parameters, std::string anchor);
void finish_report(Json& report, double wall_seconds);
/// The report with wall_time removed, serialized; equal across reruns.
std::string reproducible_dump(const Json& report);

/// Writes to a sibling temporary file, then renames over the target.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

inline constexpr int default_max_genus = 5;

CommandResult cmd_verify_resonance(int genus, std::uint64_t seed, std::size_t samples = 50,
                                   int max_genus = default_max_genus);
/// source describes where the data came from (preset name, file, genus).
CommandResult cmd_alexander(const GroupAlgebraData& data, Json source, std::size_t qmax,
                            std::size_t max_nnz = default_max_nnz());
/// Named datasets: free2, free3, free4, surface2, surface3, heisenberg,
/// free-product, indecomposable-form. Throws UsageError otherwise.
GroupAlgebraData preset_data(std::string_view name);
CommandResult cmd_orbit(int genus, std::int64_t torsion, std::uint64_t seed, std::size_t cap = default_orbit_cap);
/// Sets: "zero", "full-M-torsion" (alias "full-2-torsion-sample"),
/// "orbit-M", "point-M", where M is a torsion order.
CommandResult cmd_invariance(int genus, std::string_view set, std::uint64_t seed);
CommandResult cmd_crosscheck(std::size_t datasets, std::uint64_t seed, std::size_t points = 20, std::size_t kmax = 3);
CommandResult cmd_nonvanishing(int genus);
CommandResult cmd_irreducibility(int genus, std::size_t trials, std::uint64_t seed);

} // namespace jloci
