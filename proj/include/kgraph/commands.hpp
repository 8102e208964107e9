#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraph/ideals.hpp"
#include "kgraph/text_format.hpp"

namespace kg {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Process exit codes, shared with the C API status values.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitSyntax = 2,
  kExitCapInsufficient = 3,
  kExitArgument = 4,
  kExitInternal = 5,
};

/// Options in their command-line spelling; resolved against the graph when
/// the command runs.
struct RunConfig {
  std::string command;
  std::optional<std::string> cap;  // "2,2" or "2" (broadcast)
  std::string format = "json";     // json | dot | text
  bool assume_condition_c = false;
  bool require_exact = false;
  bool minimal = false;
  std::optional<std::string> vertex;
  std::vector<std::string> paths;
  std::vector<std::string> sets;  // each "a,b"; "" is the empty set
  std::optional<std::string> hset;
  std::optional<std::string> window;  // "r", "lo:hi", vectors comma-separated
  std::optional<std::string> shift;
};

struct CommandResult {
  int status = kExitOk;
  std::string output;
  std::string error;
};

const std::vector<std::string>& command_names();

/// Dispatches one command. Never throws; failures become a status and a
/// message.
CommandResult run_command(const KGraphDocument& doc, const RunConfig& config);

/// Skeleton as a digraph with arrows from source to range.
std::string emit_dot(const KGraph& g);
/// Lattice nodes labeled "H={...} B={...} [cert]", bottom to top.
std::string emit_dot(const KGraph& g, const IdealLattice& lattice);

int exit_code_for(ErrorCode code);

}  // namespace kg
