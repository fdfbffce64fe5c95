#pragma once

// Command layer behind the repairaf executable. run_command returns the JSON
// document the tool prints; errors surface as repairaf::Error.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repairaf/error.hpp"
#include "repairaf/framework.hpp"
#include "repairaf/io.hpp"
#include "repairaf/relational.hpp"

namespace repairaf::cli {

enum class Command {
  Repairs,
  Exists,
  Brave,
  Cautious,
  SizeAtLeast,
  Translate,
  EncodeSat,
  EncodeSatRep,
  EncodeQbf,
  Oracle,
  Verify,
};

std::string_view to_string(Command command);
std::optional<Command> parse_command(std::string_view name);
const std::vector<std::string>& command_names();

struct JobConfig {
  Command command = Command::Repairs;
  /// "path" or "name=path"; without a name the file stem is the relation name.
  std::vector<std::string> database_paths;
  std::string dependency_path;
  std::string tuple;           // brave, cautious
  std::size_t k = 0;           // size-atleast
  std::string formula_path;    // encode-*
  std::string output_dir;      // translate, encode-*: write files here when set
  bool raw = false;            // translate without pre-processing
  /// Replaces the routed semantics (naive, pref or stab) for repairs/exists/brave/cautious.
  std::optional<Semantics> semantics_override;
  bool allow_empty = false;
  bool vacuous_skeptical = false;
  std::size_t oracle_ceiling = 20;
  std::uint64_t seed = 0;
};

/// Applies REPAIRAF_SEED when set. Throws ParseError for a malformed value.
void apply_environment(JobConfig& cfg);

/// Throws PreconditionError when a command-specific argument is missing.
void validate(const JobConfig& cfg);

Instance load_instance(const JobConfig& cfg);

io::json run_command(const JobConfig& cfg);

/// Exit status for an error of this kind; 0 is success and 1 is a usage error.
int exit_code(ErrorKind kind);
io::json error_document(ErrorKind kind, const std::string& message);

}  // namespace repairaf::cli
