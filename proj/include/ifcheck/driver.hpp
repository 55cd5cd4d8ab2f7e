#pragma once

// Batch front end shared by the command-line tool and the tests.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifcheck/diagnostic.hpp"
#include "ifcheck/semantics.hpp"

namespace ifcheck {

enum class EmitMembers { Off, Text, Machine };

struct CliConfig {
  Mode mode = Mode::Java8;
  EmitMembers emitMembers = EmitMembers::Off;
  std::optional<std::filesystem::path> goldenDir;
  std::vector<std::filesystem::path> inputs;
  bool corpus = false;   // check the embedded corpus instead of (or besides) inputs
  bool ambient = true;   // preload the eight clean corpus interfaces
  std::string suffix = ".java";
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kErrors = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

struct SourceFile {
  std::string label;  // printed as the diagnostic file name
  std::string content;
};

struct FileResult {
  std::string label;
  std::vector<Diagnostic> diagnostics;
  std::vector<CheckReport> reports;
};

struct CheckRun {
  std::vector<FileResult> files;     // in input order
  std::vector<Diagnostic> elsewhere; // hierarchy errors located in ambient units

  Transcript transcript() const;
};

/// Parses and checks `inputs` in `mode`. Units with parse errors are left out
/// of the hierarchy. Ambient interfaces are added unless an input declares
/// the same name.
CheckRun check_sources(std::span<const SourceFile> inputs, Mode mode, bool ambient = true,
                       std::string_view suffix = ".java");

/// Member tables in the text format, one block per checked interface.
void write_members_text(const CheckRun& run, std::ostream& out);
/// Member tables as a JSON document.
void write_members_machine(const CheckRun& run, Mode mode, std::ostream& out);

/// Checks the configured inputs: transcript to `err`, member tables to `out`.
/// Exit code 0 when no error was reported, 1 otherwise, 2 on usage or I/O
/// failure.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Runs every corpus entry in both modes against `config.goldenDir`.
/// 0 when all match, 1 on any divergence, 2 when a golden is missing.
int verify_goldens(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Writes the current transcripts as goldens under `dir`.
void write_goldens(const std::filesystem::path& dir, std::string_view suffix = ".java");

/// `laws` subcommand. `structure` is rationals, integers or vectors.
int run_laws(std::string_view structure, int samples, std::uint64_t seed, std::ostream& out,
             std::ostream& err);

}  // namespace ifcheck
