#pragma once

#include <array>
#include <compare>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ifcheck {

/// 1-based line and byte column into a source file.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

enum class Severity { Error, Note };

std::string_view severity_name(Severity severity);

/// One javac-style message: a header line, the echoed source line and a caret.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string file;
  int line = 1;
  std::string message;
  std::string echoLine;
  int caretColumn = 1;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Splits source text on LF. Always yields at least one (possibly empty) line;
/// a trailing newline does not start an extra line.
std::vector<std::string> split_lines(std::string_view source);

/// Builds a diagnostic whose echo line is taken from `rawLines`. Positions
/// beyond the text are clamped to the last line, one past its end.
Diagnostic make_diagnostic(Severity severity, std::string file,
                           std::span<const std::string> rawLines, SourcePos pos,
                           std::string message);

std::array<std::string, 3> render(const Diagnostic& d);

struct Transcript {
  std::vector<std::string> renderedLines;
  int errorCount = 0;

  /// The rendered lines joined with LF, each line terminated.
  std::string text() const;
};

/// Renders diagnostics in order and appends the "1 error" / "N errors"
/// trailer when at least one error is present. Notes are not counted.
Transcript render_transcript(std::span<const Diagnostic> ds);

struct GoldenDivergence {
  int line = 0;  // 1-based
  std::string expected;
  std::string actual;

  std::string describe() const;
};

class GoldenFileMissing : public std::runtime_error {
 public:
  explicit GoldenFileMissing(const std::filesystem::path& path);
};

/// Compares a transcript against a golden file, ignoring trailing whitespace
/// on each line. Returns the first divergence, or nullopt on a match.
std::optional<GoldenDivergence> compare_golden(const Transcript& t,
                                               const std::filesystem::path& goldenFile);

/// Same comparison against golden text already in memory.
std::optional<GoldenDivergence> compare_golden_text(const Transcript& t,
                                                    std::string_view golden);

}  // namespace ifcheck
