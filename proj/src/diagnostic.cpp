#include "ifcheck/diagnostic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ifcheck {

std::string_view severity_name(Severity severity) {
  return severity == Severity::Error ? "error" : "note";
}

std::vector<std::string> split_lines(std::string_view source) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < source.size()) {
    auto nl = source.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(source.substr(start));
      break;
    }
    lines.emplace_back(source.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) lines.emplace_back();
  return lines;
}

Diagnostic make_diagnostic(Severity severity, std::string file,
                           std::span<const std::string> rawLines, SourcePos pos,
                           std::string message) {
  Diagnostic d;
  d.severity = severity;
  d.file = std::move(file);
  d.message = std::move(message);
  if (rawLines.empty()) {
    d.line = 1;
    d.caretColumn = 1;
    return d;
  }
  int line = std::clamp(pos.line, 1, static_cast<int>(rawLines.size()));
  d.line = line;
  d.echoLine = rawLines[static_cast<std::size_t>(line - 1)];
  int maxColumn = static_cast<int>(d.echoLine.size()) + 1;
  d.caretColumn = line == pos.line ? std::clamp(pos.column, 1, maxColumn) : maxColumn;
  return d;
}

std::array<std::string, 3> render(const Diagnostic& d) {
  std::string header = d.file + ":" + std::to_string(d.line) + ": " +
                       std::string(severity_name(d.severity)) + ": " + d.message;
  std::string caret(static_cast<std::size_t>(std::max(d.caretColumn - 1, 0)), ' ');
  caret += '^';
  return {std::move(header), d.echoLine, std::move(caret)};
}

std::string Transcript::text() const {
  std::string out;
  for (const auto& line : renderedLines) {
    out += line;
    out += '\n';
  }
  return out;
}

Transcript render_transcript(std::span<const Diagnostic> ds) {
  Transcript t;
  for (const auto& d : ds) {
    for (auto& line : render(d)) t.renderedLines.push_back(std::move(line));
    if (d.severity == Severity::Error) ++t.errorCount;
  }
  if (t.errorCount == 1) {
    t.renderedLines.emplace_back("1 error");
  } else if (t.errorCount > 1) {
    t.renderedLines.push_back(std::to_string(t.errorCount) + " errors");
  }
  return t;
}

std::string GoldenDivergence::describe() const {
  std::ostringstream os;
  os << "first divergence at line " << line << "\n"
     << "  expected: " << expected << "\n"
     << "  actual:   " << actual;
  return os.str();
}

GoldenFileMissing::GoldenFileMissing(const std::filesystem::path& path)
    : std::runtime_error("golden file not found: " + path.string()) {}

namespace {

std::string_view rstrip(std::string_view s) {
  auto end = s.find_last_not_of(" \t\r");
  return end == std::string_view::npos ? std::string_view{} : s.substr(0, end + 1);
}

}  // namespace

std::optional<GoldenDivergence> compare_golden_text(const Transcript& t,
                                                    std::string_view golden) {
  std::vector<std::string> expected;
  if (!golden.empty()) expected = split_lines(golden);
  const auto& actual = t.renderedLines;
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool haveExpected = i < expected.size();
    const bool haveActual = i < actual.size();
    if (haveExpected && haveActual && rstrip(expected[i]) == rstrip(actual[i])) continue;
    GoldenDivergence div;
    div.line = static_cast<int>(i) + 1;
    div.expected = haveExpected ? expected[i] : "<end of file>";
    div.actual = haveActual ? actual[i] : "<end of output>";
    return div;
  }
  return std::nullopt;
}

std::optional<GoldenDivergence> compare_golden(const Transcript& t,
                                               const std::filesystem::path& goldenFile) {
  std::ifstream in(goldenFile, std::ios::binary);
  if (!in) throw GoldenFileMissing(goldenFile);
  std::ostringstream buf;
  buf << in.rdbuf();
  return compare_golden_text(t, buf.str());
}

}  // namespace ifcheck
