#include "ifcheck/driver.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ifcheck/algebra/laws.hpp"
#include "ifcheck/corpus.hpp"
#include "ifcheck/syntax.hpp"

namespace ifcheck {

Transcript CheckRun::transcript() const {
  std::vector<Diagnostic> all;
  for (const auto& f : files) all.insert(all.end(), f.diagnostics.begin(), f.diagnostics.end());
  all.insert(all.end(), elsewhere.begin(), elsewhere.end());
  return render_transcript(all);
}

CheckRun check_sources(std::span<const SourceFile> inputs, Mode mode, bool ambient,
                       std::string_view suffix) {
  CheckRun run;
  std::vector<ParseResult> parsed;
  parsed.reserve(inputs.size());
  std::set<std::string, std::less<>> declared;
  for (const auto& input : inputs) {
    parsed.push_back(parse_source(input.content, input.label));
    for (const auto& decl : parsed.back().unit.decls) declared.insert(decl.name);
  }

  std::vector<CompilationUnit> units;
  std::vector<std::size_t> unitInput;  // index into inputs, or npos for ambient
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (parsed[i].has_errors()) continue;
    units.push_back(parsed[i].unit);
    unitInput.push_back(i);
  }
  if (ambient) {
    for (auto& unit : ambient_units(suffix)) {
      bool shadowed = std::any_of(unit.decls.begin(), unit.decls.end(),
                                  [&](const auto& d) { return declared.contains(d.name); });
      if (shadowed) continue;
      units.push_back(std::move(unit));
      unitInput.push_back(std::string::npos);
    }
  }
  const auto hierarchy = build_hierarchy(units);

  for (std::size_t i = 0; i < inputs.size(); ++i) {
    FileResult file;
    file.label = inputs[i].label;
    file.diagnostics = parsed[i].diagnostics;
    run.files.push_back(std::move(file));
  }
  // Hierarchy diagnostics carry the unit's source name; route them back.
  for (const auto& d : hierarchy.diagnostics) {
    auto it = std::find_if(run.files.begin(), run.files.end(),
                           [&](const FileResult& f) { return f.label == d.file; });
    (it == run.files.end() ? run.elsewhere : it->diagnostics).push_back(d);
  }

  for (std::size_t u = 0; u < units.size(); ++u) {
    if (unitInput[u] == std::string::npos) continue;
    auto& file = run.files[unitInput[u]];
    for (const auto& decl : units[u].decls) {
      const auto* entry = hierarchy.table.find(decl.name);
      // Skip the losing side of a duplicate.
      if (!entry || entry->unit->sourceName != units[u].sourceName || !(entry->decl.pos == decl.pos)) {
        continue;
      }
      auto report = check_interface(decl.name, hierarchy.table, mode);
      file.diagnostics.insert(file.diagnostics.end(), report.diagnostics.begin(),
                              report.diagnostics.end());
      file.reports.push_back(std::move(report));
    }
  }
  return run;
}

namespace {

// Own members carry the subject's parameters as their origin arguments.
std::string header_of(const CheckReport& report) {
  for (const auto& m : report.members) {
    if (m.origin.interfaceName == report.interfaceName) return m.origin.str();
  }
  return report.interfaceName;
}

}  // namespace

void write_members_text(const CheckRun& run, std::ostream& out) {
  for (const auto& file : run.files) {
    for (const auto& report : file.reports) {
      if (report.members.empty() && report.error_count() > 0) continue;
      out << "interface " << header_of(report) << "\n";
      for (const auto& m : report.members) out << m.str() << "\n";
    }
  }
}

void write_members_machine(const CheckRun& run, Mode mode, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["mode"] = mode_name(mode);
  auto interfaces = nlohmann::ordered_json::array();
  for (const auto& file : run.files) {
    for (const auto& report : file.reports) {
      if (report.members.empty() && report.error_count() > 0) continue;
      nlohmann::ordered_json iface;
      iface["name"] = report.interfaceName;
      iface["file"] = file.label;
      auto members = nlohmann::ordered_json::array();
      for (const auto& m : report.members) {
        nlohmann::ordered_json jm;
        jm["name"] = m.name;
        auto params = nlohmann::ordered_json::array();
        for (const auto& p : m.paramTypes) params.push_back(to_string(p));
        jm["params"] = std::move(params);
        jm["returns"] = to_string(m.returnType);
        jm["throws"] = m.throwsSet;
        jm["origin"] = m.origin.str();
        members.push_back(std::move(jm));
      }
      iface["members"] = std::move(members);
      interfaces.push_back(std::move(iface));
    }
  }
  doc["interfaces"] = std::move(interfaces);
  out << doc.dump(2) << "\n";
}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

std::vector<SourceFile> corpus_sources(std::string_view suffix) {
  std::vector<SourceFile> out;
  for (auto& e : load_corpus(suffix)) out.push_back({e.relativePath, std::move(e.content)});
  return out;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.empty() && !config.corpus) {
    err << "ifcheck: no input files\n";
    return exit_code::kUsage;
  }
  std::vector<SourceFile> sources;
  if (config.corpus) sources = corpus_sources(config.suffix);
  for (const auto& path : config.inputs) {
    auto content = read_file(path);
    if (!content) {
      err << "ifcheck: cannot read file: " << path.string() << "\n";
      return exit_code::kUsage;
    }
    sources.push_back({path.string(), std::move(*content)});
  }

  const auto result = check_sources(sources, config.mode, config.ambient, config.suffix);
  const auto transcript = result.transcript();
  err << transcript.text();
  switch (config.emitMembers) {
    case EmitMembers::Off: break;
    case EmitMembers::Text: write_members_text(result, out); break;
    case EmitMembers::Machine: write_members_machine(result, config.mode, out); break;
  }
  return transcript.errorCount > 0 ? exit_code::kErrors : exit_code::kOk;
}

namespace {

Transcript corpus_transcript(const CorpusEntry& entry, Mode mode) {
  const SourceFile source{entry.relativePath, entry.content};
  return check_sources(std::span(&source, 1), mode).transcript();
}

}  // namespace

int verify_goldens(const CliConfig& config, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!config.goldenDir) {
    err << "ifcheck: --golden requires a directory\n";
    return exit_code::kUsage;
  }
  const fs::path& dir = *config.goldenDir;
  std::error_code ec;
  if (!fs::is_directory(dir, ec) || fs::is_empty(dir, ec)) {
    err << "ifcheck: golden directory is missing or empty: " << dir.string() << "\n";
    return exit_code::kUsage;
  }

  int compared = 0;
  int diverged = 0;
  for (const auto& entry : load_corpus(config.suffix)) {
    for (Mode mode : {Mode::Java8, Mode::Extended}) {
      const auto golden = dir / entry.golden_for(mode);
      std::optional<GoldenDivergence> divergence;
      try {
        divergence = compare_golden(corpus_transcript(entry, mode), golden);
      } catch (const GoldenFileMissing& e) {
        err << "ifcheck: " << e.what() << "\n";
        return exit_code::kUsage;
      }
      ++compared;
      if (divergence) {
        ++diverged;
        out << "MISMATCH " << entry.relativePath << " [" << mode_name(mode) << "]: "
            << divergence->describe() << "\n";
      }
    }
  }
  if (diverged == 0) {
    out << "all " << compared << " transcripts match\n";
    return exit_code::kOk;
  }
  out << diverged << " of " << compared << " transcripts diverge\n";
  return exit_code::kErrors;
}

void write_goldens(const std::filesystem::path& dir, std::string_view suffix) {
  for (const auto& entry : load_corpus(suffix)) {
    for (Mode mode : {Mode::Java8, Mode::Extended}) {
      const auto path = dir / entry.golden_for(mode);
      std::filesystem::create_directories(path.parent_path());
      std::ofstream(path, std::ios::binary) << corpus_transcript(entry, mode).text();
    }
  }
}

int run_laws(std::string_view structure, int samples, std::uint64_t seed, std::ostream& out,
             std::ostream& err) {
  using namespace algebra;
  if (samples < 1) {
    err << "ifcheck: --samples must be at least 1\n";
    return exit_code::kUsage;
  }
  LawReport report;
  if (structure == "rationals") {
    report = check_laws(rational_field_witness(), samples, seed);
  } else if (structure == "integers") {
    report = check_laws(integer_ring_witness(), samples, seed);
  } else if (structure == "vectors") {
    report = check_laws(rational_vector_space_witness(3), samples, seed);
  } else {
    err << "ifcheck: unknown structure: " << structure << "\n";
    return exit_code::kUsage;
  }
  out << report.render();
  return report.passed() ? exit_code::kOk : exit_code::kErrors;
}

}  // namespace ifcheck
