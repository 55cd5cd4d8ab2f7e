#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifcheck/semantics.hpp"
#include "ifcheck/syntax.hpp"

namespace ifcheck {

/// One listing of the algebra tower, with the golden transcripts expected for
/// it in each mode (paths relative to a golden directory).
struct CorpusEntry {
  std::string name;          // e.g. "Field"
  std::string relativePath;  // e.g. "algebra/Field.java"
  std::string content;
  std::string expectedJava8;     // e.g. "java8/Field.txt"
  std::string expectedExtended;  // e.g. "extended/Field.txt"
  bool clean = false;            // checks without diagnostics in both modes

  const std::string& golden_for(Mode mode) const {
    return mode == Mode::Java8 ? expectedJava8 : expectedExtended;
  }
};

class CorruptedCorpus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a, used to detect damage to the embedded listings.
std::uint64_t fnv1a64(std::string_view data);

/// Throws CorruptedCorpus unless `content` hashes to `expected`.
void verify_checksum(std::string_view name, std::string_view content, std::uint64_t expected);

/// The ten listings in tower order: the eight clean structures from
/// AdditiveSemigroup up to Field, then VectorSpace and VectorSpaceAH.
/// Throws CorruptedCorpus when an embedded listing fails its checksum.
std::vector<CorpusEntry> load_corpus(std::string_view suffix = ".java");

/// The eight clean listings parsed, for use as an ambient library.
std::vector<CompilationUnit> ambient_units(std::string_view suffix = ".java");

}  // namespace ifcheck
