#pragma once

// Test-only reference implementations. Nothing here calls into the semantics
// module: the oracles work on parsed, unresolved declarations and carry their
// own substitution.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ifcheck/syntax.hpp"

namespace ifcheck::testing {

using DeclMap = std::map<std::string, const InterfaceDecl*>;

DeclMap index_decls(const std::vector<CompilationUnit>& units);

/// Ancestor name -> distinct argument tuples (rendered, e.g. "Vector" or
/// "A,Box<B>"), in first-encounter order over a depth-first enumeration of
/// every extends path. Each path's arguments are obtained by composing the
/// edge substitutions from the far end back to the subject.
using OracleInstantiations = std::vector<std::pair<std::string, std::vector<std::string>>>;
OracleInstantiations brute_force_instantiations(const DeclMap& decls, const std::string& subject);

struct OracleMember {
  std::string name;
  std::vector<std::string> params;
  std::string returns;
  std::string origin;  // "Name<args>"

  friend bool operator==(const OracleMember&, const OracleMember&) = default;
};

/// Member table by path enumeration: a method declared at the end of a path
/// survives unless an earlier node on that path declares the same name and
/// parameter types; survivors are coalesced on (name, params, return).
std::vector<OracleMember> brute_force_members(const DeclMap& decls, const std::string& subject);

/// Groups of (name, params) with more than one distinct return type, each
/// rendered as "name(P1, P2)".
std::vector<std::string> brute_force_ambiguities(const std::vector<OracleMember>& members);

/// Random acyclic hierarchy of 1..maxInterfaces generic interfaces with up to
/// two parameters each (always named T and U, so substitution must not
/// capture), ground names G0/G1, an opaque Box<_>, and a few methods.
std::string random_hierarchy_source(std::mt19937_64& rng, int maxInterfaces = 6);

/// Random type over variables a, b, c and ground names, nested up to `depth`.
TypeRef random_type(std::mt19937_64& rng, int depth);

}  // namespace ifcheck::testing
